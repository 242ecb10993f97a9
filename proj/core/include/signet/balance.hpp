#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

/// Diagonal +-1 sign vector. As a matrix G it satisfies G = G^T = G^{-1}.
struct Gauge {
  std::vector<int> sigma;

  int size() const { return static_cast<int>(sigma.size()); }
  Eigen::MatrixXd matrix() const {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(size(), size());
    for (int i = 0; i < size(); ++i) g(i, i) = sigma[i];
    return g;
  }
  RatMat matrix_exact() const {
    RatMat g(size(), size());
    for (int i = 0; i < size(); ++i) g(i, i) = Rational(sigma[i]);
    return g;
  }
  Gauge negated() const {
    Gauge g = *this;
    for (int& s : g.sigma) s = -s;
    return g;
  }
  Gauge restricted(const std::vector<int>& indices) const {
    Gauge g;
    for (int i : indices) g.sigma.push_back(sigma.at(i));
    return g;
  }
};

struct BalanceResult {
  bool balanced = false;
  std::optional<Gauge> gauge;                        // present iff balanced
  std::optional<std::vector<int>> witness_cycle;     // closed walk, odd negative count
  std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition;
};

/// Sign-consistent 2-coloring by traversal: the root of each component gets
/// +1 and sigma_v = sign(w_uv) sigma_u propagates along tree edges. A
/// conflicting non-tree edge closes the witness cycle. Disconnected graphs
/// are handled per component and conjoined; the empty graph is balanced.
BalanceResult detect_balance(const SignedGraph& g);

/// Edge (u,v,w) -> (u,v, sigma_u sigma_v w). Applying a gauge twice is the
/// identity; the gauge from detect_balance on a balanced graph makes every
/// weight positive.
SignedGraph apply_gauge(const SignedGraph& g, const Gauge& gauge);

/// The five equivalent balance characterizations, evaluated independently.
struct EquivalenceReport {
  bool balanced_by_traversal = false;
  bool gauge_restores_positivity = false;
  bool fundamental_cycles_positive = false;
  bool laplacian_has_zero_eigenvalue = false;
  bool bipartition_valid = false;
  double lambda_min = 0.0;
  double lambda_max = 0.0;

  bool all_agree() const {
    return balanced_by_traversal == gauge_restores_positivity &&
           balanced_by_traversal == fundamental_cycles_positive &&
           balanced_by_traversal == laplacian_has_zero_eigenvalue &&
           balanced_by_traversal == bipartition_valid;
  }
};

EquivalenceReport verify_equivalences(const SignedGraph& g);

/// Scale-aware zero tolerance used for "L_s has a zero eigenvalue".
inline double zero_eig_tolerance(double lambda_max, double tol = 1e-9) {
  return tol * std::max(1.0, lambda_max);
}

}  // namespace signet
