#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "signet/balance.hpp"
#include "signet/graph.hpp"
#include "signet/influenced.hpp"

namespace signet {

/// Node permutation psi with Psi A = A Psi, [Psi]_ij = 1 iff psi(i) = j.
struct PermutationAutomorphism {
  std::vector<int> mapping;  // psi(i) = mapping[i]

  int size() const { return static_cast<int>(mapping.size()); }
  bool is_identity() const;
  Eigen::MatrixXd matrix() const;
  RatMat matrix_exact() const;
};

/// All weighted automorphisms fixing `fixed` pointwise, identity included,
/// sorted lexicographically by image sequence. Exact arithmetic throughout.
/// Backtracks over node images with (degree, |w|-multiset, w-multiset)
/// pruning; throws CapExceededError above max_nodes.
std::vector<PermutationAutomorphism> find_automorphisms(const SignedGraph& g, const std::vector<int>& fixed = {},
                                                        int max_nodes = 16);

/// Nontrivial permutation J of the floating nodes with J A^f = A^f J and
/// J B^f = B^f, or nullopt. Deterministic: lexicographically smallest
/// nontrivial image sequence.
std::optional<PermutationAutomorphism> input_symmetry(const LeaderFollowerSystem& sys);

/// J' = G' J G' over the floating nodes (Lemma-1 construction). The gauge
/// must already be normalized so the input node carries +1.
struct SignedAutomorphism {
  Eigen::MatrixXd matrix;  // J'
  PermutationAutomorphism source;
  Gauge floating_gauge;
};

SignedAutomorphism signed_automorphism(const PermutationAutomorphism& j, const Gauge& floating_gauge);

/// left * X * right = 0 imposed on the commutant solve.
struct LinearMatrixConstraint {
  Eigen::MatrixXd left;
  Eigen::MatrixXd right;
};

struct CommutantCertificate {
  std::vector<Eigen::MatrixXd> basis;
  std::optional<Eigen::MatrixXd> nontrivial_witness;
  bool cond_a = false;
  bool cond_b = false;
  bool cond_c = false;
  bool cond_abc = false;
  std::string witness_class;
  std::vector<std::string> assumptions;

  int dimension() const { return static_cast<int>(basis.size()); }
};

/// Basis of {X : X L = L X} intersected with the constraints, by an SVD
/// nullspace of the stacked vectorized operator. Singular values below
/// n * 1e-12 * sigma_max count as zero; every basis element is re-verified
/// against the 1e-9 residual bound and failures raise NumericalError.
CommutantCertificate commutant_feasibility(const Eigen::MatrixXd& l, const std::vector<LinearMatrixConstraint>& constraints,
                                           int max_dim = 12);

/// Decides the Theorem-4 condition flags over the full commutant with
/// J_s = I + X: (a) X B_s = 0; (b) adds C_s X C_s(complement)^T = 0 with
/// C_s X C_s^T != 0; (c) adds X v = 0 for eigenvectors of positive
/// eigenvalues. Identity gauge is used when none is supplied.
CommutantCertificate check_theorem4_conditions(const InfluencedSystem& sys, const std::optional<Gauge>& gauge,
                                               int max_dim = 12);

}  // namespace signet
