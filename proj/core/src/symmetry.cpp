#include "signet/symmetry.hpp"

#include <algorithm>
#include <map>

#include "signet/numeric.hpp"

namespace signet {

bool PermutationAutomorphism::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (mapping[i] != i) return false;
  return true;
}

Eigen::MatrixXd PermutationAutomorphism::matrix() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size(), size());
  for (int i = 0; i < size(); ++i) m(i, mapping[i]) = 1.0;
  return m;
}

RatMat PermutationAutomorphism::matrix_exact() const {
  RatMat m(size(), size());
  for (int i = 0; i < size(); ++i) m(i, mapping[i]) = Rational(1);
  return m;
}

namespace {

// Shared backtracking core: enumerates permutations of 0..n-1 in lex order
// that preserve an exact weight table entry-for-entry and keep nodes within
// their invariant class. Stops after the first hit if first_only.
class PermutationSearch {
 public:
  PermutationSearch(const RatMat& weights, std::vector<int> invariant_class, std::vector<char> fixed)
      : w_(weights), klass_(std::move(invariant_class)), fixed_(std::move(fixed)), n_(weights.rows()) {}

  std::vector<std::vector<int>> run(bool first_only, bool skip_identity) {
    first_only_ = first_only;
    skip_identity_ = skip_identity;
    image_.assign(n_, -1);
    used_.assign(n_, 0);
    results_.clear();
    extend(0);
    return results_;
  }

 private:
  void extend(int i) {
    if (first_only_ && !results_.empty()) return;
    if (i == n_) {
      if (skip_identity_) {
        bool identity = true;
        for (int k = 0; k < n_; ++k)
          if (image_[k] != k) {
            identity = false;
            break;
          }
        if (identity) return;
      }
      results_.push_back(image_);
      return;
    }
    for (int img = 0; img < n_; ++img) {
      if (used_[img]) continue;
      if (fixed_[i] && img != i) continue;
      if (fixed_[img] && img != i) continue;
      if (klass_[img] != klass_[i]) continue;
      bool ok = w_(i, i) == w_(img, img);
      for (int j = 0; ok && j < i; ++j)
        if (w_(i, j) != w_(img, image_[j]) || w_(j, i) != w_(image_[j], img)) ok = false;
      if (!ok) continue;
      image_[i] = img;
      used_[img] = 1;
      extend(i + 1);
      used_[img] = 0;
      image_[i] = -1;
      if (first_only_ && !results_.empty()) return;
    }
  }

  const RatMat& w_;
  std::vector<int> klass_;
  std::vector<char> fixed_;
  int n_;
  bool first_only_ = false, skip_identity_ = false;
  std::vector<int> image_;
  std::vector<char> used_;
  std::vector<std::vector<int>> results_;
};

// Invariant classes from (degree, sorted |w| multiset, sorted w multiset).
std::vector<int> weight_invariant_classes(const RatMat& weights) {
  const int n = weights.rows();
  std::vector<int> klass(n, 0);
  std::map<std::pair<std::vector<Rational>, std::vector<Rational>>, int> index;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> abs_row, signed_row;
    for (int j = 0; j < n; ++j) {
      if (j == i || weights(i, j).numerator() == 0) continue;
      abs_row.push_back(abs(weights(i, j)));
      signed_row.push_back(weights(i, j));
    }
    std::sort(abs_row.begin(), abs_row.end());
    std::sort(signed_row.begin(), signed_row.end());
    auto [it, inserted] = index.emplace(std::make_pair(std::move(abs_row), std::move(signed_row)),
                                        static_cast<int>(index.size()));
    klass[i] = it->second;
  }
  return klass;
}

}  // namespace

std::vector<PermutationAutomorphism> find_automorphisms(const SignedGraph& g, const std::vector<int>& fixed,
                                                        int max_nodes) {
  if (g.node_count() > max_nodes)
    throw CapExceededError("automorphism search capped at " + std::to_string(max_nodes) + " nodes, graph has " +
                           std::to_string(g.node_count()));
  std::vector<char> fixed_mask(g.node_count(), 0);
  for (int i : fixed) {
    if (i < 0 || i >= g.node_count()) throw ValidationError("fixed node index out of range");
    fixed_mask[i] = 1;
  }
  const RatMat a = g.adjacency_exact();
  PermutationSearch search(a, weight_invariant_classes(a), std::move(fixed_mask));
  std::vector<PermutationAutomorphism> out;
  for (auto& image : search.run(false, false)) out.push_back({std::move(image)});
  return out;
}

std::optional<PermutationAutomorphism> input_symmetry(const LeaderFollowerSystem& sys) {
  const int nf = sys.floating_block.rows();
  // Encode J A^f = A^f J through the weight table (diagonal included) and
  // J B^f = B^f through invariant classes keyed by the B^f row.
  std::vector<int> klass(nf, 0);
  std::map<std::vector<Rational>, int> index;
  for (int i = 0; i < nf; ++i) {
    std::vector<Rational> row;
    for (int j = 0; j < sys.input_block.cols(); ++j) row.push_back(sys.input_block(i, j));
    auto [it, inserted] = index.emplace(std::move(row), static_cast<int>(index.size()));
    klass[i] = it->second;
  }
  PermutationSearch search(sys.floating_block, std::move(klass), std::vector<char>(nf, 0));
  auto hits = search.run(true, true);
  if (hits.empty()) return std::nullopt;
  return PermutationAutomorphism{std::move(hits.front())};
}

SignedAutomorphism signed_automorphism(const PermutationAutomorphism& j, const Gauge& floating_gauge) {
  if (j.size() != floating_gauge.size())
    throw ValidationError("gauge and permutation dimensions do not match");
  SignedAutomorphism out;
  out.source = j;
  out.floating_gauge = floating_gauge;
  out.matrix = Eigen::MatrixXd::Zero(j.size(), j.size());
  for (int i = 0; i < j.size(); ++i)
    out.matrix(i, j.mapping[i]) = floating_gauge.sigma[i] * floating_gauge.sigma[j.mapping[i]];
  return out;
}

namespace {

Eigen::MatrixXd reshape_to_matrix(const Eigen::VectorXd& v, int n) {
  Eigen::MatrixXd m(n, n);
  for (int j = 0; j < n; ++j) m.col(j) = v.segment(j * n, n);
  return m;
}

}  // namespace

CommutantCertificate commutant_feasibility(const Eigen::MatrixXd& l, const std::vector<LinearMatrixConstraint>& constraints,
                                           int max_dim) {
  const int n = static_cast<int>(l.rows());
  if (l.cols() != n) throw ValidationError("commutant solve requires a square matrix");
  if (n > max_dim)
    throw CapExceededError("commutant solve capped at " + std::to_string(max_dim) + " states, got " + std::to_string(n));

  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  long rows = static_cast<long>(n) * n;
  for (const auto& c : constraints) rows += static_cast<long>(c.left.rows()) * c.right.cols();

  Eigen::MatrixXd op(rows, n * n);
  op.topRows(n * n) = kronecker(l.transpose(), eye) - kronecker(eye, l);  // vec(XL - LX)
  long at = static_cast<long>(n) * n;
  for (const auto& c : constraints) {
    if (c.left.cols() != n || c.right.rows() != n) throw ValidationError("constraint dimensions do not match");
    op.middleRows(at, c.left.rows() * c.right.cols()) = kronecker(c.right.transpose(), c.left);
    at += c.left.rows() * c.right.cols();
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(op, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = n * 1e-12 * (sv.size() ? sv(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;

  CommutantCertificate cert;
  const double residual_bound = 1e-9 * std::max(1.0, max_abs(l));
  for (int k = rank; k < n * n; ++k) {
    Eigen::MatrixXd x = reshape_to_matrix(svd.matrixV().col(k), n);
    double residual = max_abs(x * l - l * x);
    for (const auto& c : constraints) residual = std::max(residual, max_abs(c.left * x * c.right));
    if (residual > residual_bound)
      throw NumericalError("commutant nullspace vector fails residual verification (" + std::to_string(residual) + ")");
    cert.basis.push_back(std::move(x));
  }
  if (!cert.basis.empty()) cert.nontrivial_witness = cert.basis.front();
  return cert;
}

namespace {

std::string classify_witness(const Eigen::MatrixXd& x) {
  const int n = static_cast<int>(x.rows());
  const Eigen::MatrixXd j = Eigen::MatrixXd::Identity(n, n) + x;
  bool signed_perm = true;
  for (int i = 0; i < n && signed_perm; ++i) {
    int nonzero = 0;
    for (int c = 0; c < n; ++c) {
      double v = std::abs(j(i, c));
      if (v > 1e-9) {
        ++nonzero;
        if (std::abs(v - 1.0) > 1e-9) signed_perm = false;
      }
    }
    if (nonzero != 1) signed_perm = false;
  }
  if (signed_perm) return "signed-permutation";
  if (max_abs(x - x.transpose()) <= 1e-9) return "symmetric-commutant-element";
  return "general-commutant-element";
}

}  // namespace

CommutantCertificate check_theorem4_conditions(const InfluencedSystem& sys, const std::optional<Gauge>& gauge,
                                               int max_dim) {
  const int n = sys.state_dim();
  const Eigen::MatrixXd l = sys.laplacian.to_double();
  const Eigen::MatrixXd g = gauge ? gauge->matrix() : Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd b_s = g * sys.b_matrix();
  const Eigen::MatrixXd c_s = sys.c_matrix() * g;

  std::vector<int> complement;
  {
    std::vector<char> is_out(n, 0);
    for (int i : sys.output_nodes) is_out[i] = 1;
    for (int i = 0; i < n; ++i)
      if (!is_out[i]) complement.push_back(i);
  }
  Eigen::MatrixXd c_s_rest(static_cast<int>(complement.size()), n);
  for (size_t i = 0; i < complement.size(); ++i) {
    c_s_rest.row(static_cast<int>(i)).setZero();
    c_s_rest(static_cast<int>(i), complement[i]) = 1.0;
  }
  c_s_rest = c_s_rest * g;

  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  const LinearMatrixConstraint annihilate_b{eye, b_s};

  // (a): X L_s = L_s X, X B_s = 0, X != 0
  CommutantCertificate cert = commutant_feasibility(l, {annihilate_b}, max_dim);
  cert.cond_a = !cert.basis.empty();

  // (b): adds C_s X C_s(V \ O)^T = 0; nontrivial iff C_s X C_s^T != 0 (Z != I)
  if (cert.cond_a && complement.size() > 0) {
    auto sub = commutant_feasibility(l, {annihilate_b, {c_s, c_s_rest.transpose()}}, max_dim);
    for (const auto& x : sub.basis) {
      if (max_abs(c_s * x * c_s.transpose()) > 1e-9) {
        cert.cond_b = true;
        cert.nontrivial_witness = x;
        break;
      }
    }
  } else if (cert.cond_a && complement.empty()) {
    // O = V: the off-diagonal block is empty, only Z != I remains
    for (const auto& x : cert.basis) {
      if (max_abs(c_s * x * c_s.transpose()) > 1e-9) {
        cert.cond_b = true;
        cert.nontrivial_witness = x;
        break;
      }
    }
  }

  // (c): adds X v_i = 0 for every eigenvector with lambda_i(L_s) > 0
  if (cert.cond_a) {
    const auto eig = sym_eigen(l);
    const double tol = zero_eig_tolerance(eig.values(n - 1));
    int first_positive = 0;
    while (first_positive < n && eig.values(first_positive) <= tol) ++first_positive;
    Eigen::MatrixXd v_pos = eig.vectors.rightCols(n - first_positive);
    if (v_pos.cols() == 0) {
      cert.cond_c = cert.cond_a;
      cert.cond_abc = cert.cond_b;
    } else {
      auto sub_c = commutant_feasibility(l, {annihilate_b, {eye, v_pos}}, max_dim);
      cert.cond_c = !sub_c.basis.empty();
      if (cert.cond_b) {
        auto sub_abc =
            commutant_feasibility(l, {annihilate_b, {c_s, c_s_rest.transpose()}, {eye, v_pos}}, max_dim);
        for (const auto& x : sub_abc.basis) {
          if (max_abs(c_s * x * c_s.transpose()) > 1e-9) {
            cert.cond_abc = true;
            break;
          }
        }
      }
    }
  }

  if (cert.nontrivial_witness) cert.witness_class = classify_witness(*cert.nontrivial_witness);
  cert.assumptions.push_back("R = O: Theorem 4's undefined region R is taken to be the output set");
  cert.assumptions.push_back(
      "theorem-4 items 3/4 both read 'output unstabilizable' in the source; (a)&(c) is applied as state "
      "unstabilizability of (-L_s, B)");
  if (!gauge) cert.assumptions.push_back("identity gauge: graph not structurally balanced or no gauge supplied");
  if (!cert.witness_class.empty()) cert.assumptions.push_back("witness class: " + cert.witness_class);
  return cert;
}

}  // namespace signet
