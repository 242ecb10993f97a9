#pragma once

#include <Eigen/Dense>

#include <vector>

#include "signet/errors.hpp"

namespace signet {

inline double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

struct SymmetricEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns match values
};

inline SymmetricEigen sym_eigen(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Numerical rank with the max(m,n) * rel_tol * sigma_max convention.
inline int svd_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-12) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  double cutoff = std::max(m.rows(), m.cols()) * rel_tol * svd.singularValues()(0);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cutoff) ++rank;
  return rank;
}

/// Orthonormal basis of the null space of m (columns). Empty matrix when trivial.
inline Eigen::MatrixXd svd_nullspace(const Eigen::MatrixXd& m, double rel_tol = 1e-12) {
  if (m.size() == 0) return Eigen::MatrixXd::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cutoff = std::max(m.rows(), m.cols()) * rel_tol * (sv.size() ? sv(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

/// Orthonormal basis of the orthogonal complement of the column space of m,
/// deterministic up to the sign convention: first entry of magnitude above
/// tolerance in each column is made positive.
inline Eigen::MatrixXd orthonormal_complement(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd basis = svd_nullspace(m.transpose());
  for (int j = 0; j < basis.cols(); ++j) {
    for (int i = 0; i < basis.rows(); ++i) {
      if (std::abs(basis(i, j)) > 1e-12) {
        if (basis(i, j) < 0) basis.col(j) = -basis.col(j);
        break;
      }
    }
  }
  return basis;
}

inline Eigen::MatrixXd kronecker(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Groups ascending eigenvalues into eigenspaces using a pairing tolerance.
inline std::vector<std::pair<double, std::vector<int>>> group_eigenvalues(const Eigen::VectorXd& values, double tol) {
  std::vector<std::pair<double, std::vector<int>>> groups;
  for (int i = 0; i < values.size(); ++i) {
    if (!groups.empty() && std::abs(values(i) - groups.back().first) <= tol) {
      groups.back().second.push_back(i);
    } else {
      groups.push_back({values(i), {i}});
    }
  }
  return groups;
}

}  // namespace signet
