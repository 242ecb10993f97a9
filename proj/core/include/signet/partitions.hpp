#pragma once

#include <Eigen/Dense>

#include <vector>

#include "signet/balance.hpp"
#include "signet/graph.hpp"

namespace signet {

/// Ordered cells over 0..n-1. Cells are kept sorted ascending and ordered by
/// their smallest member.
struct Partition {
  std::vector<std::vector<int>> cells;

  int cell_count() const { return static_cast<int>(cells.size()); }
  int node_count() const;
  std::vector<std::vector<int>> nontrivial_cells() const;
  bool is_discrete() const;
  /// Cell index per node; throws if cells are not disjoint or do not cover n nodes.
  std::vector<int> cell_of(int n) const;
  Partition normalized() const;

  static Partition single_cell(int n);
  static Partition discrete(int n);
};

/// Weighted equitability on the underlying unsigned graph: every node of C_i
/// carries the same total |w| into each C_j. Unit weights reduce this to
/// neighbor counts.
bool is_equitable(const SignedGraph& g, const Partition& pi);

/// Coarsest equitable partition refining `initial`, by iterative splitting on
/// per-cell weight-sum signatures. Terminates in at most n rounds.
Partition coarsest_equitable_refinement(const SignedGraph& g, const Partition& initial);

/// r x r quotient adjacency: per-node |w| from C_i into C_j. Rejects
/// non-equitable partitions.
RatMat quotient(const SignedGraph& g, const Partition& pi);

/// Characteristic matrix P, signed P' = G_t P, and the orthonormal split
/// T = [Pbar' | Qbar'] with Qbar' spanning R(P')-perp.
struct CharacteristicPair {
  Eigen::MatrixXd P;
  Eigen::MatrixXd P_signed;
  Eigen::MatrixXd P_bar;
  Eigen::MatrixXd Q_bar;
};

CharacteristicPair signed_characteristic(const Partition& pi, const Gauge& gauge);

/// Column space of P' is A_s-invariant: ||(I - Pbar'Pbar'^T) A_s P'||_max <= tol.
bool check_P_invariance(const Eigen::MatrixXd& a_s, const CharacteristicPair& pair, double tol = 1e-9);

struct BlockDiagonalization {
  Eigen::MatrixXd block_p;  // Pbar'^T M Pbar'
  Eigen::MatrixXd block_q;  // Qbar'^T M Qbar'
  double offdiag_residual = 0.0;        // ||Pbar'^T M Qbar'||_max
  double spectrum_gap = 0.0;            // multiset distance spec(M) vs spec(P) U spec(Q)
};

/// Projects a symmetric M onto the pair's blocks and verifies similarity by
/// comparing the multiset spectrum of the blocks with the spectrum of M.
BlockDiagonalization block_diagonalize(const Eigen::MatrixXd& m, const CharacteristicPair& pair);

/// Cauchy interlacing lambda_{n-m+i}(A) <= lambda_i(B) <= lambda_i(A) for
/// non-increasing orderings, within tol.
bool verify_interlacing(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol = 1e-9);

/// Rows of m selected in the given order (Theorem-3 restriction operator).
Eigen::MatrixXd select_rows(const Eigen::MatrixXd& m, const std::vector<int>& rows);

}  // namespace signet
