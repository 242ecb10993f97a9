#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "signet/balance.hpp"
#include "signet/graph.hpp"
#include "signet/influenced.hpp"
#include "signet/partitions.hpp"
#include "signet/symmetry.hpp"

namespace signet {

/// [B, AB, ..., A^{n-1}B] in exact arithmetic. The A vs -A sign convention
/// does not change rank; callers pick the view they need.
inline RatMat controllability_matrix(const RatMat& a, const RatMat& b) { return kalman_matrix(a, b); }
Eigen::MatrixXd controllability_matrix(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

RatMat negated(const RatMat& m);

struct UncontrollableMode {
  double eigenvalue = 0.0;
  Eigen::VectorXd vector;
};

/// PBH on a symmetric A: directions inside an eigenspace orthogonal to every
/// column of B. Repeated eigenvalues are handled as whole eigenspaces via the
/// rank of the projected basis, not individual eigenvectors.
std::vector<UncontrollableMode> pbh_uncontrollable_modes(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                                         double tol = 1e-9);

enum class StructuralReason { none, theorem1, theorem3, theorem4a, common_eigenvalue };

const char* to_string(StructuralReason reason);

struct ControlVerdict {
  bool controllable = false;
  int rank = 0;
  int state_dim = 0;
  std::vector<UncontrollableMode> uncontrollable_modes;
  StructuralReason structural_reason = StructuralReason::none;
  std::optional<UncontrollableMode> structural_witness;
  std::vector<std::string> assumptions;
  std::optional<bool> stabilizable;
};

/// Theorem-1 test for a single input: structural balance plus a nontrivial
/// input symmetry of the underlying unsigned graph imply uncontrollability of
/// the leader-follower system. The structural verdict is always cross-checked
/// against PBH and exact Kalman rank; disagreement raises SoundnessError.
ControlVerdict theorem1_verdict(const SignedGraph& g, int input_node);
ControlVerdict theorem1_verdict(const SignedGraph& g, const std::string& input_node);

/// Eigenvalues shared by L_s and its floating principal block within a
/// pairing tolerance of 1e-8 * max(1, lambda_max). Nonempty means the
/// leader-follower system is uncontrollable.
std::vector<double> common_eigenvalue_check(const Eigen::MatrixXd& l, const Eigen::MatrixXd& a_f, double tol = 1e-8);

/// Theorem-3 certificate: an equitable partition pair (pi on the graph,
/// pi_f on the floating graph) whose nontrivial cells coincide and avoid the
/// inputs, plus the block diagonalizations sharing L_Q' = A_Q'^f.
struct Theorem3Certificate {
  Partition pi;        // over all nodes
  Partition pi_float;  // over floating-local indices
  BlockDiagonalization laplacian_blocks;
  BlockDiagonalization floating_blocks;
  double shared_block_residual = 0.0;
};

/// Searches by coarsest equitable refinement of {floating | each input a
/// singleton}; complete for certificates of this class. Requires balance.
std::optional<Theorem3Certificate> find_theorem3_certificate(const SignedGraph& g, const std::vector<int>& inputs);

ControlVerdict theorem3_verdict(const SignedGraph& g, const std::vector<int>& inputs);

/// Rank of [CB, C(-L_s)B, ..., C(-L_s)^{n-1}B] against the output dimension,
/// with the Theorem-4 part-2 certificate attached when one exists.
ControlVerdict output_controllability(const InfluencedSystem& sys, const std::optional<Gauge>& gauge = std::nullopt);

enum class StabilizabilityMode { state, output };

/// Modal stabilizability for symmetric A (= -L_s): every uncontrollable
/// eigenmode must be strictly stable (eigenvalue < -1e-9); in output mode,
/// non-stable uncontrollable modes invisible to C (Cv = 0) are passed.
ControlVerdict stabilizability(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, StabilizabilityMode mode,
                               const std::optional<Eigen::MatrixXd>& c = std::nullopt);

}  // namespace signet
