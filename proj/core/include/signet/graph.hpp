#pragma once

#include <Eigen/Dense>

#include <string>
#include <unordered_map>
#include <vector>

#include "signet/ratmat.hpp"

namespace signet {

struct EdgeSpec {
  std::string u, v;
  Rational w;
};

struct Edge {
  int u, v;  // node indices, u < v
  Rational w;
};

/// Undirected signed weighted graph. Immutable after construction; the node
/// declaration order is the canonical ordering every derived matrix uses.
class SignedGraph {
 public:
  /// Validates and builds. Rejects duplicate nodes, unknown endpoints,
  /// self-loops, zero weights and duplicate unordered pairs, each with a
  /// distinct error message.
  static SignedGraph build(std::vector<std::string> nodes, const std::vector<EdgeSpec>& edges);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& node_name(int i) const { return nodes_.at(i); }

  /// Index of a declared node; throws ValidationError for unknown names.
  int index_of(const std::string& name) const;
  bool has_node(const std::string& name) const { return index_.count(name) > 0; }

  /// (neighbor, weight) pairs in edge declaration order.
  const std::vector<std::vector<std::pair<int, Rational>>>& adjacency_lists() const { return adj_; }

  RatMat adjacency_exact() const;
  RatMat laplacian_exact() const;  // L_s = D_s - A_s with |.|-degrees
  Eigen::MatrixXd adjacency() const { return adjacency_exact().to_double(); }
  Eigen::MatrixXd laplacian() const { return laplacian_exact().to_double(); }

  /// Same topology with every weight replaced by its absolute value.
  SignedGraph underlying_unsigned() const;
  bool is_unsigned() const;

  bool is_connected() const;
  std::vector<std::vector<int>> components() const;

 private:
  SignedGraph() = default;

  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<std::pair<int, Rational>>> adj_;
};

/// Eq.-style block partition of L_s: floating rows first, then inputs.
/// floating_block is A_s^f, input_block is B_s^f; stacking
/// [A_s^f B_s^f; B_s^f^T A_s^i] under the reordering reproduces L_s.
struct LeaderFollowerSystem {
  RatMat floating_block;  // (n-q) x (n-q)
  RatMat input_block;     // (n-q) x q
  RatMat input_corner;    // q x q, the A_s^i block
  std::vector<int> input_nodes;
  std::vector<int> floating_nodes;

  Eigen::MatrixXd floating_matrix() const { return floating_block.to_double(); }
  Eigen::MatrixXd input_matrix() const { return input_block.to_double(); }
};

/// Splits the Laplacian around a nonempty strict subset of input nodes.
/// Floating and input nodes each keep the canonical ordering.
LeaderFollowerSystem leader_follower_split(const SignedGraph& g, const std::vector<int>& inputs);

/// Convenience overload resolving node names.
LeaderFollowerSystem leader_follower_split(const SignedGraph& g, const std::vector<std::string>& inputs);

}  // namespace signet
