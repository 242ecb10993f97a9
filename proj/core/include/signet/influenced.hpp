#pragma once

#include <Eigen/Dense>

#include <vector>

#include "signet/graph.hpp"

namespace signet {

/// The influenced dynamics xdot = -L_s x + B(I) u, y = C(O) x, with B and C
/// unit selection matrices over the input and output node sets.
struct InfluencedSystem {
  RatMat laplacian;
  std::vector<int> input_nodes;
  std::vector<int> output_nodes;

  int state_dim() const { return laplacian.rows(); }

  RatMat b_exact() const {
    RatMat b(state_dim(), static_cast<int>(input_nodes.size()));
    for (size_t j = 0; j < input_nodes.size(); ++j) b(input_nodes[j], static_cast<int>(j)) = Rational(1);
    return b;
  }
  RatMat c_exact() const {
    RatMat c(static_cast<int>(output_nodes.size()), state_dim());
    for (size_t i = 0; i < output_nodes.size(); ++i) c(static_cast<int>(i), output_nodes[i]) = Rational(1);
    return c;
  }
  Eigen::MatrixXd b_matrix() const { return b_exact().to_double(); }
  Eigen::MatrixXd c_matrix() const { return c_exact().to_double(); }
};

inline InfluencedSystem make_influenced(const SignedGraph& g, std::vector<int> inputs, std::vector<int> outputs) {
  for (int i : inputs)
    if (i < 0 || i >= g.node_count()) throw ValidationError("input node index out of range");
  for (int i : outputs)
    if (i < 0 || i >= g.node_count()) throw ValidationError("output node index out of range");
  if (inputs.empty()) throw ValidationError("input set is empty");
  if (outputs.empty()) throw ValidationError("output set is empty");
  return {g.laplacian_exact(), std::move(inputs), std::move(outputs)};
}

}  // namespace signet
