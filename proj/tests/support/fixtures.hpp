#pragma once

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "signet/balance.hpp"
#include "signet/graph.hpp"

namespace signet::testing {

// Figure-1 style 4-node graph: star into node 4 with negative spokes plus the
// positive path 1-2-3. Balanced, input-symmetric about node 4.
inline SignedGraph make_ga() {
  return SignedGraph::build({"1", "2", "3", "4"}, {{"1", "2", rational(1)},
                                                   {"2", "3", rational(1)},
                                                   {"1", "4", rational(-1)},
                                                   {"2", "4", rational(-1)},
                                                   {"3", "4", rational(-1)}});
}

// Same topology with w_23 = -1: structurally unbalanced.
inline SignedGraph make_gb() {
  return SignedGraph::build({"1", "2", "3", "4"}, {{"1", "2", rational(1)},
                                                   {"2", "3", rational(-1)},
                                                   {"1", "4", rational(-1)},
                                                   {"2", "4", rational(-1)},
                                                   {"3", "4", rational(-1)}});
}

// Balanced 6-node MIMO instance: twin pairs {1,2} and {3,4} fully coupled to
// each other, inputs 5 and 6 attached negatively to one pair each.
inline SignedGraph make_mimo6() {
  return SignedGraph::build({"1", "2", "3", "4", "5", "6"}, {{"1", "3", rational(1)},
                                                             {"1", "4", rational(1)},
                                                             {"2", "3", rational(1)},
                                                             {"2", "4", rational(1)},
                                                             {"1", "5", rational(-1)},
                                                             {"2", "5", rational(-1)},
                                                             {"3", "6", rational(-1)},
                                                             {"4", "6", rational(-1)}});
}

inline std::vector<std::string> index_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return names;
}

// Random connected simple graph: random spanning tree plus extra edges.
// Weights are nonzero integers in [-max_weight, max_weight] (signed) or
// [1, max_weight] (unsigned).
inline SignedGraph random_connected_graph(std::mt19937& rng, int n, int extra_edges, bool allow_negative,
                                          int max_weight = 2) {
  const auto names = index_names(n);
  std::vector<EdgeSpec> edges;
  std::set<std::pair<int, int>> used;
  std::uniform_int_distribution<int> weight_dist(1, max_weight);
  std::bernoulli_distribution flip(0.5);
  auto weight = [&]() {
    Rational w(weight_dist(rng));
    return allow_negative && flip(rng) ? -w : w;
  };
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent_dist(0, v - 1);
    int u = parent_dist(rng);
    used.insert({u, v});
    edges.push_back({names[u], names[v], weight()});
  }
  std::uniform_int_distribution<int> node_dist(0, n - 1);
  for (int k = 0; k < extra_edges; ++k) {
    int u = node_dist(rng), v = node_dist(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!used.insert({u, v}).second) continue;
    edges.push_back({names[u], names[v], weight()});
  }
  return SignedGraph::build(names, edges);
}

inline Gauge random_gauge(std::mt19937& rng, int n) {
  std::bernoulli_distribution flip(0.5);
  Gauge g;
  for (int i = 0; i < n; ++i) g.sigma.push_back(flip(rng) ? 1 : -1);
  return g;
}

// Balanced-by-construction signed graph: gauge an unsigned connected graph.
inline SignedGraph random_balanced_graph(std::mt19937& rng, int n, int extra_edges, Gauge* gauge_out = nullptr) {
  const SignedGraph base = random_connected_graph(rng, n, extra_edges, false);
  const Gauge gauge = random_gauge(rng, n);
  if (gauge_out) *gauge_out = gauge;
  return apply_gauge(base, gauge);
}

// Unbalanced graph: resample random signed graphs until balance fails (a
// negative triangle is appended as a fallback for stubborn draws).
inline SignedGraph random_unbalanced_graph(std::mt19937& rng, int n, int extra_edges) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    SignedGraph g = random_connected_graph(rng, n, extra_edges, true);
    if (!detect_balance(g).balanced) return g;
  }
  // Force a negative cycle on the first three nodes.
  const auto names = index_names(n);
  std::vector<EdgeSpec> edges;
  for (int v = 1; v < n; ++v) edges.push_back({names[v - 1], names[v], rational(1)});
  edges.push_back({names[0], names[2], rational(-1)});
  return SignedGraph::build(names, edges);
}

inline Eigen::VectorXd random_state(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = dist(rng);
  return x;
}

}  // namespace signet::testing
