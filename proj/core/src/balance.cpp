#include "signet/balance.hpp"

#include <algorithm>

#include "signet/numeric.hpp"

namespace signet {

namespace {

// Rotates/orients a cycle so it starts at its smallest node and proceeds
// toward the smaller of that node's two cycle neighbors.
std::vector<int> canonical_cycle(std::vector<int> cycle) {
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

}  // namespace

BalanceResult detect_balance(const SignedGraph& g) {
  const int n = g.node_count();
  BalanceResult result;
  std::vector<int> sigma(n, 0), parent(n, -1);

  for (int root = 0; root < n; ++root) {
    if (sigma[root] != 0) continue;
    sigma[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [v, w] : g.adjacency_lists()[u]) {
        int expected = sign_of(w) * sigma[u];
        if (sigma[v] == 0) {
          sigma[v] = expected;
          parent[v] = u;
          stack.push_back(v);
        } else if (sigma[v] != expected) {
          // Conflict edge (u, v) closes a negative cycle through the tree.
          std::vector<char> on_u_path(n, 0);
          for (int x = u; x != -1; x = parent[x]) on_u_path[x] = 1;
          int meet = v;
          while (!on_u_path[meet]) meet = parent[meet];
          std::vector<int> cycle;
          for (int x = u; x != meet; x = parent[x]) cycle.push_back(x);
          cycle.push_back(meet);
          std::vector<int> tail;
          for (int x = v; x != meet; x = parent[x]) tail.push_back(x);
          std::reverse(tail.begin(), tail.end());
          cycle.insert(cycle.end(), tail.begin(), tail.end());
          result.balanced = false;
          result.witness_cycle = canonical_cycle(std::move(cycle));
          return result;
        }
      }
    }
  }

  result.balanced = true;
  Gauge gauge;
  gauge.sigma = std::move(sigma);
  std::pair<std::vector<int>, std::vector<int>> split;
  for (int i = 0; i < n; ++i) (gauge.sigma[i] > 0 ? split.first : split.second).push_back(i);
  result.bipartition = std::move(split);
  result.gauge = std::move(gauge);
  return result;
}

SignedGraph apply_gauge(const SignedGraph& g, const Gauge& gauge) {
  if (gauge.size() != g.node_count())
    throw ValidationError("gauge length does not match node count");
  std::vector<EdgeSpec> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges())
    edges.push_back({g.node_name(e.u), g.node_name(e.v), Rational(gauge.sigma[e.u] * gauge.sigma[e.v]) * e.w});
  return SignedGraph::build(g.nodes(), edges);
}

EquivalenceReport verify_equivalences(const SignedGraph& g) {
  EquivalenceReport report;
  const BalanceResult balance = detect_balance(g);
  report.balanced_by_traversal = balance.balanced;

  // (2) gauge from the traversal restores positivity
  if (balance.gauge) {
    const SignedGraph gauged = apply_gauge(g, *balance.gauge);
    report.gauge_restores_positivity = gauged.is_unsigned();
  }

  // (3) fundamental cycles from a spanning forest are all positive; each
  // non-tree edge closes one cycle and the cycle space is spanned by these.
  {
    const int n = g.node_count();
    std::vector<int> comp(n, -1);
    std::vector<Rational> path_sign(n, Rational(1));  // product of signs root -> node
    std::vector<int> parent(n, -1);
    bool all_positive = true;
    for (int root = 0; root < n; ++root) {
      if (comp[root] >= 0) continue;
      comp[root] = root;
      std::vector<int> stack{root};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [v, w] : g.adjacency_lists()[u]) {
          if (comp[v] < 0) {
            comp[v] = root;
            parent[v] = u;
            path_sign[v] = Rational(sign_of(w)) * path_sign[u];
            stack.push_back(v);
          }
        }
      }
    }
    for (const auto& e : g.edges()) {
      if (parent[e.u] == e.v || parent[e.v] == e.u) continue;  // tree edge
      int cycle_sign = sign_of(e.w) * sign_of(path_sign[e.u]) * sign_of(path_sign[e.v]);
      if (cycle_sign < 0) all_positive = false;
    }
    report.fundamental_cycles_positive = all_positive;
  }

  // (4) zero eigenvalue of L_s within scale-aware tolerance
  if (g.node_count() > 0) {
    const auto eig = sym_eigen(g.laplacian());
    report.lambda_min = eig.values(0);
    report.lambda_max = eig.values(eig.values.size() - 1);
    report.laplacian_has_zero_eigenvalue =
        std::abs(report.lambda_min) <= zero_eig_tolerance(report.lambda_max);
  } else {
    report.laplacian_has_zero_eigenvalue = true;
  }

  // (5) intra-set edges positive, inter-set negative
  if (balance.bipartition) {
    std::vector<char> in_first(g.node_count(), 0);
    for (int i : balance.bipartition->first) in_first[i] = 1;
    bool valid = true;
    for (const auto& e : g.edges()) {
      bool same_side = in_first[e.u] == in_first[e.v];
      if (same_side != (sign_of(e.w) > 0)) valid = false;
    }
    report.bipartition_valid = valid;
  }

  return report;
}

}  // namespace signet
