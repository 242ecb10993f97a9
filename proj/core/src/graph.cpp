#include "signet/graph.hpp"

#include <algorithm>
#include <set>

namespace signet {

SignedGraph SignedGraph::build(std::vector<std::string> nodes, const std::vector<EdgeSpec>& edges) {
  SignedGraph g;
  g.nodes_ = std::move(nodes);
  for (int i = 0; i < g.node_count(); ++i) {
    auto [it, inserted] = g.index_.emplace(g.nodes_[i], i);
    if (!inserted) throw ValidationError("duplicate node '" + g.nodes_[i] + "'");
  }
  g.adj_.resize(g.nodes_.size());
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    auto iu = g.index_.find(e.u);
    if (iu == g.index_.end()) throw ValidationError("unknown endpoint '" + e.u + "'");
    auto iv = g.index_.find(e.v);
    if (iv == g.index_.end()) throw ValidationError("unknown endpoint '" + e.v + "'");
    int u = iu->second, v = iv->second;
    if (u == v) throw ValidationError("self-loop at node '" + e.u + "'");
    if (e.w.numerator() == 0)
      throw ValidationError("zero weight on edge (" + e.u + ", " + e.v + ")");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw ValidationError("duplicate edge (" + e.u + ", " + e.v + ")");
    g.edges_.push_back({u, v, e.w});
    g.adj_[u].push_back({v, e.w});
    g.adj_[v].push_back({u, e.w});
  }
  return g;
}

int SignedGraph::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ValidationError("unknown node '" + name + "'");
  return it->second;
}

RatMat SignedGraph::adjacency_exact() const {
  RatMat a(node_count(), node_count());
  for (const auto& e : edges_) {
    a(e.u, e.v) = e.w;
    a(e.v, e.u) = e.w;
  }
  return a;
}

RatMat SignedGraph::laplacian_exact() const {
  RatMat l(node_count(), node_count());
  for (const auto& e : edges_) {
    l(e.u, e.v) = -e.w;
    l(e.v, e.u) = -e.w;
    l(e.u, e.u) += abs(e.w);
    l(e.v, e.v) += abs(e.w);
  }
  return l;
}

SignedGraph SignedGraph::underlying_unsigned() const {
  SignedGraph g = *this;
  for (auto& e : g.edges_) e.w = abs(e.w);
  for (auto& list : g.adj_)
    for (auto& [_, w] : list) w = abs(w);
  return g;
}

bool SignedGraph::is_unsigned() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return sign_of(e.w) > 0; });
}

std::vector<std::vector<int>> SignedGraph::components() const {
  std::vector<std::vector<int>> result;
  std::vector<char> seen(node_count(), 0);
  for (int root = 0; root < node_count(); ++root) {
    if (seen[root]) continue;
    std::vector<int> comp, stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (const auto& [v, w] : adj_[u])
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

bool SignedGraph::is_connected() const { return components().size() <= 1; }

LeaderFollowerSystem leader_follower_split(const SignedGraph& g, const std::vector<int>& inputs) {
  if (inputs.empty()) throw ValidationError("input set is empty");
  std::vector<char> is_input(g.node_count(), 0);
  for (int i : inputs) {
    if (i < 0 || i >= g.node_count()) throw ValidationError("input node index out of range");
    if (is_input[i]) throw ValidationError("duplicate input node");
    is_input[i] = 1;
  }
  if (static_cast<int>(inputs.size()) == g.node_count())
    throw ValidationError("input set equals the node set; no floating nodes remain");

  LeaderFollowerSystem sys;
  for (int i = 0; i < g.node_count(); ++i)
    (is_input[i] ? sys.input_nodes : sys.floating_nodes).push_back(i);

  const RatMat l = g.laplacian_exact();
  const int nf = static_cast<int>(sys.floating_nodes.size());
  const int q = static_cast<int>(sys.input_nodes.size());
  sys.floating_block = RatMat(nf, nf);
  sys.input_block = RatMat(nf, q);
  sys.input_corner = RatMat(q, q);
  for (int i = 0; i < nf; ++i) {
    for (int j = 0; j < nf; ++j) sys.floating_block(i, j) = l(sys.floating_nodes[i], sys.floating_nodes[j]);
    for (int j = 0; j < q; ++j) sys.input_block(i, j) = l(sys.floating_nodes[i], sys.input_nodes[j]);
  }
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) sys.input_corner(i, j) = l(sys.input_nodes[i], sys.input_nodes[j]);
  return sys;
}

LeaderFollowerSystem leader_follower_split(const SignedGraph& g, const std::vector<std::string>& inputs) {
  std::vector<int> indices;
  indices.reserve(inputs.size());
  for (const auto& name : inputs) indices.push_back(g.index_of(name));
  return leader_follower_split(g, indices);
}

}  // namespace signet
