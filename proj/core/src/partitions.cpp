#include "signet/partitions.hpp"

#include <algorithm>
#include <map>

#include "signet/numeric.hpp"

namespace signet {

int Partition::node_count() const {
  int n = 0;
  for (const auto& c : cells) n += static_cast<int>(c.size());
  return n;
}

std::vector<std::vector<int>> Partition::nontrivial_cells() const {
  std::vector<std::vector<int>> out;
  for (const auto& c : cells)
    if (c.size() >= 2) out.push_back(c);
  return out;
}

bool Partition::is_discrete() const {
  return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 1; });
}

std::vector<int> Partition::cell_of(int n) const {
  std::vector<int> owner(n, -1);
  for (int c = 0; c < cell_count(); ++c)
    for (int v : cells[c]) {
      if (v < 0 || v >= n) throw ValidationError("partition refers to node index out of range");
      if (owner[v] >= 0) throw ValidationError("partition cells are not disjoint");
      owner[v] = c;
    }
  for (int v = 0; v < n; ++v)
    if (owner[v] < 0) throw ValidationError("partition does not cover every node");
  return owner;
}

Partition Partition::normalized() const {
  Partition out = *this;
  for (auto& c : out.cells) std::sort(c.begin(), c.end());
  std::sort(out.cells.begin(), out.cells.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

Partition Partition::single_cell(int n) {
  Partition p;
  p.cells.emplace_back();
  for (int i = 0; i < n; ++i) p.cells.back().push_back(i);
  if (n == 0) p.cells.clear();
  return p;
}

Partition Partition::discrete(int n) {
  Partition p;
  for (int i = 0; i < n; ++i) p.cells.push_back({i});
  return p;
}

namespace {

// Per-node weight sums into each cell, on the underlying unsigned graph.
std::vector<std::vector<Rational>> cell_signatures(const SignedGraph& g, const std::vector<int>& owner,
                                                   int cell_count) {
  std::vector<std::vector<Rational>> sig(g.node_count(), std::vector<Rational>(cell_count, Rational(0)));
  for (int u = 0; u < g.node_count(); ++u)
    for (const auto& [v, w] : g.adjacency_lists()[u]) sig[u][owner[v]] += abs(w);
  return sig;
}

}  // namespace

bool is_equitable(const SignedGraph& g, const Partition& pi) {
  const auto owner = pi.cell_of(g.node_count());
  const auto sig = cell_signatures(g, owner, pi.cell_count());
  for (const auto& cell : pi.cells)
    for (size_t k = 1; k < cell.size(); ++k)
      if (sig[cell[k]] != sig[cell[0]]) return false;
  return true;
}

Partition coarsest_equitable_refinement(const SignedGraph& g, const Partition& initial) {
  const int n = g.node_count();
  auto owner = initial.cell_of(n);
  int cell_count = initial.cell_count();

  while (true) {
    const auto sig = cell_signatures(g, owner, cell_count);
    // Split each cell by signature; sub-cells keep first-occurrence order.
    std::vector<int> next_owner(n, -1);
    int next_count = 0;
    std::vector<std::vector<int>> members(cell_count);
    for (int v = 0; v < n; ++v) members[owner[v]].push_back(v);
    for (int c = 0; c < cell_count; ++c) {
      std::map<std::vector<Rational>, int> seen;
      for (int v : members[c]) {
        auto [it, inserted] = seen.emplace(sig[v], next_count);
        if (inserted) ++next_count;
        next_owner[v] = it->second;
      }
    }
    if (next_count == cell_count) break;
    owner = std::move(next_owner);
    cell_count = next_count;
  }

  Partition out;
  out.cells.assign(cell_count, {});
  for (int v = 0; v < n; ++v) out.cells[owner[v]].push_back(v);
  return out.normalized();
}

RatMat quotient(const SignedGraph& g, const Partition& pi) {
  const auto owner = pi.cell_of(g.node_count());
  const auto sig = cell_signatures(g, owner, pi.cell_count());
  for (const auto& cell : pi.cells)
    for (size_t k = 1; k < cell.size(); ++k)
      if (sig[cell[k]] != sig[cell[0]])
        throw ValidationError("partition is not equitable; quotient undefined");
  RatMat q(pi.cell_count(), pi.cell_count());
  for (int c = 0; c < pi.cell_count(); ++c)
    for (int d = 0; d < pi.cell_count(); ++d) q(c, d) = sig[pi.cells[c].front()][d];
  return q;
}

CharacteristicPair signed_characteristic(const Partition& pi, const Gauge& gauge) {
  const int n = gauge.size();
  const auto owner = pi.cell_of(n);  // validates coverage against gauge length
  CharacteristicPair pair;
  pair.P = Eigen::MatrixXd::Zero(n, pi.cell_count());
  for (int v = 0; v < n; ++v) pair.P(v, owner[v]) = 1.0;
  pair.P_signed = gauge.matrix() * pair.P;
  pair.P_bar = pair.P_signed;
  for (int c = 0; c < pair.P_bar.cols(); ++c) pair.P_bar.col(c) /= pair.P_bar.col(c).norm();
  pair.Q_bar = orthonormal_complement(pair.P_signed);
  return pair;
}

bool check_P_invariance(const Eigen::MatrixXd& a_s, const CharacteristicPair& pair, double tol) {
  const Eigen::MatrixXd projector =
      Eigen::MatrixXd::Identity(a_s.rows(), a_s.rows()) - pair.P_bar * pair.P_bar.transpose();
  return max_abs(projector * a_s * pair.P_signed) <= tol;
}

BlockDiagonalization block_diagonalize(const Eigen::MatrixXd& m, const CharacteristicPair& pair) {
  const int n = static_cast<int>(m.rows());
  const int r = static_cast<int>(pair.P_bar.cols());
  const int s = static_cast<int>(pair.Q_bar.cols());
  if (pair.P_bar.rows() != n || (s > 0 && pair.Q_bar.rows() != n))
    throw ValidationError("characteristic pair does not match matrix dimension");
  Eigen::MatrixXd t(n, r + s);
  t.leftCols(r) = pair.P_bar;
  if (s > 0) t.rightCols(s) = pair.Q_bar;
  if (r + s != n || max_abs(t.transpose() * t - Eigen::MatrixXd::Identity(n, n)) > 1e-10)
    throw ValidationError("characteristic pair is not an orthonormal basis");

  BlockDiagonalization out;
  out.block_p = pair.P_bar.transpose() * m * pair.P_bar;
  out.block_q = s > 0 ? Eigen::MatrixXd(pair.Q_bar.transpose() * m * pair.Q_bar) : Eigen::MatrixXd(0, 0);
  out.offdiag_residual = s > 0 ? max_abs(pair.P_bar.transpose() * m * pair.Q_bar) : 0.0;

  std::vector<double> combined;
  const auto ep = sym_eigen(out.block_p);
  for (int i = 0; i < ep.values.size(); ++i) combined.push_back(ep.values(i));
  if (s > 0) {
    const auto eq = sym_eigen(out.block_q);
    for (int i = 0; i < eq.values.size(); ++i) combined.push_back(eq.values(i));
  }
  std::sort(combined.begin(), combined.end());
  const auto em = sym_eigen(m);
  double gap = 0.0;
  for (int i = 0; i < n; ++i) gap = std::max(gap, std::abs(em.values(i) - combined[i]));
  out.spectrum_gap = gap;
  return out;
}

bool verify_interlacing(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol) {
  const int n = static_cast<int>(a.rows());
  const int m = static_cast<int>(b.rows());
  if (m > n) throw ValidationError("interlacing requires the smaller matrix second");
  Eigen::VectorXd la = sym_eigen(a).values.reverse();  // non-increasing
  Eigen::VectorXd lb = sym_eigen(b).values.reverse();
  for (int i = 0; i < m; ++i) {
    if (lb(i) > la(i) + tol) return false;
    if (lb(i) < la(n - m + i) - tol) return false;
  }
  return true;
}

Eigen::MatrixXd select_rows(const Eigen::MatrixXd& m, const std::vector<int>& rows) {
  Eigen::MatrixXd out(static_cast<int>(rows.size()), m.cols());
  for (size_t i = 0; i < rows.size(); ++i) out.row(static_cast<int>(i)) = m.row(rows[i]);
  return out;
}

}  // namespace signet
