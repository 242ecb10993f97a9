#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "signet/graph.hpp"

using namespace signet;
using namespace signet::testing;

TEST_CASE("build_graph validates and fixes the canonical ordering") {
  const SignedGraph two = SignedGraph::build({"1", "2"}, {{"1", "2", rational(-1)}});
  CHECK(two.node_count() == 2);
  CHECK(two.edge_count() == 1);

  const SignedGraph ga = make_ga();
  CHECK(ga.node_count() == 4);
  CHECK(ga.edge_count() == 5);
  CHECK(ga.index_of("3") == 2);
}

TEST_CASE("build_graph rejects each malformed input with a distinct error") {
  CHECK_THROWS_WITH_AS(SignedGraph::build({"1", "1"}, {}), doctest::Contains("duplicate node"), ValidationError);
  CHECK_THROWS_WITH_AS(SignedGraph::build({"1"}, {{"1", "1", rational(1)}}), doctest::Contains("self-loop"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(SignedGraph::build({"1", "2"}, {{"1", "2", rational(0)}}), doctest::Contains("zero weight"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(SignedGraph::build({"1", "2"}, {{"1", "9", rational(1)}}), doctest::Contains("unknown endpoint"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(
      SignedGraph::build({"1", "2"}, {{"1", "2", rational(1)}, {"2", "1", rational(1)}}),
      doctest::Contains("duplicate edge"), ValidationError);
}

TEST_CASE("signed laplacian matches the definition") {
  const SignedGraph two = SignedGraph::build({"1", "2"}, {{"1", "2", rational(-1)}});
  CHECK(two.laplacian_exact() == RatMat::from_rows({{1, 1}, {1, 1}}));

  CHECK(make_ga().laplacian_exact() ==
        RatMat::from_rows({{2, -1, 0, 1}, {-1, 3, -1, 1}, {0, -1, 2, 1}, {1, 1, 1, 3}}));
  CHECK(make_gb().laplacian_exact() ==
        RatMat::from_rows({{2, -1, 0, 1}, {-1, 3, 1, 1}, {0, 1, 2, 1}, {1, 1, 1, 3}}));
}

TEST_CASE("underlying_unsigned flips weights to absolute values and is idempotent") {
  const SignedGraph two = SignedGraph::build({"1", "2"}, {{"1", "2", rational(-1)}});
  CHECK(two.underlying_unsigned().edges()[0].w == rational(1));

  const SignedGraph ga = make_ga();
  const SignedGraph once = ga.underlying_unsigned();
  CHECK(once.is_unsigned());
  CHECK(once.edge_count() == ga.edge_count());
  CHECK(once.underlying_unsigned().laplacian_exact() == once.laplacian_exact());
}

TEST_CASE("is_connected") {
  CHECK(make_ga().is_connected());
  CHECK_FALSE(SignedGraph::build({"1", "2"}, {}).is_connected());
  CHECK(SignedGraph::build({"1"}, {}).is_connected());
}

TEST_CASE("leader_follower_split reproduces the Laplacian blocks") {
  const auto sys_a = leader_follower_split(make_ga(), std::vector<std::string>{"4"});
  CHECK(sys_a.floating_block == RatMat::from_rows({{2, -1, 0}, {-1, 3, -1}, {0, -1, 2}}));
  CHECK(sys_a.input_block == RatMat::from_rows({{1}, {1}, {1}}));

  const auto sys_b = leader_follower_split(make_gb(), std::vector<std::string>{"4"});
  CHECK(sys_b.floating_block == RatMat::from_rows({{2, -1, 0}, {-1, 3, 1}, {0, 1, 2}}));
  CHECK(sys_b.input_block == RatMat::from_rows({{1}, {1}, {1}}));

  CHECK_THROWS_AS(leader_follower_split(make_ga(), std::vector<int>{0, 1, 2, 3}), ValidationError);
  CHECK_THROWS_AS(leader_follower_split(make_ga(), std::vector<int>{}), ValidationError);
}

TEST_CASE("stacking the split blocks reassembles L_s exactly") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const SignedGraph g = random_connected_graph(rng, 6, 4, true);
    const std::vector<int> inputs{1, 4};
    const auto sys = leader_follower_split(g, inputs);
    const RatMat l = g.laplacian_exact();
    std::vector<int> order = sys.floating_nodes;
    order.insert(order.end(), sys.input_nodes.begin(), sys.input_nodes.end());
    const int nf = static_cast<int>(sys.floating_nodes.size());
    for (int i = 0; i < g.node_count(); ++i)
      for (int j = 0; j < g.node_count(); ++j) {
        const Rational& expected = l(order[i], order[j]);
        Rational got;
        if (i < nf && j < nf) got = sys.floating_block(i, j);
        else if (i < nf) got = sys.input_block(i, j - nf);
        else if (j < nf) got = sys.input_block(j, i - nf);
        else got = sys.input_corner(i - nf, j - nf);
        CHECK(got == expected);
      }
  }
}

TEST_CASE("laplacian is diagonally dominant with nonnegative diagonal") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const SignedGraph g = random_connected_graph(rng, 7, 5, true);
    const RatMat l = g.laplacian_exact();
    for (int i = 0; i < l.rows(); ++i) {
      Rational offdiag(0);
      for (int j = 0; j < l.cols(); ++j)
        if (i != j) offdiag += abs(l(i, j));
      CHECK(l(i, i) == offdiag);
    }
  }
}
