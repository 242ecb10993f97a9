#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "signet/balance.hpp"
#include "signet/numeric.hpp"

using namespace signet;
using namespace signet::testing;

TEST_CASE("detect_balance on the fixture graphs") {
  const auto single = detect_balance(SignedGraph::build({"1", "2"}, {{"1", "2", rational(1)}}));
  CHECK(single.balanced);
  CHECK(single.gauge->sigma == std::vector<int>{1, 1});

  const auto ga = detect_balance(make_ga());
  CHECK(ga.balanced);
  CHECK(ga.gauge->sigma == std::vector<int>{1, 1, 1, -1});
  CHECK(ga.bipartition->first == std::vector<int>{0, 1, 2});
  CHECK(ga.bipartition->second == std::vector<int>{3});

  const auto gb = detect_balance(make_gb());
  CHECK_FALSE(gb.balanced);
  REQUIRE(gb.witness_cycle.has_value());
  CHECK(*gb.witness_cycle == std::vector<int>{1, 2, 3});  // nodes 2, 3, 4
}

TEST_CASE("witness cycles carry an odd number of negative edges") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const SignedGraph g = random_unbalanced_graph(rng, 6, 5);
    const auto result = detect_balance(g);
    REQUIRE_FALSE(result.balanced);
    REQUIRE(result.witness_cycle.has_value());
    const auto& cycle = *result.witness_cycle;
    const RatMat a = g.adjacency_exact();
    int negatives = 0;
    for (size_t k = 0; k < cycle.size(); ++k) {
      const Rational& w = a(cycle[k], cycle[(k + 1) % cycle.size()]);
      REQUIRE(w.numerator() != 0);  // consecutive cycle nodes must be adjacent
      if (sign_of(w) < 0) ++negatives;
    }
    CHECK(negatives % 2 == 1);
  }
}

TEST_CASE("empty and disconnected graphs") {
  CHECK(detect_balance(SignedGraph::build({}, {})).balanced);
  // Two components, one balanced and one not: conjunction fails.
  const SignedGraph mixed = SignedGraph::build({"1", "2", "a", "b", "c"}, {{"1", "2", rational(-1)},
                                                                           {"a", "b", rational(1)},
                                                                           {"b", "c", rational(1)},
                                                                           {"a", "c", rational(-1)}});
  CHECK_FALSE(detect_balance(mixed).balanced);
  const SignedGraph split = SignedGraph::build({"1", "2", "a", "b"}, {{"1", "2", rational(-1)}, {"a", "b", rational(1)}});
  const auto result = detect_balance(split);
  CHECK(result.balanced);
  CHECK(result.gauge->sigma == std::vector<int>{1, -1, 1, 1});
}

TEST_CASE("apply_gauge rewrites weights by sigma_u sigma_v") {
  const SignedGraph ga = make_ga();
  const Gauge gauge{{1, 1, 1, -1}};
  const SignedGraph gauged = apply_gauge(ga, gauge);
  CHECK(gauged.is_unsigned());
  CHECK(gauged.laplacian_exact() == ga.underlying_unsigned().laplacian_exact());

  const Gauge identity{{1, 1, 1, 1}};
  CHECK(apply_gauge(ga, identity).adjacency_exact() == ga.adjacency_exact());
  CHECK(apply_gauge(gauged, gauge).adjacency_exact() == ga.adjacency_exact());  // involution

  CHECK_THROWS_AS(apply_gauge(ga, Gauge{{1, 1}}), ValidationError);
}

TEST_CASE("verify_equivalences agrees across all five characterizations") {
  const auto ga = verify_equivalences(make_ga());
  CHECK(ga.balanced_by_traversal);
  CHECK(ga.all_agree());
  CHECK(std::abs(ga.lambda_min) <= 1e-9 * std::max(1.0, ga.lambda_max));

  const auto gb = verify_equivalences(make_gb());
  CHECK_FALSE(gb.balanced_by_traversal);
  CHECK(gb.all_agree());
  CHECK(gb.lambda_min > 1e-6);

  const SignedGraph path = SignedGraph::build({"1", "2", "3"}, {{"1", "2", rational(1)}, {"2", "3", rational(1)}});
  const auto unsigned_path = verify_equivalences(path);
  CHECK(unsigned_path.balanced_by_traversal);
  CHECK(unsigned_path.all_agree());
}

TEST_CASE("constructive soundness: gauged unsigned graphs are detected balanced") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    Gauge planted;
    const SignedGraph g = random_balanced_graph(rng, n, 4, &planted);
    const auto result = detect_balance(g);
    REQUIRE(result.balanced);
    // Recovered gauge matches the planted one on every edge product.
    for (const auto& e : g.edges())
      CHECK(result.gauge->sigma[e.u] * result.gauge->sigma[e.v] == planted.sigma[e.u] * planted.sigma[e.v]);
    CHECK(apply_gauge(g, *result.gauge).is_unsigned());
    CHECK(verify_equivalences(g).all_agree());
  }
}

TEST_CASE("spectrum is preserved under gauge similarity") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const SignedGraph g = random_connected_graph(rng, n, 3, true);
    const Gauge gauge = random_gauge(rng, n);
    const Eigen::VectorXd before = sym_eigen(g.laplacian()).values;
    const Eigen::VectorXd after = sym_eigen(apply_gauge(g, gauge).laplacian()).values;
    CHECK((before - after).cwiseAbs().maxCoeff() <= 1e-9);
  }
}
