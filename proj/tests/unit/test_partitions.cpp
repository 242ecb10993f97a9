#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "signet/numeric.hpp"
#include "signet/partitions.hpp"

using namespace signet;
using namespace signet::testing;

namespace {

Partition cells(std::vector<std::vector<int>> c) {
  Partition p;
  p.cells = std::move(c);
  return p.normalized();
}

}  // namespace

TEST_CASE("coarsest equitable refinement") {
  const SignedGraph ga_unsigned = make_ga().underlying_unsigned();
  CHECK(coarsest_equitable_refinement(ga_unsigned, cells({{0, 1, 2}, {3}})).cells ==
        std::vector<std::vector<int>>{{0, 2}, {1}, {3}});

  const SignedGraph k4 = SignedGraph::build(index_names(4), {{"1", "2", rational(1)},
                                                             {"1", "3", rational(1)},
                                                             {"1", "4", rational(1)},
                                                             {"2", "3", rational(1)},
                                                             {"2", "4", rational(1)},
                                                             {"3", "4", rational(1)}});
  CHECK(coarsest_equitable_refinement(k4, Partition::single_cell(4)).cells ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}});

  CHECK(coarsest_equitable_refinement(ga_unsigned, Partition::discrete(4)).is_discrete());

  // Re-running on its own output is a fixed point.
  const Partition pi = coarsest_equitable_refinement(ga_unsigned, cells({{0, 1, 2}, {3}}));
  CHECK(coarsest_equitable_refinement(ga_unsigned, pi).cells == pi.cells);
}

TEST_CASE("quotient per-node weights into each cell") {
  const SignedGraph ga_unsigned = make_ga().underlying_unsigned();
  CHECK(quotient(ga_unsigned, cells({{0, 2}, {1}, {3}})) == RatMat::from_rows({{0, 1, 1}, {2, 0, 1}, {2, 1, 0}}));
  CHECK(quotient(ga_unsigned, Partition::discrete(4)) == ga_unsigned.adjacency_exact());

  const SignedGraph triangle = SignedGraph::build(index_names(3), {{"1", "2", rational(1)},
                                                                   {"2", "3", rational(1)},
                                                                   {"1", "3", rational(1)}});
  CHECK(quotient(triangle, Partition::single_cell(3)) == RatMat::from_rows({{2}}));

  CHECK_THROWS_AS(quotient(ga_unsigned, cells({{0, 1}, {2}, {3}})), ValidationError);
}

TEST_CASE("signed characteristic matrix and orthonormal split") {
  const Gauge gauge{{1, 1, 1, -1}};
  const auto pair = signed_characteristic(cells({{0, 2}, {1}, {3}}), gauge);
  CHECK(pair.P_signed.col(0).isApprox(Eigen::Vector4d(1, 0, 1, 0)));
  CHECK(pair.P_signed.col(1).isApprox(Eigen::Vector4d(0, 1, 0, 0)));
  CHECK(pair.P_signed.col(2).isApprox(Eigen::Vector4d(0, 0, 0, -1)));

  // Eq.-style orthonormality at 1e-12.
  CHECK(max_abs(pair.P_bar.transpose() * pair.P_bar - Eigen::MatrixXd::Identity(3, 3)) <= 1e-12);
  CHECK(max_abs(pair.Q_bar.transpose() * pair.Q_bar - Eigen::MatrixXd::Identity(1, 1)) <= 1e-12);
  CHECK(max_abs(pair.P_bar.transpose() * pair.Q_bar) <= 1e-12);

  const Gauge identity{{1, 1, 1, 1}};
  const auto plain = signed_characteristic(cells({{0, 2}, {1}, {3}}), identity);
  CHECK(plain.P_signed.isApprox(plain.P));

  const auto discrete = signed_characteristic(Partition::discrete(4), gauge);
  CHECK(discrete.Q_bar.cols() == 0);

  CHECK_THROWS_AS(signed_characteristic(Partition::discrete(3), gauge), ValidationError);
}

TEST_CASE("check_P_invariance matches equitability") {
  const SignedGraph ga = make_ga();
  const Gauge gauge{{1, 1, 1, -1}};
  CHECK(check_P_invariance(ga.adjacency(), signed_characteristic(cells({{0, 2}, {1}, {3}}), gauge)));
  CHECK_FALSE(check_P_invariance(ga.adjacency(), signed_characteristic(cells({{0, 1}, {2}, {3}}), gauge)));
  CHECK(check_P_invariance(ga.adjacency(), signed_characteristic(Partition::discrete(4), gauge)));
}

TEST_CASE("block diagonalization of the fixture graphs") {
  const SignedGraph ga = make_ga();
  const Gauge gauge{{1, 1, 1, -1}};
  const auto pair = signed_characteristic(cells({{0, 2}, {1}, {3}}), gauge);
  const auto blocks = block_diagonalize(ga.laplacian(), pair);
  CHECK(blocks.offdiag_residual <= 1e-12);
  CHECK(blocks.spectrum_gap <= 1e-9);

  // spec(L_s) = {0, 2, 4, 4}; the Q block carries the shared eigenvalue 2.
  const Eigen::VectorXd spectrum = sym_eigen(ga.laplacian()).values;
  CHECK(spectrum.isApprox(Eigen::Vector4d(0, 2, 4, 4), 1e-9));
  CHECK(blocks.block_q.rows() == 1);
  CHECK(blocks.block_q(0, 0) == doctest::Approx(2.0).epsilon(1e-12));

  // Floating restriction: A_s^f with pi_f = {{1,3},{2}} splits into 2x2 + 1x1.
  const auto sys = leader_follower_split(ga, std::vector<int>{3});
  const auto float_pair = signed_characteristic(cells({{0, 2}, {1}}), Gauge{{1, 1, 1}});
  const auto float_blocks = block_diagonalize(sys.floating_matrix(), float_pair);
  CHECK(float_blocks.block_p.rows() == 2);
  CHECK(float_blocks.block_q.rows() == 1);
  CHECK(float_blocks.spectrum_gap <= 1e-9);
  const Eigen::VectorXd float_spectrum = sym_eigen(sys.floating_matrix()).values;
  CHECK(float_spectrum.isApprox(Eigen::Vector3d(1, 2, 4), 1e-9));

  // Diagonal matrices have zero residual for any pair.
  const Eigen::MatrixXd diag = Eigen::Vector4d(1, 1, 2, 3).asDiagonal();
  CHECK(block_diagonalize(diag, signed_characteristic(cells({{0, 1}, {2}, {3}}), Gauge{{1, 1, 1, 1}})).offdiag_residual <=
        1e-12);
}

TEST_CASE("interlacing") {
  const SignedGraph ga = make_ga();
  const auto sys = leader_follower_split(ga, std::vector<int>{3});
  CHECK(verify_interlacing(ga.laplacian(), sys.floating_matrix()));
  CHECK(verify_interlacing(ga.laplacian(), ga.laplacian()));

  Eigen::MatrixXd a = Eigen::Vector2d(0, 10).asDiagonal();
  Eigen::MatrixXd b(1, 1);
  b << 20;
  CHECK_FALSE(verify_interlacing(a, b));
  CHECK_THROWS_AS(verify_interlacing(b, a), ValidationError);
}

TEST_CASE("quotient spectrum is contained in the graph spectrum") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const SignedGraph g = random_connected_graph(rng, n, 3, false);
    const Partition pi = coarsest_equitable_refinement(g, Partition::single_cell(n));
    const Eigen::MatrixXd q = quotient(g, pi).to_double();
    const Eigen::VectorXd graph_spectrum = sym_eigen(g.adjacency()).values;
    const Eigen::VectorXcd quotient_spectrum = Eigen::EigenSolver<Eigen::MatrixXd>(q).eigenvalues();
    for (int i = 0; i < quotient_spectrum.size(); ++i) {
      CHECK(std::abs(quotient_spectrum(i).imag()) <= 1e-9);
      bool found = false;
      for (int j = 0; j < graph_spectrum.size(); ++j)
        if (std::abs(graph_spectrum(j) - quotient_spectrum(i).real()) <= 1e-9) found = true;
      CHECK(found);
    }
  }
}
