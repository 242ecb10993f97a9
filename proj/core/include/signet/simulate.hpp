#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "signet/graph.hpp"
#include "signet/influenced.hpp"

namespace signet {

struct TrajectoryMeta {
  std::uint64_t graph_hash = 0;
  std::string integrator;
  double step = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;
  TrajectoryMeta metadata;
};

/// FNV-1a over the canonical node/edge serialization.
std::uint64_t canonical_hash(const SignedGraph& g);

/// dt = min(0.01, 0.1 / lambda_max(L_s)); t_max = 50 / lambda_2 (or 50 when
/// the smallest nonzero eigenvalue is numerically zero).
double default_time_step(const SignedGraph& g);
double default_horizon(const SignedGraph& g);

/// Free dynamics xdot = -L_s x via the exact spectral solution
/// x(t) = V exp(-Lambda t) V^T x0, sampled on the dt grid.
Trajectory simulate_free(const SignedGraph& g, const Eigen::VectorXd& x0, double t_max, double dt);
Trajectory simulate_free(const SignedGraph& g, const Eigen::VectorXd& x0);

/// Zero-order-hold input signal: values[k] holds on [breakpoints[k],
/// breakpoints[k+1]), the last value holds to the horizon.
struct PiecewiseConstantInput {
  std::vector<double> breakpoints;
  std::vector<Eigen::VectorXd> values;

  static PiecewiseConstantInput constant(const Eigen::VectorXd& value) { return {{0.0}, {value}}; }
  const Eigen::VectorXd& at(double t) const;
};

/// Classical fixed-step RK4 with a step-halving self-check that keeps the
/// trajectory error estimate below 1e-8 per unit time, refining the internal
/// step as needed. Steps violating the RK4 stability bound raise
/// NumericalError up front.
Trajectory simulate_forced(const LeaderFollowerSystem& sys, const PiecewiseConstantInput& u,
                           const Eigen::VectorXd& x0, double t_max, double dt);
Trajectory simulate_forced(const InfluencedSystem& sys, const PiecewiseConstantInput& u, const Eigen::VectorXd& x0,
                           double t_max, double dt);

/// Limit of the free dynamics: (1/n)(1^T G_t x0) G_t 1 when balanced, the
/// zero vector when unbalanced. Rejects disconnected graphs.
Eigen::VectorXd bipartite_limit(const SignedGraph& g, const Eigen::VectorXd& x0);

}  // namespace signet
