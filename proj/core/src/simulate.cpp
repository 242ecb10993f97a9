#include "signet/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "signet/balance.hpp"
#include "signet/numeric.hpp"

namespace signet {

std::uint64_t canonical_hash(const SignedGraph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  for (const auto& name : g.nodes()) mix(name);
  for (const auto& e : g.edges()) {
    mix(g.node_name(e.u));
    mix(g.node_name(e.v));
    mix(to_string(e.w));
  }
  return h;
}

namespace {

double lambda_max(const SignedGraph& g) {
  if (g.node_count() == 0) return 0.0;
  const auto eig = sym_eigen(g.laplacian());
  return eig.values(eig.values.size() - 1);
}

double lambda_2(const SignedGraph& g) {
  if (g.node_count() == 0) return 0.0;
  const auto eig = sym_eigen(g.laplacian());
  const double tol = zero_eig_tolerance(eig.values(eig.values.size() - 1));
  for (int i = 0; i < eig.values.size(); ++i)
    if (eig.values(i) > tol) return eig.values(i);
  return 0.0;
}

}  // namespace

double default_time_step(const SignedGraph& g) {
  const double lmax = lambda_max(g);
  return lmax > 0 ? std::min(0.01, 0.1 / lmax) : 0.01;
}

double default_horizon(const SignedGraph& g) {
  const double l2 = lambda_2(g);
  return l2 > 0 ? 50.0 / l2 : 50.0;
}

Trajectory simulate_free(const SignedGraph& g, const Eigen::VectorXd& x0, double t_max, double dt) {
  if (x0.size() != g.node_count()) throw ValidationError("initial state dimension does not match node count");
  if (t_max <= 0 || dt <= 0) throw ValidationError("t_max and dt must be positive");
  const auto eig = sym_eigen(g.laplacian());
  const Eigen::VectorXd coeffs = eig.vectors.transpose() * x0;

  Trajectory traj;
  traj.metadata = {canonical_hash(g), "spectral", dt};
  const int samples = static_cast<int>(std::floor(t_max / dt + 1e-9)) + 1;
  for (int k = 0; k < samples; ++k) {
    const double t = k * dt;
    Eigen::VectorXd damped = coeffs;
    for (int i = 0; i < damped.size(); ++i) damped(i) *= std::exp(-eig.values(i) * t);
    traj.times.push_back(t);
    traj.states.push_back(eig.vectors * damped);
  }
  return traj;
}

Trajectory simulate_free(const SignedGraph& g, const Eigen::VectorXd& x0) {
  return simulate_free(g, x0, default_horizon(g), default_time_step(g));
}

const Eigen::VectorXd& PiecewiseConstantInput::at(double t) const {
  if (values.empty()) throw ValidationError("input signal has no samples");
  size_t k = 0;
  while (k + 1 < breakpoints.size() && t >= breakpoints[k + 1]) ++k;
  return values[k];
}

namespace {

// RK4 over grid_steps * dt with zero-order-hold input, `substeps` internal
// steps per grid interval, sampled on the grid.
std::vector<Eigen::VectorXd> rk4_run(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b_signed,
                                     const PiecewiseConstantInput& u, const Eigen::VectorXd& x0, int grid_steps,
                                     double dt, int substeps) {
  std::vector<Eigen::VectorXd> samples{x0};
  Eigen::VectorXd x = x0;
  const double h = dt / substeps;
  auto deriv = [&](double t, const Eigen::VectorXd& state) -> Eigen::VectorXd {
    return a * state + b_signed * u.at(t);
  };
  for (long s = 1; s <= static_cast<long>(grid_steps) * substeps; ++s) {
    const double t = (s - 1) * h;
    const Eigen::VectorXd k1 = deriv(t, x);
    const Eigen::VectorXd k2 = deriv(t + h / 2, x + (h / 2) * k1);
    const Eigen::VectorXd k3 = deriv(t + h / 2, x + (h / 2) * k2);
    const Eigen::VectorXd k4 = deriv(t + h, x + h * k3);
    x += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    if (s % substeps == 0) samples.push_back(x);
  }
  return samples;
}

Trajectory rk4_simulate(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b_signed, const PiecewiseConstantInput& u,
                        const Eigen::VectorXd& x0, double t_max, double dt, std::uint64_t hash) {
  if (x0.size() != a.rows()) throw ValidationError("initial state dimension does not match the system");
  if (!u.values.empty() && u.values.front().size() != b_signed.cols())
    throw ValidationError("input sample dimension does not match the input count");
  if (t_max <= 0 || dt <= 0) throw ValidationError("t_max and dt must be positive");

  // RK4 real-axis stability: |h lambda| <= 2.785 for the stiffest mode.
  const double stiffest = sym_eigen(a).values.cwiseAbs().maxCoeff();
  if (dt * stiffest > 2.785)
    throw NumericalError("step size " + std::to_string(dt) + " is unstable for the fastest mode " +
                         std::to_string(stiffest) + "; reduce dt");

  const int grid_steps = static_cast<int>(std::floor(t_max / dt + 1e-9));
  const double budget = 1e-8 * t_max;
  int substeps = 1;
  auto coarse = rk4_run(a, b_signed, u, x0, grid_steps, dt, substeps);
  bool converged = false;
  for (int halvings = 0; halvings < 16 && !converged; ++halvings) {
    auto fine = rk4_run(a, b_signed, u, x0, grid_steps, dt, substeps * 2);
    double err = 0.0;
    for (size_t k = 0; k < coarse.size(); ++k) err = std::max(err, (coarse[k] - fine[k]).cwiseAbs().maxCoeff());
    converged = err <= budget;
    coarse = std::move(fine);
    substeps *= 2;
  }
  if (!converged) throw NumericalError("step-halving self-check did not reach the error budget; dt too large");

  Trajectory traj;
  traj.metadata = {hash, "rk4", dt / substeps};
  for (size_t k = 0; k < coarse.size(); ++k) {
    traj.times.push_back(static_cast<double>(k) * dt);
    traj.states.push_back(coarse[k]);
  }
  return traj;
}

}  // namespace

Trajectory simulate_forced(const LeaderFollowerSystem& sys, const PiecewiseConstantInput& u,
                           const Eigen::VectorXd& x0, double t_max, double dt) {
  // Eq-style leader-follower dynamics: xdot = -A_s^f x - B_s^f u.
  return rk4_simulate(-sys.floating_matrix(), -sys.input_matrix(), u, x0, t_max, dt, 0);
}

Trajectory simulate_forced(const InfluencedSystem& sys, const PiecewiseConstantInput& u, const Eigen::VectorXd& x0,
                           double t_max, double dt) {
  // Influenced dynamics: xdot = -L_s x + B u.
  return rk4_simulate(-sys.laplacian.to_double(), sys.b_matrix(), u, x0, t_max, dt, 0);
}

Eigen::VectorXd bipartite_limit(const SignedGraph& g, const Eigen::VectorXd& x0) {
  if (!g.is_connected()) throw ValidationError("bipartite limit requires a connected graph");
  if (x0.size() != g.node_count()) throw ValidationError("initial state dimension does not match node count");
  const BalanceResult balance = detect_balance(g);
  if (!balance.balanced) return Eigen::VectorXd::Zero(g.node_count());
  Eigen::VectorXd sigma(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) sigma(i) = balance.gauge->sigma[i];
  const double mean = sigma.dot(x0) / g.node_count();
  return mean * sigma;
}

}  // namespace signet
