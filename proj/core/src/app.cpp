#include "signet/app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

#include "signet/balance.hpp"
#include "signet/control.hpp"
#include "signet/io.hpp"
#include "signet/report.hpp"
#include "signet/simulate.hpp"
#include "signet/version.hpp"

namespace signet {

namespace {

using ordered_json = nlohmann::ordered_json;

struct GlobalOptions {
  std::string format = "text";
  double tol_rank = 1e-12;
  double tol_eig = 1e-9;
  int max_n = 16;
};

std::vector<int> resolve(const SignedGraph& g, const std::vector<std::string>& names) {
  std::vector<int> indices;
  indices.reserve(names.size());
  for (const auto& n : names) indices.push_back(g.index_of(n));
  return indices;
}

void emit(const ordered_json& doc, const GlobalOptions& opts, std::ostream& out) {
  if (opts.format == "structured")
    out << doc.dump(2) << "\n";
  else
    out << render_text(doc);
}

ordered_json balance_doc(const SignedGraph& g) {
  ordered_json doc;
  const BalanceResult result = detect_balance(g);
  doc["balanced"] = result.balanced;
  if (result.gauge) {
    ordered_json sigma = ordered_json::array();
    for (int s : result.gauge->sigma) sigma.push_back(s);
    doc["gauge"] = std::move(sigma);
  }
  if (result.bipartition) {
    ordered_json pos = ordered_json::array(), neg = ordered_json::array();
    for (int i : result.bipartition->first) pos.push_back(g.node_name(i));
    for (int i : result.bipartition->second) neg.push_back(g.node_name(i));
    doc["bipartition"] = ordered_json{{"positive", pos}, {"negative", neg}};
  }
  if (result.witness_cycle) {
    ordered_json cycle = ordered_json::array();
    for (int i : *result.witness_cycle) cycle.push_back(g.node_name(i));
    doc["witness_cycle"] = std::move(cycle);
  }
  const EquivalenceReport eq = verify_equivalences(g);
  doc["equivalences"] = ordered_json{{"balanced_by_traversal", eq.balanced_by_traversal},
                                     {"gauge_restores_positivity", eq.gauge_restores_positivity},
                                     {"fundamental_cycles_positive", eq.fundamental_cycles_positive},
                                     {"laplacian_has_zero_eigenvalue", eq.laplacian_has_zero_eigenvalue},
                                     {"bipartition_valid", eq.bipartition_valid},
                                     {"all_agree", eq.all_agree()}};
  doc["lambda_min"] = eq.lambda_min;
  doc["lambda_max"] = eq.lambda_max;
  return doc;
}

Partition parse_seed(const SignedGraph& g, const std::string& spec) {
  Partition seed;
  std::vector<char> placed(g.node_count(), 0);
  std::stringstream cells(spec);
  std::string cell;
  while (std::getline(cells, cell, '|')) {
    std::vector<int> members;
    std::stringstream names(cell);
    std::string name;
    while (std::getline(names, name, ',')) {
      if (name.empty()) continue;
      int idx = g.index_of(name);
      if (placed[idx]) throw ValidationError("seed places node '" + name + "' twice");
      placed[idx] = 1;
      members.push_back(idx);
    }
    if (!members.empty()) seed.cells.push_back(std::move(members));
  }
  // Unlisted nodes form one remainder cell.
  std::vector<int> rest;
  for (int i = 0; i < g.node_count(); ++i)
    if (!placed[i]) rest.push_back(i);
  if (!rest.empty()) seed.cells.push_back(std::move(rest));
  return seed.normalized();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"signed consensus network analysis"};
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--format", opts.format, "output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--tol-rank", opts.tol_rank, "relative singular value cutoff for numerical ranks");
  app.add_option("--tol-eig", opts.tol_eig, "zero-eigenvalue tolerance scale");
  app.add_option("--max-n", opts.max_n, "node cap for the automorphism search");

  std::string file, seed_spec, out_path;
  std::vector<std::string> fixed, leaders, inputs, outputs;
  std::vector<double> x0;
  double tmax = 0.0, dt = 0.0;

  auto* cmd_balance = app.add_subcommand("balance", "structural balance, gauge and bipartition");
  cmd_balance->add_option("file", file)->required();

  auto* cmd_autos = app.add_subcommand("automorphisms", "weighted automorphisms of the signed graph");
  cmd_autos->add_option("file", file)->required();
  cmd_autos->add_option("--fix", fixed, "nodes fixed pointwise")->delimiter(',');

  auto* cmd_partition = app.add_subcommand("partition", "coarsest equitable refinement and quotient");
  cmd_partition->add_option("file", file)->required();
  cmd_partition->add_option("--seed", seed_spec, "seed cells, e.g. '1,3|2' (rest in one cell)");

  auto* cmd_control = app.add_subcommand("controllability", "leader-follower controllability verdicts");
  cmd_control->add_option("file", file)->required();
  cmd_control->add_option("--leaders", leaders, "input node names")->required()->delimiter(',');

  auto* cmd_influw = app.add_subcommand("influenced", "influenced dynamics verdicts");
  cmd_influw->add_option("file", file)->required();
  cmd_influw->add_option("--inputs", inputs, "input node names")->required()->delimiter(',');
  cmd_influw->add_option("--outputs", outputs, "output node names")->required()->delimiter(',');

  auto* cmd_sim = app.add_subcommand("simulate", "free consensus dynamics to CSV");
  cmd_sim->add_option("file", file)->required();
  cmd_sim->add_option("--x0", x0, "initial state")->required()->delimiter(',');
  cmd_sim->add_option("--tmax", tmax, "horizon seconds (default 50/lambda_2)");
  cmd_sim->add_option("--dt", dt, "sample step (default min(0.01, 0.1/lambda_max))");
  cmd_sim->add_option("--out", out_path, "CSV output path")->required();

  auto* cmd_report = app.add_subcommand("report", "full analysis report");
  cmd_report->add_option("file", file)->required();
  cmd_report->add_option("--leaders", leaders, "leader node names")->delimiter(',');
  cmd_report->add_option("--inputs", inputs, "input node names")->delimiter(',');
  cmd_report->add_option("--outputs", outputs, "output node names")->delimiter(',');

  app.require_subcommand(1);

  std::vector<const char*> argv{"signet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const SignedGraph g = parse_graph_file(file);

  if (cmd_balance->parsed()) {
    emit(balance_doc(g), opts, out);
    return 0;
  }

  if (cmd_autos->parsed()) {
    const auto autos = find_automorphisms(g, resolve(g, fixed), opts.max_n);
    ordered_json doc;
    doc["count"] = static_cast<int>(autos.size());
    ordered_json list = ordered_json::array();
    for (const auto& a : autos) {
      ordered_json image = ordered_json::array();
      for (int v : a.mapping) image.push_back(g.node_name(v));
      list.push_back(std::move(image));
    }
    doc["automorphisms"] = std::move(list);
    emit(doc, opts, out);
    return 0;
  }

  if (cmd_partition->parsed()) {
    const Partition seed = seed_spec.empty() ? Partition::single_cell(g.node_count()) : parse_seed(g, seed_spec);
    const Partition pi = coarsest_equitable_refinement(g, seed);
    ordered_json doc;
    ordered_json cells = ordered_json::array();
    for (const auto& cell : pi.cells) {
      ordered_json c = ordered_json::array();
      for (int v : cell) c.push_back(g.node_name(v));
      cells.push_back(std::move(c));
    }
    doc["cells"] = std::move(cells);
    doc["nontrivial_cells"] = static_cast<int>(pi.nontrivial_cells().size());
    const RatMat q = quotient(g, pi);
    ordered_json qrows = ordered_json::array();
    for (int i = 0; i < q.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (int j = 0; j < q.cols(); ++j) row.push_back(to_double(q(i, j)));
      qrows.push_back(std::move(row));
    }
    doc["quotient"] = std::move(qrows);
    emit(doc, opts, out);
    return 0;
  }

  if (cmd_control->parsed()) {
    AnalysisOptions options;
    options.leaders = resolve(g, leaders);
    options.tol_eig = opts.tol_eig;
    options.tol_rank = opts.tol_rank;
    options.max_n = opts.max_n;
    const ordered_json full = build_report(g, options);
    ordered_json doc = full.at("control").at("leader_follower");
    doc["balanced"] = full.at("balance").at("balanced");
    emit(doc, opts, out);
    return 0;
  }

  if (cmd_influw->parsed()) {
    AnalysisOptions options;
    options.inputs = resolve(g, inputs);
    options.outputs = resolve(g, outputs);
    options.tol_eig = opts.tol_eig;
    options.tol_rank = opts.tol_rank;
    options.max_n = opts.max_n;
    const ordered_json full = build_report(g, options);
    emit(full.at("control").at("influenced"), opts, out);
    return 0;
  }

  if (cmd_sim->parsed()) {
    Eigen::VectorXd state(static_cast<int>(x0.size()));
    for (size_t i = 0; i < x0.size(); ++i) state(static_cast<int>(i)) = x0[i];
    const double horizon = tmax > 0 ? tmax : default_horizon(g);
    const double step = dt > 0 ? dt : default_time_step(g);
    const Trajectory traj = simulate_free(g, state, horizon, step);
    std::ofstream csv(out_path, std::ios::binary);
    if (!csv) throw ValidationError("cannot open output path '" + out_path + "'");
    write_trajectory_csv(csv, traj, g.nodes());
    ordered_json doc;
    doc["samples"] = static_cast<int>(traj.times.size());
    doc["t_max"] = horizon;
    doc["dt"] = step;
    doc["out"] = out_path;
    ordered_json final_state = ordered_json::array();
    for (int i = 0; i < traj.states.back().size(); ++i) final_state.push_back(traj.states.back()(i));
    doc["final_state"] = std::move(final_state);
    if (g.is_connected()) {
      const Eigen::VectorXd limit = bipartite_limit(g, state);
      ordered_json lim = ordered_json::array();
      for (int i = 0; i < limit.size(); ++i) lim.push_back(limit(i));
      doc["predicted_limit"] = std::move(lim);
    }
    emit(doc, opts, out);
    return 0;
  }

  if (cmd_report->parsed()) {
    AnalysisOptions options;
    options.leaders = resolve(g, leaders);
    options.inputs = resolve(g, inputs);
    options.outputs = resolve(g, outputs);
    options.tol_eig = opts.tol_eig;
    options.tol_rank = opts.tol_rank;
    options.max_n = opts.max_n;
    emit(build_report(g, options), opts, out);
    return 0;
  }

  err << "no subcommand selected\n";
  return 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const SoundnessError& e) {
    err << "soundness violation: " << e.what() << "\n";
    return 4;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace signet
