#include "signet/report.hpp"

#include <algorithm>
#include <sstream>

#include "signet/balance.hpp"
#include "signet/control.hpp"
#include "signet/io.hpp"
#include "signet/numeric.hpp"
#include "signet/simulate.hpp"
#include "signet/version.hpp"

namespace signet {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json names_of(const SignedGraph& g, const std::vector<int>& indices) {
  ordered_json arr = ordered_json::array();
  for (int i : indices) arr.push_back(g.node_name(i));
  return arr;
}

ordered_json cells_of(const SignedGraph& g, const Partition& pi) {
  ordered_json arr = ordered_json::array();
  for (const auto& cell : pi.cells) arr.push_back(names_of(g, cell));
  return arr;
}

ordered_json matrix_json(const Eigen::MatrixXd& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json matrix_json(const RatMat& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) {
      const Rational& v = m(i, j);
      if (v.denominator() == 1 && abs(v) < Rational(BigInt(1) << 53))
        row.push_back(v.numerator().convert_to<long long>());
      else
        row.push_back(to_string(v));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json vector_json(const Eigen::VectorXd& v) {
  ordered_json arr = ordered_json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

ordered_json modes_json(const std::vector<UncontrollableMode>& modes) {
  ordered_json arr = ordered_json::array();
  for (const auto& m : modes) {
    ordered_json entry;
    entry["eigenvalue"] = m.eigenvalue;
    entry["vector"] = vector_json(m.vector);
    arr.push_back(std::move(entry));
  }
  return arr;
}

ordered_json verdict_json(const ControlVerdict& v) {
  ordered_json doc;
  doc["controllable"] = v.controllable;
  doc["rank"] = v.rank;
  doc["state_dim"] = v.state_dim;
  doc["structural_reason"] = to_string(v.structural_reason);
  doc["uncontrollable_modes"] = modes_json(v.uncontrollable_modes);
  if (v.structural_witness) {
    doc["structural_witness"] = ordered_json{{"eigenvalue", v.structural_witness->eigenvalue},
                                             {"vector", vector_json(v.structural_witness->vector)}};
  }
  if (v.stabilizable) doc["stabilizable"] = *v.stabilizable;
  doc["assumptions"] = v.assumptions;
  return doc;
}

}  // namespace

ordered_json build_report(const SignedGraph& g, const AnalysisOptions& options) {
  ordered_json doc;

  {
    ordered_json section;
    section["nodes"] = g.node_count();
    section["edges"] = g.edge_count();
    section["connected"] = g.is_connected();
    int negative = 0;
    double min_abs = 0, max_abs_w = 0;
    for (const auto& e : g.edges()) {
      if (sign_of(e.w) < 0) ++negative;
      const double a = std::abs(to_double(e.w));
      min_abs = min_abs == 0 ? a : std::min(min_abs, a);
      max_abs_w = std::max(max_abs_w, a);
    }
    section["negative_edges"] = negative;
    section["min_abs_weight"] = min_abs;
    section["max_abs_weight"] = max_abs_w;
    doc["graph"] = std::move(section);
  }

  const BalanceResult balance = detect_balance(g);
  {
    ordered_json section;
    section["balanced"] = balance.balanced;
    if (balance.gauge) {
      ordered_json sigma = ordered_json::array();
      for (int s : balance.gauge->sigma) sigma.push_back(s);
      section["gauge"] = std::move(sigma);
    }
    if (balance.bipartition) {
      section["bipartition"] = ordered_json{{"positive", names_of(g, balance.bipartition->first)},
                                            {"negative", names_of(g, balance.bipartition->second)}};
    }
    if (balance.witness_cycle) section["witness_cycle"] = names_of(g, *balance.witness_cycle);
    const EquivalenceReport eq = verify_equivalences(g);
    section["equivalences"] = ordered_json{{"balanced_by_traversal", eq.balanced_by_traversal},
                                           {"gauge_restores_positivity", eq.gauge_restores_positivity},
                                           {"fundamental_cycles_positive", eq.fundamental_cycles_positive},
                                           {"laplacian_has_zero_eigenvalue", eq.laplacian_has_zero_eigenvalue},
                                           {"bipartition_valid", eq.bipartition_valid},
                                           {"all_agree", eq.all_agree()}};
    section["lambda_min"] = eq.lambda_min;
    section["lambda_max"] = eq.lambda_max;
    doc["balance"] = std::move(section);
  }

  {
    ordered_json section;
    if (g.node_count() <= options.max_n) {
      const auto autos = find_automorphisms(g, {}, options.max_n);
      section["automorphism_count"] = static_cast<int>(autos.size());
      int nontrivial = 0;
      for (const auto& a : autos)
        if (!a.is_identity()) ++nontrivial;
      section["nontrivial_count"] = nontrivial;
    } else {
      section["automorphism_count"] = nullptr;
      section["note"] = "graph exceeds the automorphism search cap";
    }
    if (!options.leaders.empty() && static_cast<int>(options.leaders.size()) < g.node_count()) {
      const auto sys = leader_follower_split(g.underlying_unsigned(), options.leaders);
      const auto sym = input_symmetry(sys);
      section["input_symmetric"] = sym.has_value();
      if (sym) {
        ordered_json image = ordered_json::array();
        for (int v : sym->mapping) image.push_back(g.node_name(sys.floating_nodes[v]));
        section["input_symmetry_image"] = std::move(image);
      }
    }
    doc["symmetry"] = std::move(section);
  }

  {
    ordered_json section;
    Partition seed = options.partition_seed ? *options.partition_seed : Partition::single_cell(g.node_count());
    if (!options.partition_seed && !options.leaders.empty()) {
      seed.cells.clear();
      std::vector<char> is_leader(g.node_count(), 0);
      for (int i : options.leaders) is_leader[i] = 1;
      std::vector<int> floating;
      for (int i = 0; i < g.node_count(); ++i)
        if (!is_leader[i]) floating.push_back(i);
      if (!floating.empty()) seed.cells.push_back(floating);
      for (int i : options.leaders) seed.cells.push_back({i});
      seed = seed.normalized();
    }
    const Partition pi = coarsest_equitable_refinement(g, seed);
    section["seed"] = cells_of(g, seed);
    section["coarsest_equitable"] = cells_of(g, pi);
    section["nontrivial_cells"] = static_cast<int>(pi.nontrivial_cells().size());
    section["quotient"] = matrix_json(quotient(g, pi));
    doc["partition"] = std::move(section);
  }

  {
    ordered_json section;
    if (!options.leaders.empty()) {
      ordered_json lf;
      const auto sys = leader_follower_split(g, options.leaders);
      lf["leaders"] = names_of(g, options.leaders);
      if (options.leaders.size() == 1 && g.is_connected()) {
        lf["theorem_1"] = verdict_json(theorem1_verdict(g, options.leaders.front()));
      }
      if (g.is_connected()) lf["theorem_3"] = verdict_json(theorem3_verdict(g, options.leaders));
      ordered_json shared = ordered_json::array();
      for (double v : common_eigenvalue_check(g.laplacian(), sys.floating_matrix())) shared.push_back(v);
      lf["common_eigenvalues"] = std::move(shared);
      const RatMat influenced = controllability_matrix(g.laplacian_exact(), make_influenced(g, options.leaders, options.leaders).b_exact());
      lf["influenced_controllability_matrix"] = matrix_json(influenced);
      lf["influenced_rank"] = influenced.rank();
      section["leader_follower"] = std::move(lf);
    }
    if (!options.inputs.empty() && !options.outputs.empty()) {
      ordered_json inf;
      const auto sys = make_influenced(g, options.inputs, options.outputs);
      inf["inputs"] = names_of(g, options.inputs);
      inf["outputs"] = names_of(g, options.outputs);
      const RatMat kal = kalman_matrix(negated(sys.laplacian), sys.b_exact());
      inf["state_rank"] = kal.rank();
      inf["state_controllable"] = kal.rank() == sys.state_dim();
      const std::optional<Gauge> gauge = balance.gauge;
      inf["output_controllability"] = verdict_json(output_controllability(sys, gauge));
      const Eigen::MatrixXd minus_l = -g.laplacian();
      inf["state_stabilizability"] =
          verdict_json(stabilizability(minus_l, sys.b_matrix(), StabilizabilityMode::state));
      inf["output_stabilizability"] =
          verdict_json(stabilizability(minus_l, sys.b_matrix(), StabilizabilityMode::output, sys.c_matrix()));
      const auto cert = check_theorem4_conditions(sys, gauge);
      inf["theorem_4"] = ordered_json{{"condition_a", cert.cond_a},
                                      {"condition_b", cert.cond_b},
                                      {"condition_c", cert.cond_c},
                                      {"condition_abc", cert.cond_abc},
                                      {"commutant_dimension", cert.dimension()},
                                      {"witness_class", cert.witness_class},
                                      {"assumptions", cert.assumptions}};
      section["influenced"] = std::move(inf);
    }
    doc["control"] = std::move(section);
  }

  doc["provenance"] = ordered_json{{"tool", "signet"},
                                   {"version", kVersion},
                                   {"tolerances", ordered_json{{"eigenvalue_zero", options.tol_eig},
                                                               {"rank_relative", options.tol_rank},
                                                               {"eigenvalue_pairing", 1e-8},
                                                               {"orthonormality", 1e-12}}},
                                   {"graph_hash", canonical_hash(g)}};
  return doc;
}

namespace {

void render(const ordered_json& value, const std::string& key, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<size_t>(depth) * 2, ' ');
  if (value.is_object()) {
    if (!key.empty()) out << pad << key << ":\n";
    for (const auto& [k, v] : value.items()) render(v, k, key.empty() ? depth : depth + 1, out);
    return;
  }
  if (value.is_array()) {
    const bool scalars = std::all_of(value.begin(), value.end(), [](const ordered_json& v) { return !v.is_structured(); });
    if (scalars) {
      out << pad << key << ": " << value.dump() << "\n";
    } else {
      out << pad << key << ":\n";
      int idx = 0;
      for (const auto& v : value) render(v, "[" + std::to_string(idx++) + "]", depth + 1, out);
    }
    return;
  }
  out << pad << key << ": " << value.dump() << "\n";
}

}  // namespace

std::string render_text(const ordered_json& doc) {
  std::ostringstream out;
  render(doc, "", 0, out);
  return out.str();
}

}  // namespace signet
