#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "signet/graph.hpp"
#include "signet/simulate.hpp"

namespace signet {

/// Reads either format, sniffed by the first non-whitespace character:
/// '{' selects the structured JSON form {"nodes": [...], "edges": [{u,v,w}]},
/// anything else the plain text form "u v w" per line with nodes inferred in
/// first-appearance order.
SignedGraph parse_graph_file(const std::string& path);
SignedGraph parse_graph_string(const std::string& text, const std::string& origin);

std::string emit_graph_text(const SignedGraph& g);
nlohmann::ordered_json graph_to_json(const SignedGraph& g);
SignedGraph graph_from_json(const nlohmann::json& doc, const std::string& origin);
std::string emit_graph_json(const SignedGraph& g);

/// CSV schema: header "t,x_<node>,...", one row per sample, full precision.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const std::vector<std::string>& node_names);

/// "%.17g" formatting used everywhere a float crosses the interface.
std::string format_full(double v);

}  // namespace signet
