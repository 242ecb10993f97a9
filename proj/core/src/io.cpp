#include "signet/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace signet {

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

Rational weight_from_json(const nlohmann::json& w, const std::string& where) {
  if (w.is_number_integer()) return Rational(BigInt(w.get<long long>()));
  if (w.is_number_float()) return rational_from_double(w.get<double>());
  if (w.is_string()) return parse_rational(w.get<std::string>());
  throw ParseError(where + ": edge weight must be a number or a numeric string");
}

}  // namespace

SignedGraph graph_from_json(const nlohmann::json& doc, const std::string& origin) {
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges"))
    throw ParseError(origin + ": expected an object with 'nodes' and 'edges'");
  std::vector<std::string> nodes;
  for (const auto& n : doc.at("nodes")) {
    if (!n.is_string()) throw ParseError(origin + ": node identifiers must be strings");
    nodes.push_back(n.get<std::string>());
  }
  std::vector<EdgeSpec> edges;
  int k = 0;
  for (const auto& e : doc.at("edges")) {
    const std::string where = origin + ": edge " + std::to_string(k++);
    if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("w"))
      throw ParseError(where + " must be an object with 'u', 'v', 'w'");
    edges.push_back({e.at("u").get<std::string>(), e.at("v").get<std::string>(), weight_from_json(e.at("w"), where)});
  }
  try {
    return SignedGraph::build(std::move(nodes), edges);
  } catch (const ValidationError& err) {
    throw ValidationError(origin + ": " + err.what());
  }
}

SignedGraph parse_graph_string(const std::string& text, const std::string& origin) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError(origin + ": empty graph file");
  if (text[first] == '{') {
    try {
      return graph_from_json(nlohmann::json::parse(text), origin);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(origin + ": " + e.what());
    }
  }

  std::vector<std::string> nodes;
  std::vector<EdgeSpec> edges;
  std::unordered_map<std::string, int> seen;
  auto declare = [&](const std::string& name) {
    if (seen.emplace(name, static_cast<int>(nodes.size())).second) nodes.push_back(name);
  };

  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string u, v, w, extra;
    if (!(fields >> u)) continue;  // blank line
    if (u[0] == '#') continue;
    if (!(fields >> v >> w) || (fields >> extra))
      throw ParseError(origin + ": line " + std::to_string(line_no) + ": expected 'u v w'");
    Rational weight;
    try {
      weight = parse_rational(w);
    } catch (const ParseError&) {
      throw ParseError(origin + ": line " + std::to_string(line_no) + ": invalid weight '" + w + "'");
    }
    declare(u);
    declare(v);
    edges.push_back({u, v, weight});
  }
  try {
    return SignedGraph::build(std::move(nodes), edges);
  } catch (const ValidationError& err) {
    throw ValidationError(origin + ": " + err.what());
  }
}

SignedGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_string(buffer.str(), path);
}

std::string emit_graph_text(const SignedGraph& g) {
  std::ostringstream out;
  for (const auto& e : g.edges()) out << g.node_name(e.u) << " " << g.node_name(e.v) << " " << to_string(e.w) << "\n";
  // Isolated nodes have no edge line; the JSON format carries them.
  return out.str();
}

nlohmann::ordered_json graph_to_json(const SignedGraph& g) {
  nlohmann::ordered_json doc;
  doc["nodes"] = g.nodes();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    nlohmann::ordered_json edge;
    edge["u"] = g.node_name(e.u);
    edge["v"] = g.node_name(e.v);
    if (e.w.denominator() == 1 && abs(e.w) < Rational(BigInt(1) << 53))
      edge["w"] = e.w.numerator().convert_to<long long>();
    else
      edge["w"] = to_string(e.w);
    doc["edges"].push_back(std::move(edge));
  }
  return doc;
}

std::string emit_graph_json(const SignedGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const std::vector<std::string>& node_names) {
  os << "t";
  for (const auto& name : node_names) os << ",x_" << name;
  os << "\n";
  for (size_t k = 0; k < traj.times.size(); ++k) {
    os << format_full(traj.times[k]);
    for (int i = 0; i < traj.states[k].size(); ++i) os << "," << format_full(traj.states[k](i));
    os << "\n";
  }
}

}  // namespace signet
