#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <vector>

#include "signet/graph.hpp"
#include "signet/partitions.hpp"

namespace signet {

struct AnalysisOptions {
  std::vector<int> leaders;   // leader-follower analysis when nonempty
  std::vector<int> inputs;    // influenced analysis when inputs+outputs nonempty
  std::vector<int> outputs;
  double tol_eig = 1e-9;
  double tol_rank = 1e-12;
  int max_n = 16;
  std::optional<Partition> partition_seed;
};

/// Full machine-readable report: graph summary, balance, symmetry, partition,
/// control and provenance sections. Field names are part of the stable
/// interface; every structural verdict sits next to the numerical test it was
/// cross-checked against.
nlohmann::ordered_json build_report(const SignedGraph& g, const AnalysisOptions& options);

/// Flat human-readable rendering of a report document.
std::string render_text(const nlohmann::ordered_json& doc);

}  // namespace signet
