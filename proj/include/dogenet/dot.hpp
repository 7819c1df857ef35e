#pragma once

#include <string>
#include <vector>

#include "dogenet/centrality.hpp"
#include "dogenet/community.hpp"
#include "dogenet/family_graph.hpp"
#include "dogenet/style.hpp"

namespace dogenet {

struct DotOptions {
  /// Sizes nodes by score when set; must cover every node.
  const CentralityScores* scores = nullptr;
  /// Colours nodes by community instead of tier when set.
  const Partition* partition = nullptr;
  /// One edge statement per marriage instead of per family pair.
  bool multigraph = false;
  std::string graph_name = "families";
};

/// Graphviz (undirected) text. Output depends only on the inputs, so it is
/// byte-stable across runs. Missing tier colours fall back to the None
/// colour and add a message to `warnings` when given.
std::string export_dot(const FamilyGraph& g, const StyleMap& style, const DotOptions& options = {},
                       std::vector<std::string>* warnings = nullptr);

}  // namespace dogenet
