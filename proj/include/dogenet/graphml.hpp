#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "dogenet/family_graph.hpp"

namespace dogenet {

/// A family graph plus optional per-node analysis results, as stored in
/// GraphML.
struct GraphDocument {
  FamilyGraph graph;
  std::optional<std::map<std::string, double>> betweenness;
  std::optional<std::map<std::string, double>> closeness;
  std::optional<std::map<std::string, std::size_t>> community;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

/// GraphML 1.0 with typed keys: tier, has_doge, has_dogaressa, doge_count,
/// and betweenness / closeness / community when present; edges carry
/// `marriages`. Doubles are written with 17 significant digits so a
/// read-write cycle reproduces the same bytes.
std::string export_graphml(const GraphDocument& doc);

/// Reads documents written by export_graphml. Throws std::invalid_argument
/// on malformed XML or missing node attributes.
GraphDocument read_graphml(std::string_view text);

}  // namespace dogenet
