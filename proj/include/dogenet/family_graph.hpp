#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dogenet/records.hpp"

namespace dogenet {

enum class NobilityTier {
  None,
  Ancient,
  ExtinctPreSerrata,
  Evangeliche,
  Nuove,
  Nuovissime,
  Soldi,
  Vecchie,
  Apostoliche,
};

inline constexpr std::size_t kTierCount = 9;

/// Display label used in families.csv ("Extinct pre-serrata", ...).
std::string_view tier_label(NobilityTier tier);
std::optional<NobilityTier> parse_tier(std::string_view label);
const std::vector<NobilityTier>& all_tiers();

/// Loads a `family,tier` table. Unknown tier labels throw std::invalid_argument.
std::map<std::string, NobilityTier> load_tiers(std::string_view csv_text);

struct FamilyNode {
  std::string name;
  NobilityTier tier = NobilityTier::None;
  bool has_doge = false;
  bool has_dogaressa = false;
  std::size_t doge_count = 0;

  friend bool operator==(const FamilyNode&, const FamilyNode&) = default;
};

enum class NodeShape { Circle, Ball, Square };

/// Circle when the family gave both a doge and a dogaressa, Ball for doges
/// only, Square for dogaresse only.
NodeShape node_shape(const FamilyNode& node);
std::string_view shape_name(NodeShape shape);

using NodeId = std::size_t;

/// Undirected marriage graph between families. Nodes are kept sorted by
/// name, so NodeId order is lexicographic. Immutable once built.
class FamilyGraph {
 public:
  FamilyGraph() = default;

  /// Builds from nodes and (a, b, multiplicity) triples naming families.
  /// Throws std::invalid_argument on self-loops, unknown endpoints,
  /// duplicate node names, or zero multiplicity.
  FamilyGraph(std::vector<FamilyNode> nodes,
              const std::vector<std::tuple<std::string, std::string, std::size_t>>& edges);

  std::size_t node_count() const { return nodes_.size(); }
  /// Distinct family pairs (simple-graph view).
  std::size_t edge_count() const { return edges_.size(); }
  /// Sum of multiplicities: the number of marriages.
  std::size_t marriage_count() const;
  bool empty() const { return nodes_.empty(); }

  const FamilyNode& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<FamilyNode>& nodes() const { return nodes_; }
  std::optional<NodeId> find(std::string_view name) const;

  /// Sorted neighbour ids.
  const std::vector<NodeId>& neighbors(NodeId id) const { return adjacency_.at(id); }
  /// 0 when not adjacent.
  std::size_t multiplicity(NodeId a, NodeId b) const;
  bool has_edge(std::string_view a, std::string_view b) const;

  /// Edges as (a, b, multiplicity) with a < b, sorted.
  const std::vector<std::tuple<NodeId, NodeId, std::size_t>>& edges() const { return edges_; }

  /// Subgraph induced by the given family names (unknown names ignored).
  FamilyGraph induced(const std::vector<std::string>& names) const;

  friend bool operator==(const FamilyGraph& a, const FamilyGraph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<FamilyNode> nodes_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::tuple<NodeId, NodeId, std::size_t>> edges_;
  std::map<std::pair<NodeId, NodeId>, std::size_t> multiplicity_;
};

/// One node per family in any marriage, one edge per marriage (parallel
/// marriages raise the pair's multiplicity). Families missing from `tiers`
/// get NobilityTier::None.
FamilyGraph build_graph(const std::vector<Marriage>& marriages,
                        const std::map<std::string, NobilityTier>& tiers);

/// Connected components as sorted name lists; largest first, ties by the
/// lexicographically smallest member.
std::vector<std::vector<std::string>> connected_components(const FamilyGraph& g);

/// Induced subgraph on the largest component. Throws std::invalid_argument
/// ("empty graph") when g has no nodes.
FamilyGraph giant_component(const FamilyGraph& g);

}  // namespace dogenet
