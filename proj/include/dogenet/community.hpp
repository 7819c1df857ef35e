#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dogenet/family_graph.hpp"

namespace dogenet {

/// Disjoint communities covering a graph's nodes. Communities are sorted
/// by size descending, then by first member; members are sorted.
struct Partition {
  std::vector<std::vector<std::string>> communities;
  double modularity = 0.0;

  /// family -> community index
  std::map<std::string, std::size_t> membership() const;
};

/// Newman-Girvan Q on the simple-graph view:
///   Q = sum_c [ e_c / m - (d_c / 2m)^2 ]
/// Throws std::invalid_argument ("no edges") when m = 0, or when the
/// communities do not cover g's nodes exactly once.
double modularity(const FamilyGraph& g, const std::vector<std::vector<std::string>>& communities);

using FamilyPair = std::pair<std::string, std::string>;

/// Shortest-path betweenness of every edge (unordered pairs counted once),
/// keyed by (a, b) with a < b. Sums to the total distance over connected pairs.
std::map<FamilyPair, double> edge_betweenness(const FamilyGraph& g);

/// Divisive clustering: repeatedly removes the edge with the highest edge
/// betweenness (ties to the lexicographically smallest pair) and records the
/// components after each removal. Returns the recorded split with the
/// highest modularity on the original graph; ties prefer fewer communities,
/// then the earliest split. A graph without edges yields singletons with Q 0.
Partition detect_communities(const FamilyGraph& g);

/// Throws std::logic_error unless p is a disjoint cover of g.
void validate_partition(const FamilyGraph& g, const Partition& p);

}  // namespace dogenet
