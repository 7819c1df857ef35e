#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dogenet/family_graph.hpp"

namespace dogenet {

enum class Metric { Betweenness, Closeness };

struct CentralityScores {
  Metric metric = Metric::Betweenness;
  std::map<std::string, double> scores;
  bool normalized = false;

  /// Families by score descending, then name ascending.
  std::vector<std::pair<std::string, double>> ranking() const;
  double at(const std::string& family) const { return scores.at(family); }
};

struct BetweennessOptions {
  /// Count parallel marriages as distinct shortest paths.
  bool multigraph = false;
  /// Worker threads over BFS sources; 0 or 1 runs inline. Results are
  /// bit-identical for every thread count.
  unsigned threads = 1;
};

/// Exact unnormalized betweenness, each unordered pair {s, t} counted once
/// and endpoints excluded. Pairs in different components contribute 0.
CentralityScores betweenness(const FamilyGraph& g, const BetweennessOptions& options = {});

/// (n_C - 1) / sum of distances inside the node's component C; an isolated
/// node scores 0.
CentralityScores closeness(const FamilyGraph& g);

inline constexpr std::size_t kBruteForceLimit = 12;

/// Same contract as betweenness(), computed by listing every shortest path
/// of every pair. Throws std::length_error above kBruteForceLimit nodes.
CentralityScores brute_force_betweenness(const FamilyGraph& g, bool multigraph = false);

}  // namespace dogenet
