#include "dogenet/centrality.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <thread>

namespace dogenet {

namespace {

constexpr int kUnreached = -1;

// Dependencies of one BFS source, Brandes-style.
std::vector<double> source_dependencies(const FamilyGraph& g, NodeId s, bool multigraph) {
  const std::size_t n = g.node_count();
  std::vector<int> dist(n, kUnreached);
  std::vector<double> sigma(n, 0.0);
  std::vector<double> delta(n, 0.0);
  std::vector<NodeId> order;
  order.reserve(n);

  dist[s] = 0;
  sigma[s] = 1.0;
  std::queue<NodeId> queue;
  queue.push(s);
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop();
    order.push_back(v);
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
      if (dist[w] == dist[v] + 1) {
        const double paths = multigraph ? static_cast<double>(g.multiplicity(v, w)) : 1.0;
        sigma[w] += sigma[v] * paths;
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId w = *it;
    for (NodeId v : g.neighbors(w)) {
      if (dist[v] != dist[w] - 1) continue;
      const double paths = multigraph ? static_cast<double>(g.multiplicity(v, w)) : 1.0;
      delta[v] += sigma[v] * paths / sigma[w] * (1.0 + delta[w]);
    }
  }
  delta[s] = 0.0;
  return delta;
}

CentralityScores to_scores(const FamilyGraph& g, Metric metric, const std::vector<double>& values) {
  CentralityScores out;
  out.metric = metric;
  for (NodeId id = 0; id < g.node_count(); ++id) out.scores[g.node(id).name] = values[id];
  return out;
}

std::vector<int> bfs_distances(const FamilyGraph& g, NodeId s) {
  std::vector<int> dist(g.node_count(), kUnreached);
  dist[s] = 0;
  std::queue<NodeId> queue;
  queue.push(s);
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop();
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<std::pair<std::string, double>> CentralityScores::ranking() const {
  std::vector<std::pair<std::string, double>> out(scores.begin(), scores.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

CentralityScores betweenness(const FamilyGraph& g, const BetweennessOptions& options) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> per_source(n);

  const unsigned workers = std::min<std::size_t>(std::max(1u, options.threads), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (NodeId s = 0; s < n; ++s) per_source[s] = source_dependencies(g, s, options.multigraph);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (NodeId s = w; s < n; s += workers) per_source[s] = source_dependencies(g, s, options.multigraph);
      });
    }
    for (auto& t : pool) t.join();
  }

  // Reduce in source order so every thread count gives the same bits.
  std::vector<double> total(n, 0.0);
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId v = 0; v < n; ++v) total[v] += per_source[s][v];
  }
  for (double& x : total) x /= 2.0;
  return to_scores(g, Metric::Betweenness, total);
}

CentralityScores closeness(const FamilyGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> values(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    const auto dist = bfs_distances(g, v);
    long long sum = 0;
    std::size_t reached = 0;
    for (NodeId u = 0; u < n; ++u) {
      if (u == v || dist[u] == kUnreached) continue;
      sum += dist[u];
      ++reached;
    }
    values[v] = sum == 0 ? 0.0 : static_cast<double>(reached) / static_cast<double>(sum);
  }
  return to_scores(g, Metric::Closeness, values);
}

CentralityScores brute_force_betweenness(const FamilyGraph& g, bool multigraph) {
  const std::size_t n = g.node_count();
  if (n > kBruteForceLimit) {
    throw std::length_error("brute_force_betweenness: " + std::to_string(n) + " nodes exceeds limit of " +
                            std::to_string(kBruteForceLimit));
  }
  std::vector<std::vector<int>> dist(n);
  for (NodeId s = 0; s < n; ++s) dist[s] = bfs_distances(g, s);

  std::vector<double> values(n, 0.0);
  std::vector<NodeId> path;
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId t = s + 1; t < n; ++t) {
      if (dist[s][t] == kUnreached) continue;
      // Walk every geodesic s -> t, stepping only to nodes one layer closer
      // to t; each path carries the product of its edge multiplicities.
      double total_paths = 0.0;
      std::vector<double> through(n, 0.0);
      path.assign(1, s);
      auto walk = [&](auto&& self, NodeId v, double weight) -> void {
        if (v == t) {
          total_paths += weight;
          for (std::size_t i = 1; i + 1 < path.size(); ++i) through[path[i]] += weight;
          return;
        }
        for (NodeId w : g.neighbors(v)) {
          if (dist[w][t] != dist[v][t] - 1) continue;
          const double mult = multigraph ? static_cast<double>(g.multiplicity(v, w)) : 1.0;
          path.push_back(w);
          self(self, w, weight * mult);
          path.pop_back();
        }
      };
      walk(walk, s, 1.0);
      for (NodeId v = 0; v < n; ++v) {
        if (through[v] > 0.0) values[v] += through[v] / total_paths;
      }
    }
  }
  return to_scores(g, Metric::Betweenness, values);
}

}  // namespace dogenet
