#include "dogenet/community.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace dogenet {

namespace {

constexpr double kTieEpsilon = 1e-12;

// Mutable simple-graph view used by the removal loop.
struct WorkGraph {
  std::vector<std::set<NodeId>> adj;

  explicit WorkGraph(const FamilyGraph& g) : adj(g.node_count()) {
    for (const auto& [a, b, mult] : g.edges()) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
  }
  bool has_edges() const {
    return std::any_of(adj.begin(), adj.end(), [](const auto& s) { return !s.empty(); });
  }
};

std::map<std::pair<NodeId, NodeId>, double> edge_scores(const WorkGraph& w) {
  const std::size_t n = w.adj.size();
  std::map<std::pair<NodeId, NodeId>, double> score;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b : w.adj[a]) {
      if (a < b) score[{a, b}] = 0.0;
    }
  }
  std::vector<int> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<NodeId> order;
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    std::queue<NodeId> queue;
    queue.push(s);
    while (!queue.empty()) {
      const NodeId v = queue.front();
      queue.pop();
      order.push_back(v);
      for (NodeId x : w.adj[v]) {
        if (dist[x] < 0) {
          dist[x] = dist[v] + 1;
          queue.push(x);
        }
        if (dist[x] == dist[v] + 1) sigma[x] += sigma[v];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId x = *it;
      for (NodeId v : w.adj[x]) {
        if (dist[v] != dist[x] - 1) continue;
        const double c = sigma[v] / sigma[x] * (1.0 + delta[x]);
        score[std::minmax(v, x)] += c;
        delta[v] += c;
      }
    }
  }
  for (auto& [e, v] : score) v /= 2.0;
  return score;
}

std::vector<std::vector<NodeId>> components(const WorkGraph& w) {
  const std::size_t n = w.adj.size();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<NodeId>> out;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<NodeId> comp;
    std::vector<NodeId> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (NodeId x : w.adj[v]) {
        if (!seen[x]) {
          seen[x] = 1;
          stack.push_back(x);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<std::string>> named(const FamilyGraph& g, const std::vector<std::vector<NodeId>>& comps) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : comps) {
    std::vector<std::string> names;
    for (NodeId id : c) names.push_back(g.node(id).name);
    out.push_back(std::move(names));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return out;
}

}  // namespace

std::map<std::string, std::size_t> Partition::membership() const {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < communities.size(); ++i) {
    for (const auto& name : communities[i]) out[name] = i;
  }
  return out;
}

double modularity(const FamilyGraph& g, const std::vector<std::vector<std::string>>& communities) {
  const double m = static_cast<double>(g.edge_count());
  if (g.edge_count() == 0) throw std::invalid_argument("no edges");

  std::vector<long> label(g.node_count(), -1);
  for (std::size_t c = 0; c < communities.size(); ++c) {
    for (const auto& name : communities[c]) {
      const auto id = g.find(name);
      if (!id) throw std::invalid_argument("partition names unknown family '" + name + "'");
      if (label[*id] != -1) throw std::invalid_argument("family '" + name + "' in two communities");
      label[*id] = static_cast<long>(c);
    }
  }
  if (std::find(label.begin(), label.end(), -1) != label.end()) {
    throw std::invalid_argument("partition does not cover every family");
  }

  std::vector<double> internal(communities.size(), 0.0);
  std::vector<double> degree(communities.size(), 0.0);
  for (const auto& [a, b, mult] : g.edges()) {
    degree[label[a]] += 1.0;
    degree[label[b]] += 1.0;
    if (label[a] == label[b]) internal[label[a]] += 1.0;
  }
  double q = 0.0;
  for (std::size_t c = 0; c < communities.size(); ++c) {
    const double share = degree[c] / (2.0 * m);
    q += internal[c] / m - share * share;
  }
  return q;
}

std::map<FamilyPair, double> edge_betweenness(const FamilyGraph& g) {
  std::map<FamilyPair, double> out;
  for (const auto& [e, v] : edge_scores(WorkGraph(g))) {
    out[{g.node(e.first).name, g.node(e.second).name}] = v;
  }
  return out;
}

Partition detect_communities(const FamilyGraph& g) {
  Partition best;
  if (g.empty()) return best;

  WorkGraph work(g);
  auto comps = components(work);
  best.communities = named(g, comps);
  if (g.edge_count() == 0) {
    best.modularity = 0.0;
    return best;
  }
  best.modularity = modularity(g, best.communities);
  std::size_t last_count = comps.size();

  while (work.has_edges()) {
    const auto scores = edge_scores(work);
    // Node ids follow name order, so the first maximal key is the
    // lexicographically smallest family pair.
    auto top = scores.begin();
    for (auto it = scores.begin(); it != scores.end(); ++it) {
      if (it->second > top->second + kTieEpsilon) top = it;
    }
    const auto [a, b] = top->first;
    work.adj[a].erase(b);
    work.adj[b].erase(a);

    comps = components(work);
    if (comps.size() == last_count) continue;
    last_count = comps.size();
    auto candidate = named(g, comps);
    const double q = modularity(g, candidate);
    if (q > best.modularity + kTieEpsilon) {
      best.communities = std::move(candidate);
      best.modularity = q;
    }
  }
  return best;
}

void validate_partition(const FamilyGraph& g, const Partition& p) {
  std::set<std::string> seen;
  for (const auto& c : p.communities) {
    if (c.empty()) throw std::logic_error("empty community");
    for (const auto& name : c) {
      if (!g.find(name)) throw std::logic_error("unknown family '" + name + "' in partition");
      if (!seen.insert(name).second) throw std::logic_error("family '" + name + "' in two communities");
    }
  }
  if (seen.size() != g.node_count()) throw std::logic_error("partition does not cover the graph");
}

}  // namespace dogenet
