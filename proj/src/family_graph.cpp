#include "dogenet/family_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "dogenet/csv.hpp"
#include "dogenet/text.hpp"

namespace dogenet {

namespace {

struct TierEntry {
  NobilityTier tier;
  std::string_view label;
};

constexpr TierEntry kTiers[] = {
    {NobilityTier::None, "None"},
    {NobilityTier::Ancient, "Ancient"},
    {NobilityTier::ExtinctPreSerrata, "Extinct pre-serrata"},
    {NobilityTier::Evangeliche, "Evangeliche"},
    {NobilityTier::Nuove, "Nuove"},
    {NobilityTier::Nuovissime, "Nuovissime"},
    {NobilityTier::Soldi, "Soldi"},
    {NobilityTier::Vecchie, "Vecchie"},
    {NobilityTier::Apostoliche, "Apostoliche"},
};

// Weighted quick-union with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

std::string_view tier_label(NobilityTier tier) {
  return kTiers[static_cast<std::size_t>(tier)].label;
}

std::optional<NobilityTier> parse_tier(std::string_view label) {
  const std::string wanted = to_lower(trim(label));
  for (const auto& e : kTiers) {
    if (to_lower(e.label) == wanted) return e.tier;
  }
  // Accept the enum spelling too.
  if (wanted == "extinctpreserrata") return NobilityTier::ExtinctPreSerrata;
  return std::nullopt;
}

const std::vector<NobilityTier>& all_tiers() {
  static const std::vector<NobilityTier> tiers = [] {
    std::vector<NobilityTier> out;
    for (const auto& e : kTiers) out.push_back(e.tier);
    return out;
  }();
  return tiers;
}

std::map<std::string, NobilityTier> load_tiers(std::string_view csv_text) {
  std::map<std::string, NobilityTier> tiers;
  if (trim(csv_text).empty()) return tiers;
  const CsvTable csv = parse_csv(csv_text);
  const std::size_t family_col = csv.column("family").value_or(0);
  const std::size_t tier_col = csv.column("tier").value_or(1);
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const auto& row = csv.rows[i];
    if (row.size() <= std::max(family_col, tier_col)) {
      throw std::invalid_argument("families: row " + std::to_string(i + 1) + " has too few fields");
    }
    const auto tier = parse_tier(row[tier_col]);
    if (!tier) {
      throw std::invalid_argument("families: unknown tier '" + row[tier_col] + "' on row " +
                                  std::to_string(i + 1));
    }
    tiers[std::string(trim(row[family_col]))] = *tier;
  }
  return tiers;
}

NodeShape node_shape(const FamilyNode& node) {
  if (node.has_doge && node.has_dogaressa) return NodeShape::Circle;
  if (node.has_doge) return NodeShape::Ball;
  return NodeShape::Square;
}

std::string_view shape_name(NodeShape shape) {
  switch (shape) {
    case NodeShape::Circle: return "circle";
    case NodeShape::Ball: return "ball";
    case NodeShape::Square: return "square";
  }
  return "circle";
}

FamilyGraph::FamilyGraph(std::vector<FamilyNode> nodes,
                         const std::vector<std::tuple<std::string, std::string, std::size_t>>& edges)
    : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const FamilyNode& a, const FamilyNode& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (nodes_[i].name == nodes_[i - 1].name) {
      throw std::invalid_argument("duplicate family '" + nodes_[i].name + "'");
    }
  }
  adjacency_.resize(nodes_.size());
  for (const auto& [a, b, mult] : edges) {
    const auto ia = find(a);
    const auto ib = find(b);
    if (!ia || !ib) throw std::invalid_argument("edge endpoint not in graph: " + a + " -- " + b);
    if (*ia == *ib) throw std::invalid_argument("self-loop on " + a);
    if (mult == 0) throw std::invalid_argument("zero multiplicity on " + a + " -- " + b);
    multiplicity_[std::minmax(*ia, *ib)] += mult;
  }
  for (const auto& [key, mult] : multiplicity_) {
    edges_.emplace_back(key.first, key.second, mult);
    adjacency_[key.first].push_back(key.second);
    adjacency_[key.second].push_back(key.first);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::size_t FamilyGraph::marriage_count() const {
  std::size_t total = 0;
  for (const auto& e : edges_) total += std::get<2>(e);
  return total;
}

std::optional<NodeId> FamilyGraph::find(std::string_view name) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), name,
                                   [](const FamilyNode& n, std::string_view v) { return n.name < v; });
  if (it == nodes_.end() || it->name != name) return std::nullopt;
  return static_cast<NodeId>(it - nodes_.begin());
}

std::size_t FamilyGraph::multiplicity(NodeId a, NodeId b) const {
  const auto it = multiplicity_.find(std::minmax(a, b));
  return it == multiplicity_.end() ? 0 : it->second;
}

bool FamilyGraph::has_edge(std::string_view a, std::string_view b) const {
  const auto ia = find(a);
  const auto ib = find(b);
  return ia && ib && multiplicity(*ia, *ib) > 0;
}

FamilyGraph FamilyGraph::induced(const std::vector<std::string>& names) const {
  std::set<NodeId> keep;
  for (const auto& n : names) {
    if (auto id = find(n)) keep.insert(*id);
  }
  std::vector<FamilyNode> nodes;
  for (NodeId id : keep) nodes.push_back(nodes_[id]);
  std::vector<std::tuple<std::string, std::string, std::size_t>> edges;
  for (const auto& [a, b, mult] : edges_) {
    if (keep.count(a) && keep.count(b)) edges.emplace_back(nodes_[a].name, nodes_[b].name, mult);
  }
  return FamilyGraph(std::move(nodes), edges);
}

FamilyGraph build_graph(const std::vector<Marriage>& marriages,
                        const std::map<std::string, NobilityTier>& tiers) {
  std::map<std::string, FamilyNode> nodes;
  std::map<std::string, std::set<std::size_t>> doges_by_family;
  std::map<std::pair<std::string, std::string>, std::size_t> pairs;

  auto node_for = [&](const std::string& name) -> FamilyNode& {
    auto [it, inserted] = nodes.try_emplace(name);
    if (inserted) {
      it->second.name = name;
      const auto t = tiers.find(name);
      it->second.tier = t == tiers.end() ? NobilityTier::None : t->second;
    }
    return it->second;
  };

  for (const auto& m : marriages) {
    node_for(m.doge_family).has_doge = true;
    node_for(m.dogaressa_family).has_dogaressa = true;
    doges_by_family[m.doge_family].insert(m.doge.row);
    ++pairs[std::minmax(m.doge_family, m.dogaressa_family)];
  }
  std::vector<FamilyNode> list;
  for (auto& [name, node] : nodes) {
    if (const auto it = doges_by_family.find(name); it != doges_by_family.end()) {
      node.doge_count = it->second.size();
    }
    list.push_back(std::move(node));
  }
  std::vector<std::tuple<std::string, std::string, std::size_t>> edges;
  for (const auto& [key, count] : pairs) edges.emplace_back(key.first, key.second, count);
  return FamilyGraph(std::move(list), edges);
}

std::vector<std::vector<std::string>> connected_components(const FamilyGraph& g) {
  DisjointSets sets(g.node_count());
  for (const auto& [a, b, mult] : g.edges()) sets.unite(a, b);

  std::map<std::size_t, std::vector<std::string>> groups;
  // Ids are in name order, so each group comes out sorted.
  for (NodeId id = 0; id < g.node_count(); ++id) groups[sets.find(id)].push_back(g.node(id).name);

  std::vector<std::vector<std::string>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return out;
}

FamilyGraph giant_component(const FamilyGraph& g) {
  if (g.empty()) throw std::invalid_argument("empty graph");
  return g.induced(connected_components(g).front());
}

}  // namespace dogenet
