#include "dogenet/dot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dogenet {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string fixed5(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", x);
  return buf;
}

std::string_view role_of(const FamilyNode& n) {
  switch (node_shape(n)) {
    case NodeShape::Circle: return "both";
    case NodeShape::Ball: return "doge";
    case NodeShape::Square: return "dogaressa";
  }
  return "both";
}

}  // namespace

std::string export_dot(const FamilyGraph& g, const StyleMap& style, const DotOptions& options,
                       std::vector<std::string>* warnings) {
  double lo = 0.0;
  double hi = 0.0;
  if (options.scores) {
    bool first = true;
    for (const auto& n : g.nodes()) {
      const auto it = options.scores->scores.find(n.name);
      if (it == options.scores->scores.end()) {
        throw std::invalid_argument("export_dot: no score for '" + n.name + "'");
      }
      lo = first ? it->second : std::min(lo, it->second);
      hi = first ? it->second : std::max(hi, it->second);
      first = false;
    }
  }
  const auto membership = options.partition ? options.partition->membership() : std::map<std::string, std::size_t>{};

  std::ostringstream out;
  out << "graph " << quoted(options.graph_name) << " {\n";
  out << "  graph [overlap=false, splines=true];\n";
  out << "  node [fontname=\"Helvetica\", fontsize=10];\n";

  for (const auto& n : g.nodes()) {
    const ShapeStyle& shape = style.shapes.at(node_shape(n));
    std::string color;
    if (options.partition) {
      const auto it = membership.find(n.name);
      if (it == membership.end()) throw std::invalid_argument("export_dot: '" + n.name + "' has no community");
      color = style.community_palette[it->second % style.community_palette.size()];
    } else if (const auto it = style.tier_colors.find(n.tier); it != style.tier_colors.end()) {
      color = it->second;
    } else {
      color = style.tier_colors.at(NobilityTier::None);
      if (warnings) {
        warnings->push_back("no colour for tier '" + std::string(tier_label(n.tier)) + "' of " + n.name +
                            "; using the None colour");
      }
    }

    out << "  " << quoted(n.name) << " [shape=" << shape.shape << ", style=" << quoted(shape.style)
        << ", fillcolor=" << quoted(color) << ", tier=" << quoted(std::string(tier_label(n.tier)))
        << ", role=" << role_of(n) << ", doge_count=" << n.doge_count;
    if (options.partition) out << ", community=" << membership.at(n.name);
    if (options.scores) {
      const double score = options.scores->scores.at(n.name);
      out << ", betweenness=" << fixed5(score) << ", width=" << fixed5(node_width(style, score, lo, hi))
          << ", fixedsize=true";
    }
    out << "];\n";
  }

  for (const auto& [a, b, mult] : g.edges()) {
    const std::string& na = g.node(a).name;
    const std::string& nb = g.node(b).name;
    std::string attrs;
    if (options.partition && membership.at(na) != membership.at(nb)) {
      attrs = "color=" + quoted(style.bridge_edge_color);
    }
    const std::size_t statements = options.multigraph ? mult : 1;
    if (!options.multigraph && mult > 1) {
      attrs += (attrs.empty() ? "" : ", ") + std::string("marriages=") + std::to_string(mult);
    }
    for (std::size_t k = 0; k < statements; ++k) {
      out << "  " << quoted(na) << " -- " << quoted(nb);
      if (!attrs.empty()) out << " [" << attrs << "]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace dogenet
