#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dogenet/family_graph.hpp"

namespace dogenet {

/// Graphviz rendering of one NodeShape.
struct ShapeStyle {
  std::string shape;
  std::string style;

  friend bool operator==(const ShapeStyle&, const ShapeStyle&) = default;
};

struct StyleMap {
  std::map<NobilityTier, std::string> tier_colors;
  std::map<NodeShape, ShapeStyle> shapes;
  /// Node width range (inches) for the betweenness size rule.
  double min_width = 0.3;
  double max_width = 2.0;
  /// Cycled through when colouring by community.
  std::vector<std::string> community_palette;
  /// Colour of edges joining two communities.
  std::string bridge_edge_color = "red";
};

/// Nine tier colours, the circle/ball/square rule, and widths 0.3..2.0.
StyleMap default_style();

/// Reads a JSON style file layered over default_style(). Recognised keys:
/// "tier_colors" {label: colour}, "shapes" {"circle"|"ball"|"square":
/// {"shape", "style"}}, "min_width", "max_width", "community_palette",
/// "bridge_edge_color". Tiers absent from "tier_colors" keep their default.
/// Throws std::invalid_argument on malformed input or unknown tier labels.
StyleMap load_style(std::string_view json_text);

/// Affine map of `score` from [lo, hi] onto [min_width, max_width];
/// a degenerate range maps to min_width.
double node_width(const StyleMap& style, double score, double lo, double hi);

}  // namespace dogenet
