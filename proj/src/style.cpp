#include "dogenet/style.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dogenet {

StyleMap default_style() {
  StyleMap s;
  s.tier_colors = {
      {NobilityTier::None, "darkgray"},
      {NobilityTier::Ancient, "lightgray"},
      {NobilityTier::ExtinctPreSerrata, "gray"},
      {NobilityTier::Evangeliche, "gold"},
      {NobilityTier::Nuove, "lightgreen"},
      {NobilityTier::Nuovissime, "red"},
      {NobilityTier::Soldi, "yellow"},
      {NobilityTier::Vecchie, "lightblue"},
      {NobilityTier::Apostoliche, "pink"},
  };
  s.shapes = {
      {NodeShape::Circle, {"circle", "filled"}},
      // radial gradient fill draws a shaded sphere
      {NodeShape::Ball, {"circle", "radial"}},
      {NodeShape::Square, {"square", "filled"}},
  };
  s.community_palette = {"lightblue", "lightgreen", "gold", "pink", "orange", "plum",
                         "lightcyan", "khaki", "salmon", "lightgray"};
  return s;
}

StyleMap load_style(std::string_view json_text) {
  StyleMap s = default_style();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("style: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("style: top level must be an object");

  try {
    if (doc.contains("tier_colors")) {
      for (const auto& [label, color] : doc.at("tier_colors").items()) {
        const auto tier = parse_tier(label);
        if (!tier) throw std::invalid_argument("style: unknown tier '" + label + "'");
        s.tier_colors[*tier] = color.get<std::string>();
      }
    }
    if (doc.contains("shapes")) {
      for (const auto& [key, value] : doc.at("shapes").items()) {
        NodeShape shape;
        if (key == "circle") shape = NodeShape::Circle;
        else if (key == "ball") shape = NodeShape::Ball;
        else if (key == "square") shape = NodeShape::Square;
        else throw std::invalid_argument("style: unknown shape '" + key + "'");
        s.shapes[shape] = {value.at("shape").get<std::string>(), value.value("style", std::string("filled"))};
      }
    }
    if (doc.contains("min_width")) s.min_width = doc.at("min_width").get<double>();
    if (doc.contains("max_width")) s.max_width = doc.at("max_width").get<double>();
    if (doc.contains("community_palette")) {
      s.community_palette = doc.at("community_palette").get<std::vector<std::string>>();
    }
    if (doc.contains("bridge_edge_color")) s.bridge_edge_color = doc.at("bridge_edge_color").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("style: ") + e.what());
  }
  if (s.min_width <= 0.0 || s.max_width < s.min_width) throw std::invalid_argument("style: bad width range");
  if (s.community_palette.empty()) throw std::invalid_argument("style: empty community_palette");
  return s;
}

double node_width(const StyleMap& style, double score, double lo, double hi) {
  if (!(hi > lo)) return style.min_width;
  return style.min_width + (score - lo) / (hi - lo) * (style.max_width - style.min_width);
}

}  // namespace dogenet
