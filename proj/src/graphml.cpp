#include "dogenet/graphml.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

namespace dogenet {

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string exact(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void key(std::ostream& out, std::string_view id, std::string_view domain, std::string_view type) {
  out << "  <key id=\"" << id << "\" for=\"" << domain << "\" attr.name=\"" << id << "\" attr.type=\"" << type
      << "\"/>\n";
}

void data(std::ostream& out, std::string_view id, std::string_view value) {
  out << "      <data key=\"" << id << "\">" << xml_escape(value) << "</data>\n";
}

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw std::invalid_argument("graphml: bad boolean '" + s + "'");
}

}  // namespace

std::string export_graphml(const GraphDocument& doc) {
  const FamilyGraph& g = doc.graph;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\"\n"
         "         xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n"
         "         xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
         "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n";
  key(out, "tier", "node", "string");
  key(out, "has_doge", "node", "boolean");
  key(out, "has_dogaressa", "node", "boolean");
  key(out, "doge_count", "node", "int");
  if (doc.betweenness) key(out, "betweenness", "node", "double");
  if (doc.closeness) key(out, "closeness", "node", "double");
  if (doc.community) key(out, "community", "node", "int");
  key(out, "marriages", "edge", "int");
  out << "  <graph id=\"families\" edgedefault=\"undirected\">\n";

  auto lookup = [](const auto& table, const std::string& name, std::string_view what) {
    const auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("graphml: no " + std::string(what) + " for '" + name + "'");
    return it->second;
  };

  for (const auto& n : g.nodes()) {
    out << "    <node id=\"" << xml_escape(n.name) << "\">\n";
    data(out, "tier", tier_label(n.tier));
    data(out, "has_doge", n.has_doge ? "true" : "false");
    data(out, "has_dogaressa", n.has_dogaressa ? "true" : "false");
    data(out, "doge_count", std::to_string(n.doge_count));
    if (doc.betweenness) data(out, "betweenness", exact(lookup(*doc.betweenness, n.name, "betweenness")));
    if (doc.closeness) data(out, "closeness", exact(lookup(*doc.closeness, n.name, "closeness")));
    if (doc.community) data(out, "community", std::to_string(lookup(*doc.community, n.name, "community")));
    out << "    </node>\n";
  }
  std::size_t edge_no = 0;
  for (const auto& [a, b, mult] : g.edges()) {
    out << "    <edge id=\"e" << edge_no++ << "\" source=\"" << xml_escape(g.node(a).name) << "\" target=\""
        << xml_escape(g.node(b).name) << "\">\n";
    data(out, "marriages", std::to_string(mult));
    out << "    </edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

GraphDocument read_graphml(std::string_view text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::read_xml(in, tree, pt::xml_parser::trim_whitespace);
  } catch (const pt::xml_parser_error& e) {
    throw std::invalid_argument(std::string("graphml: ") + e.what());
  }
  const auto root = tree.get_child_optional("graphml");
  if (!root) throw std::invalid_argument("graphml: missing <graphml> root");

  // key id -> attribute name
  std::map<std::string, std::string> names;
  for (const auto& [tag, child] : *root) {
    if (tag != "key") continue;
    names[child.get<std::string>("<xmlattr>.id")] =
        child.get<std::string>(pt::ptree::path_type("<xmlattr>/attr.name", '/'));
  }
  const auto graph = root->get_child_optional("graph");
  if (!graph) throw std::invalid_argument("graphml: missing <graph>");

  GraphDocument doc;
  std::vector<FamilyNode> nodes;
  std::vector<std::tuple<std::string, std::string, std::size_t>> edges;
  std::map<std::string, double> betweenness;
  std::map<std::string, double> closeness;
  std::map<std::string, std::size_t> community;

  auto attributes = [&](const pt::ptree& element) {
    std::map<std::string, std::string> out;
    for (const auto& [tag, child] : element) {
      if (tag != "data") continue;
      const auto id = child.get<std::string>("<xmlattr>.key");
      const auto it = names.find(id);
      out[it == names.end() ? id : it->second] = child.get_value<std::string>();
    }
    return out;
  };

  try {
    for (const auto& [tag, child] : *graph) {
      if (tag == "node") {
        FamilyNode n;
        n.name = child.get<std::string>("<xmlattr>.id");
        const auto attrs = attributes(child);
        const auto tier = parse_tier(attrs.at("tier"));
        if (!tier) throw std::invalid_argument("graphml: unknown tier '" + attrs.at("tier") + "'");
        n.tier = *tier;
        n.has_doge = parse_bool(attrs.at("has_doge"));
        n.has_dogaressa = parse_bool(attrs.at("has_dogaressa"));
        n.doge_count = std::stoul(attrs.at("doge_count"));
        if (const auto it = attrs.find("betweenness"); it != attrs.end()) betweenness[n.name] = std::stod(it->second);
        if (const auto it = attrs.find("closeness"); it != attrs.end()) closeness[n.name] = std::stod(it->second);
        if (const auto it = attrs.find("community"); it != attrs.end()) community[n.name] = std::stoul(it->second);
        nodes.push_back(std::move(n));
      } else if (tag == "edge") {
        const auto attrs = attributes(child);
        const auto it = attrs.find("marriages");
        edges.emplace_back(child.get<std::string>("<xmlattr>.source"), child.get<std::string>("<xmlattr>.target"),
                           it == attrs.end() ? 1 : std::stoul(it->second));
      }
    }
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("graphml: node is missing a required attribute");
  } catch (const pt::ptree_error& e) {
    throw std::invalid_argument(std::string("graphml: ") + e.what());
  }

  doc.graph = FamilyGraph(std::move(nodes), edges);
  if (!betweenness.empty()) doc.betweenness = std::move(betweenness);
  if (!closeness.empty()) doc.closeness = std::move(closeness);
  if (!community.empty()) doc.community = std::move(community);
  return doc;
}

}  // namespace dogenet
