#include <gtest/gtest.h>

#include <regex>

#include <nlohmann/json.hpp>

#include "dogenet/csv.hpp"
#include "dogenet/dot.hpp"
#include "dogenet/graphml.hpp"
#include "dogenet/reports.hpp"
#include "dogenet/style.hpp"

using namespace dogenet;

namespace {

FamilyGraph sample() {
  std::vector<FamilyNode> nodes{
      {"Contarini", NobilityTier::Apostoliche, true, true, 2},
      {"Manin", NobilityTier::Soldi, true, false, 1},
      {"Grimani", NobilityTier::Vecchie, false, true, 0},
      {"Loredan", NobilityTier::Ancient, true, true, 1},
  };
  return FamilyGraph(nodes, {{"Manin", "Grimani", 1}, {"Grimani", "Loredan", 2}, {"Loredan", "Contarini", 1}});
}

std::string line_for(const std::string& dot, const std::string& family) {
  std::smatch m;
  const std::regex re("\n  \"" + family + "\" \\[([^\n]*)\\];");
  if (!std::regex_search(dot, m, re)) return {};
  return m[1].str();
}

}  // namespace

TEST(Style, DefaultTierColours) {
  const auto s = default_style();
  const std::map<NobilityTier, std::string> expected{
      {NobilityTier::None, "darkgray"},     {NobilityTier::Ancient, "lightgray"},
      {NobilityTier::ExtinctPreSerrata, "gray"}, {NobilityTier::Evangeliche, "gold"},
      {NobilityTier::Nuove, "lightgreen"},  {NobilityTier::Nuovissime, "red"},
      {NobilityTier::Soldi, "yellow"},      {NobilityTier::Vecchie, "lightblue"},
      {NobilityTier::Apostoliche, "pink"},
  };
  EXPECT_EQ(s.tier_colors, expected);
  for (auto t : all_tiers()) EXPECT_TRUE(s.tier_colors.count(t));
}

TEST(Style, LoadOverrides) {
  const auto s = load_style(R"({"tier_colors": {"Soldi": "orange"}, "min_width": 0.5})");
  EXPECT_EQ(s.tier_colors.at(NobilityTier::Soldi), "orange");
  EXPECT_EQ(s.tier_colors.at(NobilityTier::Apostoliche), "pink");
  EXPECT_DOUBLE_EQ(s.min_width, 0.5);
  EXPECT_THROW(load_style("{"), std::invalid_argument);
  EXPECT_THROW(load_style(R"({"tier_colors": {"Royal": "blue"}})"), std::invalid_argument);
  EXPECT_THROW(load_style(R"({"min_width": 3.0})"), std::invalid_argument);
}

TEST(Style, NodeWidthAffine) {
  const auto s = default_style();
  EXPECT_DOUBLE_EQ(node_width(s, 0.0, 0.0, 10.0), 0.3);
  EXPECT_DOUBLE_EQ(node_width(s, 10.0, 0.0, 10.0), 2.0);
  EXPECT_DOUBLE_EQ(node_width(s, 5.0, 0.0, 10.0), 1.15);
  EXPECT_DOUBLE_EQ(node_width(s, 4.0, 4.0, 4.0), 0.3);
}

TEST(Dot, TierColoursAndShapes) {
  const auto dot = export_dot(sample(), default_style());
  EXPECT_EQ(dot.rfind("graph \"families\" {\n", 0), 0u);
  const auto manin = line_for(dot, "Manin");
  EXPECT_NE(manin.find("fillcolor=\"yellow\""), std::string::npos);
  EXPECT_NE(manin.find("shape=circle, style=\"radial\""), std::string::npos);
  const auto contarini = line_for(dot, "Contarini");
  EXPECT_NE(contarini.find("fillcolor=\"pink\""), std::string::npos);
  EXPECT_NE(contarini.find("shape=circle, style=\"filled\""), std::string::npos);
  EXPECT_NE(line_for(dot, "Grimani").find("shape=square"), std::string::npos);
  EXPECT_EQ(dot.find("width="), std::string::npos);
}

TEST(Dot, EdgesSimpleAndMulti) {
  const auto g = sample();
  const auto simple = export_dot(g, default_style());
  EXPECT_NE(simple.find("\"Grimani\" -- \"Loredan\" [marriages=2];"), std::string::npos);
  DotOptions multi;
  multi.multigraph = true;
  const auto m = export_dot(g, default_style(), multi);
  std::size_t count = 0;
  for (std::size_t p = m.find("\"Grimani\" -- \"Loredan\";"); p != std::string::npos;
       p = m.find("\"Grimani\" -- \"Loredan\";", p + 1))
    ++count;
  EXPECT_EQ(count, 2u);
}

TEST(Dot, UniformScoresGiveMinWidth) {
  const auto g = sample();
  CentralityScores scores;
  for (const auto& n : g.nodes()) scores.scores[n.name] = 3.0;
  DotOptions opts;
  opts.scores = &scores;
  const auto dot = export_dot(g, default_style(), opts);
  for (const auto& n : g.nodes()) EXPECT_NE(line_for(dot, n.name).find("width=0.30000"), std::string::npos);
}

TEST(Dot, CommunityColoursAndBridgeEdges) {
  Partition p{{{"Contarini", "Loredan"}, {"Grimani", "Manin"}}, 0.1};
  DotOptions opts;
  opts.partition = &p;
  const auto style = default_style();
  const auto dot = export_dot(sample(), style, opts);
  EXPECT_NE(line_for(dot, "Manin").find("fillcolor=\"" + style.community_palette[1] + "\""), std::string::npos);
  EXPECT_NE(dot.find("\"Grimani\" -- \"Loredan\" [color=\"red\", marriages=2];"), std::string::npos);
}

TEST(Dot, MissingTierColourFallsBack) {
  auto style = default_style();
  style.tier_colors.erase(NobilityTier::Soldi);
  std::vector<std::string> warnings;
  const auto dot = export_dot(sample(), style, {}, &warnings);
  EXPECT_NE(line_for(dot, "Manin").find("fillcolor=\"darkgray\""), std::string::npos);
  ASSERT_EQ(warnings.size(), 1u);
}

TEST(Dot, Deterministic) {
  EXPECT_EQ(export_dot(sample(), default_style()), export_dot(sample(), default_style()));
}

TEST(GraphML, EmptyGraph) {
  const auto text = export_graphml({});
  EXPECT_NE(text.find("<graphml"), std::string::npos);
  EXPECT_EQ(text.find("<node"), std::string::npos);
  EXPECT_EQ(read_graphml(text).graph.node_count(), 0u);
}

TEST(GraphML, RoundTripFixpoint) {
  GraphDocument doc;
  doc.graph = sample();
  doc.betweenness = {{"Contarini", 0.0}, {"Grimani", 2.0}, {"Loredan", 2.0}, {"Manin", 1.0 / 3.0}};
  doc.closeness = {{"Contarini", 0.5}, {"Grimani", 0.75}, {"Loredan", 0.75}, {"Manin", 0.1}};
  doc.community = {{"Contarini", 0}, {"Grimani", 1}, {"Loredan", 0}, {"Manin", 1}};
  const auto first = export_graphml(doc);
  const auto back = read_graphml(first);
  EXPECT_EQ(back, doc);
  EXPECT_EQ(export_graphml(back), first);
}

TEST(GraphML, EscapesNames) {
  std::vector<FamilyNode> nodes{{"A&B <x>", NobilityTier::None, true, false, 1}, {"C\"D", NobilityTier::Nuove, false, true, 0}};
  GraphDocument doc;
  doc.graph = FamilyGraph(nodes, {{"A&B <x>", "C\"D", 1}});
  EXPECT_EQ(read_graphml(export_graphml(doc)), doc);
}

TEST(GraphML, Malformed) {
  EXPECT_THROW(read_graphml("<graphml><graph>"), std::invalid_argument);
  EXPECT_THROW(read_graphml("<other/>"), std::invalid_argument);
  EXPECT_THROW(read_graphml("<graphml><graph><node id=\"x\"/></graph></graphml>"), std::invalid_argument);
}

TEST(Reports, CentralityCsv) {
  CentralityScores s;
  s.scores = {{"Dandolo", 308.0666666667}, {"Bembo", 6.0}, {"Morosini", 190.0}};
  const auto text = centrality_csv(s);
  EXPECT_EQ(text, "family,betweenness\nDandolo,308.06667\nMorosini,190.00000\nBembo,6.00000\n");
  const auto table = parse_csv(text);
  EXPECT_EQ(table.rows.size(), 3u);
}

TEST(Reports, CommunitiesJson) {
  Partition p{{{"a", "b", "c"}, {"d"}}, 0.25};
  const auto j = nlohmann::json::parse(communities_json(p));
  EXPECT_DOUBLE_EQ(j.at("modularity").get<double>(), 0.25);
  ASSERT_EQ(j.at("communities").size(), 2u);
  EXPECT_EQ(j["communities"][0]["community_id"], 0);
  EXPECT_EQ(j["communities"][0]["size"], 3);
  EXPECT_EQ(j["communities"][1]["members"][0], "d");
}

TEST(Reports, CensusJsonAndTable) {
  CensusSummary s;
  s.counts.total_doges = 129;
  s.reign_married = {7.5, 9.3625, 80, 0};
  s.reign_all = {6.0, 8.0, 129, 0};
  const auto j = nlohmann::json::parse(census_json(s));
  EXPECT_EQ(j.at("total_doges"), 129);
  EXPECT_EQ(j.at("reign").at("married_doges").at("denominator"), 80);
  const auto table = census_table(s);
  EXPECT_NE(table.find("total_doges"), std::string::npos);
  EXPECT_NE(table.find("9.3625"), std::string::npos);
}
