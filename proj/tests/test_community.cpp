#include <gtest/gtest.h>

#include "dogenet/community.hpp"
#include "oracle.hpp"

using namespace dogenet;

namespace {

std::vector<std::string> names(std::initializer_list<int> ids) {
  std::vector<std::string> out;
  for (int i : ids) out.push_back(oracle::node_name(i));
  return out;
}

}  // namespace

TEST(Modularity, TwoDisjointTriangles) {
  const auto g = oracle::make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_NEAR(modularity(g, {names({0, 1, 2}), names({3, 4, 5})}), 0.5, 1e-12);
  EXPECT_NEAR(modularity(g, {names({0, 1, 2, 3, 4, 5})}), 0.0, 1e-12);
}

TEST(Modularity, MatchesOracle) {
  const auto g = oracle::make_graph(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}});
  const std::vector<int> label{0, 0, 0, 1, 1, 2, 2};
  const std::vector<std::vector<std::string>> parts{names({0, 1, 2}), names({3, 4}), names({5, 6})};
  EXPECT_NEAR(modularity(g, parts), oracle::modularity(oracle::adjacency(g), label), 1e-12);
}

TEST(Modularity, RejectsBadPartitions) {
  const auto g = oracle::make_graph(3, {{0, 1}, {1, 2}});
  EXPECT_THROW(modularity(g, {names({0, 1})}), std::invalid_argument);
  EXPECT_THROW(modularity(g, {names({0, 1}), names({1, 2})}), std::invalid_argument);
  EXPECT_THROW(modularity(oracle::make_graph(2, {}), {names({0}), names({1})}), std::invalid_argument);
}

TEST(EdgeBetweenness, Path) {
  const auto eb = edge_betweenness(oracle::make_graph(3, {{0, 1}, {1, 2}}));
  ASSERT_EQ(eb.size(), 2u);
  EXPECT_DOUBLE_EQ(eb.at({"n00", "n01"}), 2.0);
  EXPECT_DOUBLE_EQ(eb.at({"n01", "n02"}), 2.0);
}

TEST(EdgeBetweenness, BridgeCarriesAllCrossPairs) {
  const auto eb = edge_betweenness(oracle::make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}}));
  EXPECT_DOUBLE_EQ(eb.at({"n02", "n03"}), 9.0);
}

TEST(Communities, BridgedTriangles) {
  const auto g = oracle::make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  const auto p = detect_communities(g);
  ASSERT_EQ(p.communities.size(), 2u);
  EXPECT_EQ(p.communities[0], names({0, 1, 2}));
  EXPECT_EQ(p.communities[1], names({3, 4, 5}));
  EXPECT_NEAR(p.modularity, 5.0 / 14.0, 1e-12);
  EXPECT_NO_THROW(validate_partition(g, p));
}

TEST(Communities, SingleTriangle) {
  const auto g = oracle::make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto p = detect_communities(g);
  ASSERT_EQ(p.communities.size(), 1u);
  EXPECT_EQ(p.communities[0].size(), 3u);
  EXPECT_DOUBLE_EQ(p.modularity, 0.0);
}

TEST(Communities, EdgelessGraph) {
  const auto p = detect_communities(oracle::make_graph(3, {}));
  EXPECT_EQ(p.communities.size(), 3u);
  EXPECT_EQ(p.modularity, 0.0);
  EXPECT_TRUE(detect_communities(FamilyGraph{}).communities.empty());
}

TEST(Communities, ValidateCatchesOverlapAndGaps) {
  const auto g = oracle::make_graph(3, {{0, 1}, {1, 2}});
  EXPECT_THROW(validate_partition(g, {{names({0, 1})}, 0.0}), std::logic_error);
  EXPECT_THROW(validate_partition(g, {{names({0, 1}), names({1, 2})}, 0.0}), std::logic_error);
  EXPECT_THROW(validate_partition(g, {{names({0, 1, 2}), {}}, 0.0}), std::logic_error);
}

TEST(Communities, Deterministic) {
  std::mt19937 rng(3);
  const auto g = oracle::random_graph(30, 0.1, rng, true);
  const auto a = detect_communities(g);
  const auto b = detect_communities(g);
  EXPECT_EQ(a.communities, b.communities);
  EXPECT_EQ(a.modularity, b.modularity);
}
