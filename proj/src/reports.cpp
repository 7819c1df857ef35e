#include "dogenet/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dogenet/csv.hpp"

namespace dogenet {

namespace {

using nlohmann::ordered_json;

ordered_json reign_json(const ReignStats& s) {
  ordered_json j;
  j["median_years"] = s.median_years;
  j["mean_years"] = s.mean_years;
  j["denominator"] = s.count;
  j["excluded"] = s.excluded;
  return j;
}

std::vector<std::pair<std::string, std::string>> census_rows(const CensusSummary& s) {
  const CensusReport& c = s.counts;
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return std::string(buf);
  };
  return {
      {"total_doges", std::to_string(c.total_doges)},
      {"unmarried_doges", std::to_string(c.unmarried_doges)},
      {"marriages_after_filters", std::to_string(c.marriages_after_filters)},
      {"families_both_roles", std::to_string(c.families_both_roles)},
      {"families_any_role", std::to_string(c.families_any_role)},
      {"doge_families_unmarried", std::to_string(c.doge_families_unmarried)},
      {"doge_families_married", std::to_string(c.doge_families_married)},
      {"families_with_both_married_and_unmarried_doges",
       std::to_string(c.families_with_both_married_and_unmarried_doges)},
      {"dogaressa_families", std::to_string(c.dogaressa_families)},
      {"surname_less_doges", std::to_string(c.surname_less_doges)},
      {"reign_median_years (married)", num(s.reign_married.median_years)},
      {"reign_mean_years (married)", num(s.reign_married.mean_years)},
      {"reign_denominator (married)", std::to_string(s.reign_married.count)},
      {"reign_median_years (all)", num(s.reign_all.median_years)},
      {"reign_mean_years (all)", num(s.reign_all.mean_years)},
      {"reign_denominator (all)", std::to_string(s.reign_all.count)},
  };
}

}  // namespace

std::string census_json(const CensusSummary& s) {
  const CensusReport& c = s.counts;
  ordered_json j;
  j["total_doges"] = c.total_doges;
  j["unmarried_doges"] = c.unmarried_doges;
  j["marriages_after_filters"] = c.marriages_after_filters;
  j["families_both_roles"] = c.families_both_roles;
  j["families_any_role"] = c.families_any_role;
  j["doge_families_unmarried"] = c.doge_families_unmarried;
  j["doge_families_married"] = c.doge_families_married;
  j["families_with_both_married_and_unmarried_doges"] = c.families_with_both_married_and_unmarried_doges;
  j["dogaressa_families"] = c.dogaressa_families;
  j["surname_less_doges"] = c.surname_less_doges;
  j["reign"]["married_doges"] = reign_json(s.reign_married);
  j["reign"]["all_doges"] = reign_json(s.reign_all);
  return j.dump(2) + "\n";
}

std::string census_table(const CensusSummary& s) {
  const auto rows = census_rows(s);
  std::size_t width = 0;
  for (const auto& [label, value] : rows) width = std::max(width, label.size());
  std::ostringstream out;
  for (const auto& [label, value] : rows) {
    out << label << std::string(width - label.size() + 2, ' ') << value << "\n";
  }
  return out.str();
}

std::string centrality_csv(const CentralityScores& scores) {
  std::ostringstream out;
  out << "family," << (scores.metric == Metric::Betweenness ? "betweenness" : "closeness") << "\n";
  for (const auto& [family, value] : scores.ranking()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.5f", value);
    out << csv_escape(family) << "," << buf << "\n";
  }
  return out.str();
}

std::string communities_json(const Partition& p) {
  ordered_json j;
  j["modularity"] = p.modularity;
  j["communities"] = ordered_json::array();
  for (std::size_t i = 0; i < p.communities.size(); ++i) {
    ordered_json c;
    c["community_id"] = i;
    c["members"] = p.communities[i];
    c["size"] = p.communities[i].size();
    j["communities"].push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

}  // namespace dogenet
