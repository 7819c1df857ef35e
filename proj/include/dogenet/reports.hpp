#pragma once

#include <string>

#include "dogenet/centrality.hpp"
#include "dogenet/community.hpp"
#include "dogenet/records.hpp"
#include "dogenet/stats.hpp"

namespace dogenet {

struct CensusSummary {
  CensusReport counts;
  // Tenure of doges with a matched dogaressa; this is the headline figure.
  ReignStats reign_married;
  // Tenure of every doge whose dates are known.
  ReignStats reign_all;
};

std::string census_json(const CensusSummary& summary);

/// Two aligned columns, one line per count.
std::string census_table(const CensusSummary& summary);

/// "family,<metric>" header then one row per family in ranking order,
/// five decimals.
std::string centrality_csv(const CentralityScores& scores);

/// {"modularity": q, "communities": [{community_id, members, size}, ...]}
std::string communities_json(const Partition& partition);

}  // namespace dogenet
