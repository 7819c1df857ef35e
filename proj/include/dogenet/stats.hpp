#pragma once

#include <cstddef>
#include <vector>

#include "dogenet/records.hpp"

namespace dogenet {

struct ReignStats {
  double median_years = 0.0;
  double mean_years = 0.0;
  /// Records that contributed a duration.
  std::size_t count = 0;
  /// Records skipped because their tenure dates are unknown.
  std::size_t excluded = 0;
};

/// Reign length is tenure_end - tenure_start in whole years. The median of
/// an even count is the mean of the two central values. Throws
/// std::invalid_argument ("no records") when no record has known dates.
ReignStats reign_stats(const std::vector<PersonRecord>& doges);

}  // namespace dogenet
