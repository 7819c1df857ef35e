#include "dogenet/stats.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dogenet {

ReignStats reign_stats(const std::vector<PersonRecord>& doges) {
  ReignStats stats;
  std::vector<int> years;
  years.reserve(doges.size());
  for (const auto& d : doges) {
    if (!d.tenure_known) {
      ++stats.excluded;
      continue;
    }
    years.push_back(d.tenure_end - d.tenure_start);
  }
  if (years.empty()) throw std::invalid_argument("no records");

  std::sort(years.begin(), years.end());
  const std::size_t n = years.size();
  stats.count = n;
  stats.median_years = n % 2 == 1 ? years[n / 2] : (years[n / 2 - 1] + years[n / 2]) / 2.0;
  const long long total = std::accumulate(years.begin(), years.end(), 0LL);
  stats.mean_years = static_cast<double>(total) / static_cast<double>(n);
  return stats;
}

}  // namespace dogenet
