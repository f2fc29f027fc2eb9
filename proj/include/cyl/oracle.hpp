#pragma once

#include <functional>
#include <vector>

#include "cyl/core.hpp"
#include "cyl/series.hpp"

namespace cyl {

struct SearchTooLarge : Error { using Error::Error; };

struct OracleLimits {
  int max_weight = -1;  // -1: 30 for rank <= 3, 20 otherwise
  int jobs = 1;
};

int weight_cap(const Profile& c, const OracleLimits& limits);

// Visits every cylindric partition of weight <= W exactly once. Rows are
// passed as raw part lists; the visitor may run on several threads when jobs > 1.
void for_each_cylindric(const Profile& c, int W,
                        const std::function<void(const std::vector<std::vector<int>>&, int weight)>& visit,
                        const OracleLimits& limits = {});

std::vector<CylindricPartition> enumerate_by_weight(const Profile& c, int W, const OracleLimits& limits = {});
Series count_series(const Profile& c, int N, const OracleLimits& limits = {});
// z tracks the largest part; z truncated at N
BivariateSeries count_bivariate(const Profile& c, int N, const OracleLimits& limits = {});
// no positive part repeats across all rows
bool has_distinct_parts(const CylindricPartition& L);
Series count_distinct_series(const Profile& c, int N, const OracleLimits& limits = {});

}  // namespace cyl
