#include "cyl/oracle.hpp"

#include <algorithm>
#include <future>
#include <mutex>

#include "cyl/io.hpp"

namespace cyl {

int weight_cap(const Profile& c, const OracleLimits& limits) {
  if (limits.max_weight >= 0) return limits.max_weight;
  return c.rank() <= 3 ? 30 : 20;
}

namespace {

using Rows = std::vector<std::vector<int>>;
using Visitor = std::function<void(const Rows&, int)>;

class Search {
 public:
  Search(const Profile& c, int W, const Visitor& visit) : c_(c), r_(c.rank()), W_(W), visit_(visit), rows_(r_) {}

  // all partitions whose first part of row 1 equals top
  void run_top(int top) {
    if (top == 0) {
      next_row(0, 0);
      return;
    }
    rows_[0].push_back(top);
    fill(0, 1, top);
    rows_[0].pop_back();
  }

 private:
  int at(int i, int j) const { return j >= 0 && j < static_cast<int>(rows_[i].size()) ? rows_[i][j] : 0; }

  // row i, position j (0-based), weight used so far
  void fill(int i, int j, int used) {
    const int budget = W_ - used;
    int hi = budget;
    if (j > 0) hi = std::min(hi, rows_[i][j - 1]);
    if (i > 0) {
      const int k = j - c_[i];
      if (k >= 0) hi = std::min(hi, at(i - 1, k));
    }
    int lo = 0;
    if (i == r_ - 1) lo = at(0, j + c_[0]);
    // stopping the row means value 0 from here on
    if (lo == 0) next_row(i, used);
    for (int v = std::max(lo, 1); v <= hi; ++v) {
      rows_[i].push_back(v);
      fill(i, j + 1, used + v);
      rows_[i].pop_back();
    }
  }

  void next_row(int i, int used) {
    if (i + 1 < r_)
      fill(i + 1, 0, used);
    else
      visit_(rows_, used);
  }

  const Profile& c_;
  int r_;
  int W_;
  const Visitor& visit_;
  Rows rows_;
};

}  // namespace

void for_each_cylindric(const Profile& c, int W, const Visitor& visit, const OracleLimits& limits) {
  if (W < 0) return;
  if (W > weight_cap(c, limits))
    throw SearchTooLarge("weight " + std::to_string(W) + " exceeds the oracle cap " +
                         std::to_string(weight_cap(c, limits)));
  const int jobs = std::max(1, limits.jobs);
  if (jobs == 1) {
    Search s(c, W, visit);
    for (int top = 0; top <= W; ++top) s.run_top(top);
    return;
  }
  std::vector<std::future<void>> tasks;
  for (int k = 0; k < jobs; ++k)
    tasks.push_back(std::async(std::launch::async, [&, k] {
      Search s(c, W, visit);
      for (int top = k; top <= W; top += jobs) s.run_top(top);
    }));
  for (auto& t : tasks) t.get();
}

std::vector<CylindricPartition> enumerate_by_weight(const Profile& c, int W, const OracleLimits& limits) {
  std::mutex mu;
  std::vector<CylindricPartition> out;
  for_each_cylindric(
      c, W,
      [&](const Rows& rows, int) {
        std::vector<Partition> parts;
        for (const auto& row : rows) parts.emplace_back(row);
        auto L = validate(std::move(parts), c);
        std::lock_guard lock(mu);
        out.push_back(std::move(L));
      },
      limits);
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t k = 0; k < out.size(); ++k) keys.emplace_back(to_text(out[k]), k);
  std::sort(keys.begin(), keys.end());
  std::vector<CylindricPartition> sorted;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    if (k > 0 && keys[k].first == keys[k - 1].first) continue;
    sorted.push_back(out[keys[k].second]);
  }
  return sorted;
}

Series count_series(const Profile& c, int N, const OracleLimits& limits) {
  return count_bivariate(c, N, limits).at_z_one();
}

BivariateSeries count_bivariate(const Profile& c, int N, const OracleLimits& limits) {
  std::mutex mu;
  BivariateSeries out(N, N);
  for_each_cylindric(
      c, N,
      [&](const Rows& rows, int w) {
        int m = 0;
        for (const auto& row : rows)
          if (!row.empty()) m = std::max(m, row[0]);
        std::lock_guard lock(mu);
        out.at(w, m) += 1;
      },
      limits);
  return out;
}

namespace {

bool distinct_rows(const Rows& rows) {
  std::vector<int> all;
  for (const auto& row : rows) all.insert(all.end(), row.begin(), row.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

}  // namespace

bool has_distinct_parts(const CylindricPartition& L) {
  Rows rows;
  for (const auto& row : L.rows()) rows.push_back(row.parts());
  return distinct_rows(rows);
}

Series count_distinct_series(const Profile& c, int N, const OracleLimits& limits) {
  std::mutex mu;
  Series out(N);
  for_each_cylindric(
      c, N,
      [&](const Rows& rows, int w) {
        if (!distinct_rows(rows)) return;
        std::lock_guard lock(mu);
        out[w] += 1;
      },
      limits);
  return out;
}

}  // namespace cyl
