#include "cyl/core.hpp"

#include <algorithm>
#include <numeric>

namespace cyl {

ViolatedInequality::ViolatedInequality(int row, int pos)
    : Error("violated inequality at row " + std::to_string(row) + ", position " +
            std::to_string(pos)),
      row(row),
      pos(pos) {}

Profile::Profile(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidProfile("profile needs rank >= 1");
  for (int p : parts_)
    if (p < 0) throw InvalidProfile("profile parts must be non-negative");
  level_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  if (level_ < 1) throw InvalidProfile("profile needs level >= 1");
}

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] < 0) throw InvalidShape("shape parts must be non-negative");
    if (j > 0 && parts_[j] > parts_[j - 1]) throw InvalidShape("shape must be weakly decreasing");
  }
}

int Shape::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] < 1) throw InvalidPartition("partition parts must be positive");
    if (j > 0 && parts_[j] > parts_[j - 1])
      throw InvalidPartition("partition must be weakly decreasing");
  }
}

long long Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

namespace {

// first violated (row, pos), 1-based; {0, 0} if none
std::pair<int, int> first_violation(const std::vector<Partition>& rows, const Profile& c) {
  const int r = c.rank();
  for (int i = 0; i < r; ++i) {
    const int next = (i + 1) % r;
    const int shift = c[next];
    const Partition& lo = rows[next];
    for (int j = 0; j + shift < lo.length(); ++j)
      if (rows[i].at(j) < lo.at(j + shift)) return {i + 1, j + 1};
  }
  return {0, 0};
}

}  // namespace

CylindricPartition validate(std::vector<Partition> rows, const Profile& profile) {
  if (static_cast<int>(rows.size()) != profile.rank())
    throw RowCountMismatch("expected " + std::to_string(profile.rank()) + " rows, got " +
                           std::to_string(rows.size()));
  auto [i, j] = first_violation(rows, profile);
  if (i != 0) throw ViolatedInequality(i, j);
  return CylindricPartition(profile, std::move(rows));
}

bool is_valid(const std::vector<Partition>& rows, const Profile& profile) {
  return static_cast<int>(rows.size()) == profile.rank() &&
         first_violation(rows, profile).first == 0;
}

CylindricPartition empty_cylindric(const Profile& profile) {
  return validate(std::vector<Partition>(profile.rank()), profile);
}

long long weight(const CylindricPartition& L) {
  long long w = 0;
  for (const auto& row : L.rows()) w += row.weight();
  return w;
}

int max_part(const CylindricPartition& L) {
  int m = 0;
  for (const auto& row : L.rows()) m = std::max(m, row.at(0));
  return m;
}

CylindricPartition add(const CylindricPartition& a, const CylindricPartition& b) {
  if (a.profile() != b.profile()) throw InvalidProfile("profiles differ");
  std::vector<Partition> rows;
  for (int i = 0; i < a.profile().rank(); ++i) {
    const int n = std::max(a.row(i).length(), b.row(i).length());
    std::vector<int> parts(n);
    for (int j = 0; j < n; ++j) parts[j] = a.row(i).at(j) + b.row(i).at(j);
    rows.emplace_back(std::move(parts));
  }
  return validate(std::move(rows), a.profile());
}

Shape shape_of_zero(const Profile& c) {
  const int r = c.rank();
  std::vector<int> s(r - 1);
  int acc = 0;
  for (int j = r - 1; j >= 1; --j) {
    acc += c[j];
    s[j - 1] = acc;
  }
  return Shape(std::move(s));
}

Profile shape_to_profile(const Shape& s, int level) {
  if (s.first() > level)
    throw LevelTooSmall("shape part " + std::to_string(s.first()) + " exceeds level " +
                        std::to_string(level));
  const int r = s.size() + 1;
  std::vector<int> c(r);
  c[0] = level - s.first();
  for (int k = 1; k < r; ++k) c[k] = s[k - 1] - (k < r - 1 ? s[k] : 0);
  return Profile(std::move(c));
}

int delta(const Profile& c, const Profile& d) {
  if (c.rank() != d.rank()) throw RankMismatch("delta needs equal ranks");
  const int r = c.rank();
  int linear = 0;
  for (int k = 1; k < r; ++k) linear += k * (d[k] - c[k]);
  int h = 0, cs = 0, ds = 0;
  for (int k = r - 1; k >= 1; --k) {
    cs += c[k];
    ds += d[k];
    h = std::max(h, cs - ds);
  }
  return linear + r * h;
}

int delta_shapes(const Shape& s, const Shape& t, int level) {
  return delta(shape_to_profile(s, level), shape_to_profile(t, level));
}

std::vector<Shape> all_shapes(int r, int level) {
  std::vector<Shape> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int bound) -> void {
    if (static_cast<int>(cur.size()) == r - 1) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, level);
  std::sort(out.begin(), out.end());
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace cyl
