#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidProfile : Error { using Error::Error; };
struct InvalidShape : Error { using Error::Error; };
struct InvalidPartition : Error { using Error::Error; };
struct RowCountMismatch : Error { using Error::Error; };
struct LevelTooSmall : Error { using Error::Error; };
struct RankMismatch : Error { using Error::Error; };
struct LevelMismatch : Error { using Error::Error; };

// Rows and positions are 1-based, as in lambda^{(row)}_{pos}.
struct ViolatedInequality : Error {
  ViolatedInequality(int row, int pos);
  int row;
  int pos;
};

class Profile {
 public:
  explicit Profile(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rank() const { return static_cast<int>(parts_.size()); }
  int level() const { return level_; }
  // 0-based
  int operator[](int i) const { return parts_[i]; }

  bool operator==(const Profile&) const = default;
  auto operator<=>(const Profile&) const = default;

 private:
  std::vector<int> parts_;
  int level_ = 0;
};

class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[i]; }
  int first() const { return parts_.empty() ? 0 : parts_[0]; }
  int weight() const;

  bool operator==(const Shape&) const = default;
  auto operator<=>(const Shape&) const = default;

 private:
  std::vector<int> parts_;
};

class Partition {
 public:
  Partition() = default;
  // trailing zeros are dropped
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 0-based, zero past the end
  int at(int j) const { return j < length() ? parts_[j] : 0; }
  long long weight() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

class CylindricPartition {
 public:
  const Profile& profile() const { return profile_; }
  const std::vector<Partition>& rows() const { return rows_; }
  const Partition& row(int i) const { return rows_[i]; }

  bool operator==(const CylindricPartition&) const = default;

 private:
  CylindricPartition(Profile p, std::vector<Partition> rows)
      : profile_(std::move(p)), rows_(std::move(rows)) {}
  friend CylindricPartition validate(std::vector<Partition>, const Profile&);

  Profile profile_;
  std::vector<Partition> rows_;
};

CylindricPartition validate(std::vector<Partition> rows, const Profile& profile);
bool is_valid(const std::vector<Partition>& rows, const Profile& profile);
CylindricPartition empty_cylindric(const Profile& profile);

long long weight(const CylindricPartition& L);
int max_part(const CylindricPartition& L);
// componentwise sum, zero filled
CylindricPartition add(const CylindricPartition& a, const CylindricPartition& b);

Shape shape_of_zero(const Profile& c);
Profile shape_to_profile(const Shape& s, int level);

int delta(const Profile& c, const Profile& d);
int delta_shapes(const Shape& s, const Shape& t, int level);

// all shapes of rank r and level l, lexicographic
std::vector<Shape> all_shapes(int r, int level);
long long binomial(int n, int k);

}  // namespace cyl
