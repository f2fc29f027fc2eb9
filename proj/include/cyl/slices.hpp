#pragma once

#include <optional>
#include <vector>

#include "cyl/core.hpp"

namespace cyl {

struct InvalidSlice : Error { using Error::Error; };
struct ChainNotDecreasing : Error { using Error::Error; };
struct ChainNotStrict : Error { using Error::Error; };
struct ChainNotTight : Error { using Error::Error; };
struct PartTooLarge : Error { using Error::Error; };
struct NotMultipleOfRank : Error { using Error::Error; };

// o_r = 0, o_i = o_{i+1} + c_{i+1}
std::vector<int> row_offsets(const Profile& c);

class Slice {
 public:
  Slice(Profile c, std::vector<int> lengths);
  static Slice zero(const Profile& c);
  // the unique slice with this shape and weight, if any
  static std::optional<Slice> from_shape(const Profile& c, const Shape& s, long long weight);

  const Profile& profile() const { return c_; }
  const std::vector<int>& lengths() const { return l_; }
  int length(int i) const { return l_[i]; }
  int weight() const { return weight_; }
  bool is_zero() const { return weight_ == 0; }
  // e_i = o_i + l_i
  std::vector<int> right_ends() const;
  Shape shape() const;
  // other is contained in this slice
  bool contains(const Slice& other) const;

  bool operator==(const Slice& o) const { return l_ == o.l_ && c_ == o.c_; }

 private:
  Profile c_;
  std::vector<int> l_;
  int weight_ = 0;
};

bool is_valid_slice(const Profile& c, const std::vector<int>& lengths);
Shape slice_shape(const Slice& s);
std::vector<Slice> successors(const Slice& s);

struct ChainEntry {
  Slice slice;
  int multiplicity;
};

// Strictly decreasing distinct slices, largest first, each > E.
class SliceChain {
 public:
  explicit SliceChain(Profile c) : c_(std::move(c)) {}
  SliceChain(Profile c, std::vector<ChainEntry> entries);

  const Profile& profile() const { return c_; }
  const std::vector<ChainEntry>& entries() const { return entries_; }
  int length() const;  // with multiplicity
  long long weight() const;
  std::vector<Slice> expanded() const;

 private:
  Profile c_;
  std::vector<ChainEntry> entries_;
};

SliceChain decompose(const CylindricPartition& L);
CylindricPartition recompose(const SliceChain& chain);
// weakly decreasing list of slices, zero slices allowed at the end
CylindricPartition recompose(const Profile& c, const std::vector<Slice>& chain);

enum class ShrinkMode { AtMost, Exact };

struct ShrinkResult {
  std::vector<Slice> tight;
  Partition side;
};

// chain: n weakly decreasing slices (largest first)
ShrinkResult shrink(const std::vector<Slice>& chain, ShrinkMode mode);
std::vector<Slice> expand(const std::vector<Slice>& tight, const Partition& side, ShrinkMode mode);
bool is_tight(const std::vector<Slice>& chain, ShrinkMode mode);

// all n-slice tight chains with the given shapes (largest first)
std::vector<Slice> tight_chain(const Profile& c, const std::vector<Shape>& shapes, ShrinkMode mode);

}  // namespace cyl
