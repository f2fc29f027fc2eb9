#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cyl/core.hpp"
#include "cyl/slices.hpp"

namespace cyl {

struct InadmissibleBeta : Error { using Error::Error; };

struct BetaEntry {
  int weight;
  Shape label;
  bool operator==(const BetaEntry&) const = default;
};

// Distinct positive weights, strictly decreasing, labels with first part >= 2.
class LabeledDistinctPartition {
 public:
  LabeledDistinctPartition() = default;
  explicit LabeledDistinctPartition(std::vector<BetaEntry> entries);

  const std::vector<BetaEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  long long weight() const;
  // longest block of consecutive weights
  int max_run_length() const;
  bool operator==(const LabeledDistinctPartition&) const = default;

 private:
  std::vector<BetaEntry> entries_;
};

std::string to_string(const LabeledDistinctPartition& beta);  // 5^(2,0),1^(2,2)
LabeledDistinctPartition parse_beta(std::string_view text);

struct Box {
  int row;  // 0-based
  int col;  // absolute column in offset coordinates
  bool operator==(const Box&) const = default;
};

struct TiledPath {
  Profile profile;
  int W;
  std::vector<Slice> slices;  // slices[w] has weight w, 0 <= w <= W
  std::vector<Box> boxes;     // boxes[w] turns slices[w-1] into slices[w]; boxes[0] unused; size W+2
  std::vector<bool> pivot;    // per weight 0..W
};

// chain: strictly decreasing nonzero slices, largest first
TiledPath tile(const Profile& c, const std::vector<Slice>& chain, int W);
std::vector<int> pivots(const TiledPath& path);
// pivot flags of a strict chain straight from the definition (columns of the
// spaces before and after each slice)
std::vector<bool> chain_pivots(const std::vector<Slice>& chain);
// the default path: tiling with no pivots
TiledPath default_path(const Profile& c, int W);

struct PivotSplit {
  Partition mu;
  LabeledDistinctPartition beta;
};

PivotSplit pivot_decompose(const CylindricPartition& L);
CylindricPartition reconstruct(const Partition& mu, const LabeledDistinctPartition& beta, const Profile& c);

struct BetaCheck {
  bool ok;
  std::string diagnosis;
};

std::vector<Slice> beta_slices(const LabeledDistinctPartition& beta, const Profile& c);
BetaCheck validate_beta(const LabeledDistinctPartition& beta, const Profile& c);
bool validate_beta_rank2(const LabeledDistinctPartition& beta, int a, int b);

}  // namespace cyl
