#include "cyl/bijection.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "cyl/io.hpp"

namespace cyl {

LabeledDistinctPartition::LabeledDistinctPartition(std::vector<BetaEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const auto& e = entries_[k];
    if (e.weight < 1) throw InadmissibleBeta("beta weights must be positive");
    if (e.label.first() < 2) throw InadmissibleBeta("label " + to_string(e.label) + " cannot be a pivot shape");
    if (k > 0 && e.weight >= entries_[k - 1].weight)
      throw InadmissibleBeta("beta weights must be strictly decreasing");
  }
}

long long LabeledDistinctPartition::weight() const {
  long long w = 0;
  for (const auto& e : entries_) w += e.weight;
  return w;
}

int LabeledDistinctPartition::max_run_length() const {
  int best = 0, run = 0;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    run = k > 0 && entries_[k].weight + 1 == entries_[k - 1].weight ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

std::string to_string(const LabeledDistinctPartition& beta) {
  std::string out;
  for (const auto& e : beta.entries()) {
    if (!out.empty()) out += ",";
    out += std::to_string(e.weight) + "^" + to_string(e.label);
  }
  return out;
}

LabeledDistinctPartition parse_beta(std::string_view text) {
  std::string s = trim(text);
  std::vector<BetaEntry> entries;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t caret = s.find('^', pos);
    const std::size_t close = s.find(')', pos);
    if (caret == std::string::npos || close == std::string::npos || close < caret)
      throw ParseError("bad beta entry in '" + s + "'");
    const auto w = parse_int_list(s.substr(pos, caret - pos));
    if (w.size() != 1) throw ParseError("bad beta weight in '" + s + "'");
    entries.push_back({w[0], parse_shape(s.substr(caret + 1, close - caret))});
    pos = close + 1;
    while (pos < s.size() && (s[pos] == ',' || std::isspace(static_cast<unsigned char>(s[pos])))) ++pos;
  }
  return LabeledDistinctPartition(std::move(entries));
}

namespace {

void check_strict(const std::vector<Slice>& chain) {
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (chain[k].is_zero()) throw ChainNotStrict("chain slices must be nonzero");
    if (k > 0 && (!chain[k - 1].contains(chain[k]) || chain[k - 1] == chain[k]))
      throw ChainNotStrict("chain is not strictly decreasing at position " + std::to_string(k + 1));
  }
}

// Adds the next box of the space towards target (or of the infinite strip when
// target is empty): leftmost column first, top row first inside a column.
Box next_box(std::vector<int>& e, const std::vector<int>* target) {
  const int r = static_cast<int>(e.size());
  int best = -1;
  for (int i = 0; i < r; ++i) {
    if (target && e[i] >= (*target)[i]) continue;
    if (best < 0 || e[i] < e[best]) best = i;
  }
  Box b{best, e[best]};
  ++e[best];
  return b;
}

}  // namespace

TiledPath tile(const Profile& c, const std::vector<Slice>& chain, int W) {
  check_strict(chain);
  if (!chain.empty() && W < chain.front().weight())
    throw ChainNotStrict("window " + std::to_string(W) + " is below the largest slice");
  const auto o = row_offsets(c);
  const int r = c.rank();
  TiledPath path{c, W, {Slice::zero(c)}, {Box{-1, -1}}, {}};
  std::vector<int> e = o;
  auto record = [&](Box b) {
    path.boxes.push_back(b);
    if (static_cast<int>(path.slices.size()) <= W) {
      std::vector<int> l(r);
      for (int i = 0; i < r; ++i) l[i] = e[i] - o[i];
      path.slices.emplace_back(c, std::move(l));
    }
  };
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const auto t = it->right_ends();
    while (e != t) record(next_box(e, &t));
  }
  while (static_cast<int>(path.boxes.size()) < W + 2) record(next_box(e, nullptr));
  path.pivot.assign(W + 1, false);
  for (int w = 1; w <= W; ++w) path.pivot[w] = path.boxes[w + 1].col < path.boxes[w].col;
  return path;
}

std::vector<int> pivots(const TiledPath& path) {
  std::vector<int> out;
  for (int w = 0; w <= path.W; ++w)
    if (path.pivot[w]) out.push_back(w);
  return out;
}

std::vector<bool> chain_pivots(const std::vector<Slice>& chain) {
  check_strict(chain);
  const int n = static_cast<int>(chain.size());
  std::vector<bool> flags(n, false);
  if (n == 0) return flags;
  const int r = chain[0].profile().rank();
  const auto zero_ends = row_offsets(chain[0].profile());
  for (int k = 0; k < n; ++k) {
    const auto e = chain[k].right_ends();
    const auto below = k + 1 < n ? chain[k + 1].right_ends() : zero_ends;
    int last_before = -1;
    for (int i = 0; i < r; ++i)
      if (e[i] > below[i]) last_before = std::max(last_before, e[i] - 1);
    int first_after = e[r - 1];
    if (k > 0) {
      const auto above = chain[k - 1].right_ends();
      first_after = -1;
      for (int i = 0; i < r; ++i)
        if (above[i] > e[i]) first_after = first_after < 0 ? e[i] : std::min(first_after, e[i]);
    }
    flags[k] = first_after < last_before;
  }
  return flags;
}

TiledPath default_path(const Profile& c, int W) { return tile(c, {}, W); }

PivotSplit pivot_decompose(const CylindricPartition& L) {
  const auto chain = decompose(L);
  std::vector<Slice> distinct;
  for (const auto& e : chain.entries()) distinct.push_back(e.slice);
  const auto flags = chain_pivots(distinct);
  std::vector<BetaEntry> beta;
  std::vector<int> mu;
  for (std::size_t k = 0; k < distinct.size(); ++k) {
    const auto& e = chain.entries()[k];
    int copies = e.multiplicity;
    if (flags[k]) {
      beta.push_back({e.slice.weight(), e.slice.shape()});
      --copies;
    }
    mu.insert(mu.end(), copies, e.slice.weight());
  }
  std::sort(mu.rbegin(), mu.rend());
  return {Partition(std::move(mu)), LabeledDistinctPartition(std::move(beta))};
}

std::vector<Slice> beta_slices(const LabeledDistinctPartition& beta, const Profile& c) {
  std::vector<Slice> out;
  for (const auto& e : beta.entries()) {
    if (e.label.size() != c.rank() - 1)
      throw InadmissibleBeta("label " + to_string(e.label) + " has the wrong length");
    auto s = Slice::from_shape(c, e.label, e.weight);
    if (!s)
      throw InadmissibleBeta("no slice of shape " + to_string(e.label) + " and weight " + std::to_string(e.weight));
    out.push_back(std::move(*s));
  }
  return out;
}

BetaCheck validate_beta(const LabeledDistinctPartition& beta, const Profile& c) {
  std::vector<Slice> chain;
  try {
    chain = beta_slices(beta, c);
  } catch (const InadmissibleBeta& err) {
    return {false, err.what()};
  }
  for (std::size_t k = 1; k < chain.size(); ++k)
    if (!chain[k - 1].contains(chain[k]))
      return {false, "slice " + std::to_string(chain[k].weight()) + " is not contained in slice " +
                         std::to_string(chain[k - 1].weight())};
  if (chain.empty()) return {true, ""};
  const auto path = tile(c, chain, chain.front().weight());
  std::set<int> want;
  for (const auto& e : beta.entries()) want.insert(e.weight);
  for (int w : want)
    if (!path.pivot[w]) return {false, "slice of weight " + std::to_string(w) + " is not a pivot"};
  for (int w : pivots(path))
    if (!want.count(w)) return {false, "tiling creates an extra pivot at weight " + std::to_string(w)};
  return {true, ""};
}

bool validate_beta_rank2(const LabeledDistinctPartition& beta, int a, int b) {
  const auto& es = beta.entries();
  for (const auto& e : es) {
    if (e.label.size() != 1) return false;
    const int s = e.label[0], w = e.weight;
    if (s < 2 || s > a + b) return false;
    if (((w + s - b) % 2 + 2) % 2 != 0) return false;
    if (w < s - b || w <= b - s) return false;
  }
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (std::abs(es[i].weight - es[j].weight) < std::abs(es[i].label[0] - es[j].label[0]) + 2) return false;
  return true;
}

CylindricPartition reconstruct(const Partition& mu, const LabeledDistinctPartition& beta, const Profile& c) {
  const auto check = validate_beta(beta, c);
  if (!check.ok) throw InadmissibleBeta(check.diagnosis);
  auto chain = beta_slices(beta, c);
  const int top = beta.empty() ? 0 : beta.entries().front().weight;
  const int W = top + c.rank() * c.level() + mu.at(0) + 1;
  const auto path = tile(c, chain, W);
  for (int m : mu.parts()) chain.push_back(path.slices[m]);
  std::stable_sort(chain.begin(), chain.end(), [](const Slice& x, const Slice& y) { return x.weight() > y.weight(); });
  return recompose(c, chain);
}

}  // namespace cyl
