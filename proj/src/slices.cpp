#include "cyl/slices.hpp"

#include <algorithm>
#include <numeric>

namespace cyl {

std::vector<int> row_offsets(const Profile& c) {
  const int r = c.rank();
  std::vector<int> o(r, 0);
  for (int i = r - 2; i >= 0; --i) o[i] = o[i + 1] + c[i + 1];
  return o;
}

bool is_valid_slice(const Profile& c, const std::vector<int>& l) {
  const int r = c.rank();
  if (static_cast<int>(l.size()) != r) return false;
  for (int v : l)
    if (v < 0) return false;
  for (int i = 0; i + 1 < r; ++i)
    if (l[i + 1] > l[i] + c[i + 1]) return false;
  return l[0] <= l[r - 1] + c[0];
}

Slice::Slice(Profile c, std::vector<int> lengths) : c_(std::move(c)), l_(std::move(lengths)) {
  if (!is_valid_slice(c_, l_)) throw InvalidSlice("lengths do not form a slice of this profile");
  weight_ = std::accumulate(l_.begin(), l_.end(), 0);
}

Slice Slice::zero(const Profile& c) { return Slice(c, std::vector<int>(c.rank(), 0)); }

std::optional<Slice> Slice::from_shape(const Profile& c, const Shape& s, long long weight) {
  const int r = c.rank();
  if (s.size() != r - 1 || s.first() > c.level() || weight < 0) return std::nullopt;
  const auto o = row_offsets(c);
  const long long zero_weight = std::accumulate(o.begin(), o.end(), 0LL);
  const long long num = weight - s.weight() + zero_weight;
  if (num < 0 || num % r != 0) return std::nullopt;
  const long long er = num / r;
  std::vector<int> l(r);
  for (int i = 0; i < r; ++i) {
    const long long v = er + (i < r - 1 ? s[i] : 0) - o[i];
    if (v < 0) return std::nullopt;
    l[i] = static_cast<int>(v);
  }
  return Slice(c, std::move(l));
}

std::vector<int> Slice::right_ends() const {
  auto e = row_offsets(c_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += l_[i];
  return e;
}

Shape Slice::shape() const {
  const auto e = right_ends();
  const int r = c_.rank();
  std::vector<int> s(r - 1);
  for (int j = 0; j < r - 1; ++j) s[j] = e[j] - e[r - 1];
  return Shape(std::move(s));
}

bool Slice::contains(const Slice& other) const {
  for (std::size_t i = 0; i < l_.size(); ++i)
    if (other.l_[i] > l_[i]) return false;
  return true;
}

Shape slice_shape(const Slice& s) { return s.shape(); }

std::vector<Slice> successors(const Slice& s) {
  std::vector<Slice> out;
  for (int i = 0; i < s.profile().rank(); ++i) {
    auto l = s.lengths();
    ++l[i];
    if (is_valid_slice(s.profile(), l)) out.emplace_back(s.profile(), std::move(l));
  }
  return out;
}

SliceChain::SliceChain(Profile c, std::vector<ChainEntry> entries) : c_(std::move(c)), entries_(std::move(entries)) {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const auto& e = entries_[k];
    if (e.multiplicity < 1) throw InvalidSlice("multiplicities must be positive");
    if (e.slice.is_zero()) throw InvalidSlice("chain slices must be nonzero");
    if (e.slice.profile() != c_) throw InvalidSlice("slice profile differs from chain profile");
    if (k > 0) {
      const auto& prev = entries_[k - 1].slice;
      if (!prev.contains(e.slice)) throw ChainNotDecreasing("slice " + std::to_string(k + 1) + " is not contained in its predecessor");
      if (prev == e.slice) throw ChainNotDecreasing("repeated slice; use multiplicities");
    }
  }
}

int SliceChain::length() const {
  int n = 0;
  for (const auto& e : entries_) n += e.multiplicity;
  return n;
}

long long SliceChain::weight() const {
  long long w = 0;
  for (const auto& e : entries_) w += static_cast<long long>(e.multiplicity) * e.slice.weight();
  return w;
}

std::vector<Slice> SliceChain::expanded() const {
  std::vector<Slice> out;
  for (const auto& e : entries_)
    for (int k = 0; k < e.multiplicity; ++k) out.push_back(e.slice);
  return out;
}

SliceChain decompose(const CylindricPartition& L) {
  const Profile& c = L.profile();
  const int r = c.rank();
  const int m = max_part(L);
  std::vector<ChainEntry> entries;
  for (int k = 1; k <= m; ++k) {
    std::vector<int> l(r, 0);
    for (int i = 0; i < r; ++i)
      for (int v : L.row(i).parts()) l[i] += v >= k ? 1 : 0;
    Slice s(c, std::move(l));
    if (!entries.empty() && entries.back().slice == s)
      ++entries.back().multiplicity;
    else
      entries.push_back({std::move(s), 1});
  }
  return SliceChain(c, std::move(entries));
}

CylindricPartition recompose(const Profile& c, const std::vector<Slice>& chain) {
  const int r = c.rank();
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (chain[k].profile() != c) throw InvalidSlice("slice profile differs from chain profile");
    if (k > 0 && !chain[k - 1].contains(chain[k]))
      throw ChainNotDecreasing("slice " + std::to_string(k + 1) + " is not contained in its predecessor");
  }
  std::vector<Partition> rows;
  for (int i = 0; i < r; ++i) {
    const int len = chain.empty() ? 0 : chain.front().length(i);
    std::vector<int> parts(len, 0);
    for (const auto& s : chain)
      for (int j = 0; j < s.length(i); ++j) ++parts[j];
    rows.emplace_back(std::move(parts));
  }
  return validate(std::move(rows), c);
}

CylindricPartition recompose(const SliceChain& chain) { return recompose(chain.profile(), chain.expanded()); }

namespace {

void check_weak_chain(const std::vector<Slice>& chain) {
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (chain[k].profile() != chain[0].profile()) throw InvalidSlice("mixed profiles in chain");
    if (!chain[k - 1].contains(chain[k]))
      throw ChainNotDecreasing("slice " + std::to_string(k + 1) + " is not contained in its predecessor");
  }
}

// min_i (l_i(a) - l_i(b))
int min_gap(const Slice& a, const std::vector<int>& b) {
  int f = a.length(0) - b[0];
  for (int i = 1; i < a.profile().rank(); ++i) f = std::min(f, a.length(i) - b[i]);
  return f;
}

// columns the smallest slice must keep in EXACT mode
int buffer(const Slice& smallest, ShrinkMode mode) {
  return mode == ShrinkMode::Exact && smallest.shape() == shape_of_zero(smallest.profile()) ? 1 : 0;
}

}  // namespace

ShrinkResult shrink(const std::vector<Slice>& chain, ShrinkMode mode) {
  if (chain.empty()) return {};
  check_weak_chain(chain);
  const Profile& c = chain[0].profile();
  const int r = c.rank();
  const int n = static_cast<int>(chain.size());
  if (mode == ShrinkMode::Exact && chain.back().is_zero())
    throw ChainNotStrict("EXACT mode needs the smallest slice to be nonzero");
  std::vector<std::vector<int>> work;
  for (const auto& s : chain) work.push_back(s.lengths());
  const std::vector<int> zero(r, 0);
  std::vector<int> f(n);
  for (int j = 0; j < n; ++j) {
    const auto& below = j + 1 < n ? work[j + 1] : zero;
    int fj = work[j][0] - below[0];
    for (int i = 1; i < r; ++i) fj = std::min(fj, work[j][i] - below[i]);
    if (j == n - 1) fj -= buffer(chain.back(), mode);
    f[j] = fj;
    for (int k = 0; k <= j; ++k)
      for (int i = 0; i < r; ++i) work[k][i] -= fj;
  }
  ShrinkResult out;
  for (auto& l : work) out.tight.emplace_back(c, std::move(l));
  std::vector<int> side;
  for (int j = n - 1; j >= 0; --j) side.insert(side.end(), f[j], r * (j + 1));
  out.side = Partition(std::move(side));
  return out;
}

bool is_tight(const std::vector<Slice>& chain, ShrinkMode mode) {
  if (chain.empty()) return true;
  check_weak_chain(chain);
  const int n = static_cast<int>(chain.size());
  const std::vector<int> zero(chain[0].profile().rank(), 0);
  for (int j = 0; j + 1 < n; ++j)
    if (min_gap(chain[j], chain[j + 1].lengths()) != 0) return false;
  return min_gap(chain.back(), zero) == buffer(chain.back(), mode);
}

std::vector<Slice> expand(const std::vector<Slice>& tight, const Partition& side, ShrinkMode mode) {
  if (!is_tight(tight, mode)) throw ChainNotTight("chain is not tightly packed");
  if (tight.empty()) {
    if (!side.empty()) throw PartTooLarge("side partition must be empty for an empty chain");
    return {};
  }
  const Profile& c = tight[0].profile();
  const int r = c.rank();
  const int n = static_cast<int>(tight.size());
  std::vector<int> f(n, 0);
  for (int p : side.parts()) {
    if (p % r != 0) throw NotMultipleOfRank("side part " + std::to_string(p) + " is not a multiple of " + std::to_string(r));
    if (p > r * n) throw PartTooLarge("side part " + std::to_string(p) + " exceeds " + std::to_string(r * n));
    ++f[p / r - 1];
  }
  std::vector<std::vector<int>> work;
  for (const auto& s : tight) work.push_back(s.lengths());
  for (int j = 0; j < n; ++j)
    for (int k = 0; k <= j; ++k)
      for (int i = 0; i < r; ++i) work[k][i] += f[j];
  std::vector<Slice> out;
  for (auto& l : work) out.emplace_back(c, std::move(l));
  return out;
}

std::vector<Slice> tight_chain(const Profile& c, const std::vector<Shape>& shapes, ShrinkMode mode) {
  const int n = static_cast<int>(shapes.size());
  const int l = c.level();
  std::vector<Slice> out(n, Slice::zero(c));
  Shape below = shape_of_zero(c);
  long long w = 0;
  for (int j = n - 1; j >= 0; --j) {
    int gap = delta_shapes(below, shapes[j], l);
    if (j == n - 1 && mode == ShrinkMode::Exact && gap == 0) gap = c.rank();
    w += gap;
    auto s = Slice::from_shape(c, shapes[j], w);
    if (!s) throw InvalidSlice("no slice with shape and weight " + std::to_string(w));
    out[j] = *s;
    below = shapes[j];
  }
  return out;
}

}  // namespace cyl
