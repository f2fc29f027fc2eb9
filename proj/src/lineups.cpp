#include "cyl/lineups.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyl/io.hpp"
#include "cyl/oracle.hpp"
#include "cyl/polynomials.hpp"

namespace cyl {

std::string to_string(LineupClass k) {
  switch (k) {
    case LineupClass::Loose: return "loose";
    case LineupClass::MinimalLoose: return "minimal-loose";
    case LineupClass::Jammed: return "jammed";
    case LineupClass::MinimalJammed: return "minimal-jammed";
    case LineupClass::None: return "none";
  }
  return "?";
}

long long Lineup::weight() const {
  long long w = 0;
  for (const auto& s : pivots) w += s.weight();
  return w;
}

std::string to_string(const Lineup& L) {
  std::string out;
  for (const auto& s : L.pivots) {
    if (!out.empty()) out += ",";
    out += std::to_string(s.weight()) + "^" + to_string(s.shape());
  }
  out += " iota={" + join_ints(L.iota) + "} class=" + to_string(L.cls);
  return out;
}

std::vector<Shape> potential_pivot_shapes(int r, int level) {
  std::vector<Shape> out;
  for (auto& s : all_shapes(r, level))
    if (s.first() >= 2) out.push_back(std::move(s));
  return out;
}

Lineup classify(const std::vector<Slice>& chain) {
  if (chain.empty()) throw NotPotentialPivot("classify needs a profile; use the beta overload for empty lineups");
  const Profile& c = chain[0].profile();
  const int r = c.rank(), n = static_cast<int>(chain.size());
  Lineup L{c, chain, LineupClass::None, {}, {}, {}, false, ""};
  for (const auto& s : chain)
    if (s.shape().first() < 2) throw NotPotentialPivot("shape " + to_string(s.shape()) + " is not a potential pivot");
  for (int j = 0; j < n; ++j) {
    const bool last = j + 1 == n;
    const Shape below = last ? shape_of_zero(c) : chain[j + 1].shape();
    const int gap = chain[j].weight() - (last ? 0 : chain[j + 1].weight());
    const int d = delta_shapes(below, chain[j].shape(), c.level());
    L.gaps.push_back(gap);
    L.deltas.push_back(d);
    if (!(last ? true : chain[j].contains(chain[j + 1])) || gap <= 0) {
      L.diagnosis = "chain is not strictly decreasing at gap " + std::to_string(j + 1);
      return L;
    }
    if (gap == d) L.iota.push_back(j + 1);
  }
  std::vector<BetaEntry> entries;
  for (const auto& s : chain) entries.push_back({s.weight(), s.shape()});
  const auto check = validate_beta(LabeledDistinctPartition(std::move(entries)), c);
  L.all_pivots = check.ok;
  bool minimal = true, loose = L.iota.empty();
  for (int j = 0; j < n; ++j) {
    if (L.gaps[j] == L.deltas[j]) continue;
    if (L.gaps[j] < L.deltas[j] + r) loose = false;
    if (L.gaps[j] != L.deltas[j] + r) minimal = false;
  }
  if (!check.ok) {
    L.diagnosis = check.diagnosis;
    if (loose) L.diagnosis += " (loose chain that is not all pivots)";
    return L;
  }
  if (loose)
    L.cls = minimal ? LineupClass::MinimalLoose : LineupClass::Loose;
  else if (!L.iota.empty())
    L.cls = minimal ? LineupClass::MinimalJammed : LineupClass::Jammed;
  return L;
}

Lineup classify(const LabeledDistinctPartition& beta, const Profile& c) {
  if (beta.empty()) return Lineup{c, {}, LineupClass::MinimalLoose, {}, {}, {}, true, ""};
  std::vector<Slice> chain;
  for (const auto& e : beta.entries()) {
    if (e.label.size() != c.rank() - 1) throw NotPotentialPivot("label " + to_string(e.label) + " has the wrong length");
    auto s = Slice::from_shape(c, e.label, e.weight);
    if (!s) throw InadmissibleBeta("no slice of shape " + to_string(e.label) + " and weight " + std::to_string(e.weight));
    chain.push_back(*s);
  }
  return classify(chain);
}

namespace {

// calls fn(shapes) for every sequence of n potential pivot shapes, largest first
template <class Fn>
void for_each_shape_sequence(int n, const Profile& c, Fn fn) {
  const auto pool = potential_pivot_shapes(c.rank(), c.level());
  std::vector<Shape> seq(n);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == n) {
      fn(seq);
      return;
    }
    for (const auto& s : pool) {
      seq[j] = s;
      self(self, j + 1);
    }
  };
  if (n == 0 || !pool.empty()) rec(rec, 0);
}

// slices with gaps Delta + r, minus r on the gaps listed in jam (bitmask over 0-based gaps)
std::vector<Slice> build_chain(const Profile& c, const std::vector<Shape>& shapes, unsigned jam) {
  const int n = static_cast<int>(shapes.size());
  std::vector<Slice> out(n, Slice::zero(c));
  Shape below = shape_of_zero(c);
  long long w = 0;
  for (int j = n - 1; j >= 0; --j) {
    w += delta_shapes(below, shapes[j], c.level()) + ((jam >> j) & 1u ? 0 : c.rank());
    auto s = Slice::from_shape(c, shapes[j], w);
    if (!s) throw std::logic_error("missing slice for shape " + to_string(shapes[j]) + " at weight " + std::to_string(w));
    out[j] = *s;
    below = shapes[j];
  }
  return out;
}

}  // namespace

std::vector<Lineup> enumerate_MLL(int n, const Profile& c) {
  std::vector<Lineup> out;
  if (n == 0) {
    out.push_back(classify(LabeledDistinctPartition(), c));
    return out;
  }
  for_each_shape_sequence(n, c, [&](const std::vector<Shape>& shapes) { out.push_back(classify(build_chain(c, shapes, 0))); });
  return out;
}

std::vector<Lineup> enumerate_MJL(int n, const Profile& c) {
  std::vector<Lineup> out;
  if (n == 0) return out;
  for_each_shape_sequence(n, c, [&](const std::vector<Shape>& shapes) {
    for (unsigned jam = 1; jam < (1u << n); ++jam) {
      bool strict = true;
      Shape below = shape_of_zero(c);
      for (int j = n - 1; j >= 0; --j) {
        if ((jam >> j) & 1u && delta_shapes(below, shapes[j], c.level()) == 0) strict = false;
        below = shapes[j];
      }
      if (!strict) continue;
      auto L = classify(build_chain(c, shapes, jam));
      if (L.cls == LineupClass::MinimalJammed) out.push_back(std::move(L));
    }
  });
  return out;
}

Polynomial mll_polynomial(int n, const Profile& c) {
  Polynomial sum;
  for (const auto& L : enumerate_MLL(n, c)) sum += Polynomial::monomial(static_cast<int>(L.weight()));
  return sum;
}

Polynomial mjl_correction(int n, const Profile& c) {
  Polynomial sum;
  const int r = c.rank();
  for (const auto& L : enumerate_MJL(n, c)) {
    Polynomial term = Polynomial::monomial(static_cast<int>(L.weight()));
    for (int j : L.iota) term = term * (Polynomial::constant(1) - Polynomial::monomial(j * r));
    sum += term;
  }
  return sum;
}

Series pivot_chain_gf(int n, const Profile& c, int N) {
  Series out(N);
  if (n == 0) {
    out[0] = 1;
    return out;
  }
  const auto shapes = all_shapes(c.rank(), c.level());
  std::vector<std::vector<Slice>> by_weight(N + 1);
  for (int w = 1; w <= N; ++w)
    for (const auto& s : shapes)
      if (auto sl = Slice::from_shape(c, s, w)) by_weight[w].push_back(*sl);
  // chain is built smallest first; reversed copies go to chain_pivots
  std::vector<Slice> chain;
  auto flags_of = [&]() {
    std::vector<Slice> big_first(chain.rbegin(), chain.rend());
    return chain_pivots(big_first);
  };
  auto rec = [&](auto&& self, int total) -> void {
    const int k = static_cast<int>(chain.size());
    if (k == n) {
      const auto f = flags_of();
      if (std::all_of(f.begin(), f.end(), [](bool b) { return b; })) out[total] += 1;
      return;
    }
    const int lo = k == 0 ? 1 : chain.back().weight() + 1;
    const int left = n - k;  // slices still to place, each at least as heavy as the next
    for (int w = lo; total + left * w + left * (left - 1) / 2 <= N; ++w)
      for (const auto& s : by_weight[w]) {
        if (k > 0 && !s.contains(chain.back())) continue;
        chain.push_back(s);
        // the previous top now has its space after fixed
        bool ok = true;
        if (k > 0) {
          const auto f = flags_of();
          ok = f[1];
        }
        if (ok) self(self, total + w);
        chain.pop_back();
      }
  };
  rec(rec, 0);
  return out;
}

Series lemma_rhs(int n, const Profile& c, int N) {
  const Polynomial num = mll_polynomial(n, c) + mjl_correction(n, c);
  return num.to_series(N) * inv_pochhammer(c.rank(), n, N);
}

SeriesCheck lemma_check(int n, const Profile& c, int N) {
  const int m = first_mismatch(pivot_chain_gf(n, c, N), lemma_rhs(n, c, N));
  return {m < 0, m};
}

BivariateSeries qconj_rhs(const Profile& c, int N, int n_max) {
  // 1/(zq;q)_inf
  BivariateSeries lead = BivariateSeries::one(N, n_max);
  for (int k = 1; k <= N; ++k) {
    BivariateSeries geo(N, n_max);
    for (int j = 0; j <= n_max && k * j <= N; ++j) geo.at(k * j, j) = 1;
    lead = lead * geo;
  }
  BivariateSeries sum(N, n_max);
  for (int n = 0; n <= n_max; ++n) {
    const Polynomial num = P_tilde(n, c) + mjl_correction(n, c);
    const Series t = num.to_series(N) * inv_pochhammer(c.rank(), n, N);
    for (int m = 0; m <= N; ++m) sum.at(m, n) = t[m];
  }
  return lead * sum;
}

BivariateCheck qconj_genfunc_check(const Profile& c, int N, int n_max) {
  const auto full = count_bivariate(c, N);
  BivariateSeries oracle(N, n_max);
  for (int m = 0; m <= N; ++m)
    for (int j = 0; j <= std::min(n_max, N); ++j) oracle.at(m, j) = full.at(m, j);
  auto [qe, ze] = first_mismatch(oracle, qconj_rhs(c, N, n_max));
  return {qe < 0, qe, ze};
}

}  // namespace cyl
