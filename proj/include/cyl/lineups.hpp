#pragma once

#include <string>
#include <vector>

#include "cyl/bijection.hpp"
#include "cyl/core.hpp"
#include "cyl/series.hpp"
#include "cyl/slices.hpp"

namespace cyl {

struct NotPotentialPivot : Error { using Error::Error; };

enum class LineupClass { Loose, MinimalLoose, Jammed, MinimalJammed, None };
std::string to_string(LineupClass k);

struct Lineup {
  Profile profile;
  std::vector<Slice> pivots;  // largest first
  LineupClass cls = LineupClass::None;
  std::vector<int> iota;      // 1-based gap indices with gap = Delta
  std::vector<int> gaps;      // gaps[j-1] = |_jPi| - |_{j+1}Pi|, the last one against E
  std::vector<int> deltas;    // Delta(_{j+1}sigma, _jsigma)
  bool all_pivots = false;
  std::string diagnosis;

  long long weight() const;
};

std::string to_string(const Lineup& L);

std::vector<Shape> potential_pivot_shapes(int r, int level);

// chain: slices largest first
Lineup classify(const std::vector<Slice>& chain);
Lineup classify(const LabeledDistinctPartition& beta, const Profile& c);

std::vector<Lineup> enumerate_MLL(int n, const Profile& c);
std::vector<Lineup> enumerate_MJL(int n, const Profile& c);

// sum over MLL of q^{|L|}, and sum over MJL of prod_{j in iota} (1 - q^{jr}) q^{|L|}
Polynomial mll_polynomial(int n, const Profile& c);
Polynomial mjl_correction(int n, const Profile& c);

struct SeriesCheck {
  bool equal = false;
  int first_mismatch = -1;
};

Series pivot_chain_gf(int n, const Profile& c, int N);
Series lemma_rhs(int n, const Profile& c, int N);
SeriesCheck lemma_check(int n, const Profile& c, int N);

struct BivariateCheck {
  bool equal = false;
  int q_exp = -1;
  int z_exp = -1;
};

// 1/(zq;q)_inf * sum_{n <= n_max} (P~_{n,c} + MJL correction) z^n/(q^r;q^r)_n
BivariateSeries qconj_rhs(const Profile& c, int N, int n_max);
BivariateCheck qconj_genfunc_check(const Profile& c, int N, int n_max);

}  // namespace cyl
