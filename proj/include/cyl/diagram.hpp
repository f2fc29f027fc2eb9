#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyl/core.hpp"
#include "cyl/linalg.hpp"
#include "cyl/series.hpp"

namespace cyl {

struct NoRecurrenceFound : Error { using Error::Error; };

struct ShapeTransitionGraph {
  int rank = 1;
  int level = 1;
  std::vector<Shape> nodes;           // lexicographic
  std::vector<std::vector<int>> out;  // out[k]: targets of nodes[k]
  std::optional<int> marked;          // shape of zero, when built from a profile

  int index_of(const Shape& s) const;
  std::size_t edge_count() const;
};

ShapeTransitionGraph build_graph(int r, int level);
ShapeTransitionGraph build_graph(const Profile& c);
// one line per node: "(s) -> (t1) (t2)"
std::string to_adjacency_list(const ShapeTransitionGraph& g);

using Matrix = std::vector<std::vector<Integer>>;

// nodes grouped by |shape| mod r, lexicographic inside a group
struct GroupedOrder {
  std::vector<Shape> shapes;
  std::vector<int> block_sizes;
};
GroupedOrder grouped_order(int r, int level);

// A[tau][sigma] = number of edges sigma -> tau
Matrix adjacency_matrix(const ShapeTransitionGraph& g, const std::vector<Shape>& order);
Matrix multiply(const Matrix& x, const Matrix& y);
Matrix matrix_power(const Matrix& A, int k);
Matrix transpose(const Matrix& A);
std::vector<Matrix> diagonal_blocks(const Matrix& M, const std::vector<int>& sizes);
// true when every entry outside the diagonal blocks is zero
bool is_block_diagonal(const Matrix& M, const std::vector<int>& sizes);
Polynomial char_poly(const Matrix& block);
// divide out the largest power of x
Polynomial strip_x_power(const Polynomial& p);

struct PathCountTable {
  Profile profile;
  int N;
  std::vector<Integer> a;
  std::vector<std::map<Shape, Integer>> by_shape;
};

PathCountTable path_counts(const Profile& c, int N);

struct LinearRecurrence {
  int order = 0;
  std::vector<Rational> coeffs;  // A_0 = 1, ..., A_v
  int exceptions = 0;
};

struct FitOptions {
  int max_order = 12;
  int max_exceptions = 6;
};

LinearRecurrence fit_recurrence(const std::vector<Integer>& values, const FitOptions& opts = {});
std::vector<Integer> residue_class(const std::vector<Integer>& values, int r, int s);
bool satisfies(const LinearRecurrence& rec, const std::vector<Integer>& values);
std::string to_string(const LinearRecurrence& rec);

Series distinct_gf(const Profile& c, int N);

// alpha * sum_n n^k beta^n q^{n(n+1)/2}/(q;q)_n
template <class R>
struct ClosedFormTerm {
  R alpha;
  R beta;
  int k = 0;
};

struct ClosedFormReport {
  bool equal = false;
  int first_mismatch = -1;
  bool irrational_free = true;
};

inline bool has_irrational_part(const Integer&) { return false; }
inline bool has_irrational_part(const Rational&) { return false; }
inline bool has_irrational_part(const Quadratic& x) { return !x.is_rational(); }
inline void check_in_ring(const Integer&, const CoefficientRing&) {}
inline void check_in_ring(const Rational&, const CoefficientRing& ring) {
  if (ring.kind == CoefficientRing::Kind::Integers) throw RingMismatch("rational coefficient in Z");
}
inline void check_in_ring(const Quadratic& x, const CoefficientRing& ring) {
  if (x.is_rational()) return;
  if (ring.kind != CoefficientRing::Kind::QuadraticField || ring.d != x.d())
    throw RingMismatch("element of Q(sqrt " + std::to_string(x.d()) + ") outside " + ring.tag());
}

template <class R>
TruncatedSeries<R> closed_form_series(const std::vector<ClosedFormTerm<R>>& terms, const std::vector<R>& residual,
                                      CoefficientRing ring, int N) {
  TruncatedSeries<R> s(ring, N);
  for (std::size_t n = 0; n < residual.size() && static_cast<int>(n) <= N; ++n) {
    check_in_ring(residual[n], ring);
    s[n] += residual[n];
  }
  for (const auto& t : terms) {
    check_in_ring(t.alpha, ring);
    check_in_ring(t.beta, ring);
    s += scale(lambert_zddz(t.beta, t.k, ring, N), t.alpha);
  }
  return s;
}

template <class R>
ClosedFormReport verify_closed_form(const Profile& c, const std::vector<ClosedFormTerm<R>>& terms,
                                    const std::vector<R>& residual, CoefficientRing ring, int N) {
  auto lhs = closed_form_series(terms, residual, ring, N);
  auto rhs = embed<R>(distinct_gf(c, N), ring);
  ClosedFormReport rep;
  rep.first_mismatch = first_mismatch(lhs, rhs);
  rep.equal = rep.first_mismatch < 0;
  for (int n = 0; n <= N; ++n)
    if (has_irrational_part(lhs[n])) rep.irrational_free = false;
  return rep;
}

template <class R>
struct ClosedFormFit {
  std::vector<R> alphas;
  std::vector<R> residual;
};

// Solves for the alphas and a residual polynomial of degree <= degree_bound
// from the coefficients of D_c up to q^N.
template <class R>
std::optional<ClosedFormFit<R>> solve_closed_form(const Profile& c, const std::vector<std::pair<R, int>>& betas,
                                                  int degree_bound, CoefficientRing ring, int N) {
  const auto target = embed<R>(distinct_gf(c, N), ring);
  std::vector<TruncatedSeries<R>> basis;
  for (const auto& [beta, k] : betas) basis.push_back(lambert_zddz(beta, k, ring, N));
  const std::size_t m = betas.size();
  const std::size_t cols = m + degree_bound + 1;
  std::vector<std::vector<R>> A(N + 1, std::vector<R>(cols, R(0)));
  std::vector<R> b(N + 1, R(0));
  for (int n = 0; n <= N; ++n) {
    for (std::size_t i = 0; i < m; ++i) A[n][i] = basis[i][n];
    if (n <= degree_bound) A[n][m + n] = R(1);
    b[n] = target[n];
  }
  auto x = solve_linear(std::move(A), std::move(b));
  if (!x) return std::nullopt;
  ClosedFormFit<R> fit;
  fit.alphas.assign(x->begin(), x->begin() + m);
  fit.residual.assign(x->begin() + m, x->end());
  return fit;
}

}  // namespace cyl
