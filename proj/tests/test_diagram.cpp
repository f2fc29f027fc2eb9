#include "doctest.h"

#include "cyl/diagram.hpp"
#include "cyl/io.hpp"
#include "cyl/oracle.hpp"

using namespace cyl;

namespace {

Matrix mat(std::vector<std::vector<long>> rows) {
  Matrix M;
  for (const auto& r : rows) {
    std::vector<Integer> row;
    for (long v : r) row.emplace_back(v);
    M.push_back(std::move(row));
  }
  return M;
}

std::vector<long> longs(const std::vector<Integer>& v, std::size_t n) {
  std::vector<long> out;
  for (std::size_t i = 0; i < n && i < v.size(); ++i) out.push_back(v[i].get_si());
  return out;
}

Polynomial poly(std::vector<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

std::vector<Shape> shapes_of(std::initializer_list<std::vector<int>> l) {
  std::vector<Shape> out;
  for (const auto& s : l) out.emplace_back(s);
  return out;
}

const Quadratic sqrt3(0, 1, 3);
const Quadratic phi(Rational(1, 2), Rational(1, 2), 5);
const Quadratic psi(Rational(1, 2), Rational(-1, 2), 5);

}  // namespace

TEST_CASE("shape transition graph for (1,1,1)") {
  const auto g = build_graph(Profile({1, 1, 1}));
  CHECK(g.nodes.size() == 10);
  REQUIRE(g.marked);
  CHECK(g.nodes[*g.marked] == Shape({2, 1}));
  CHECK(g.edge_count() == 18);
  const auto succ = [&](const Shape& s) {
    std::vector<Shape> out;
    for (int t : g.out[g.index_of(s)]) out.push_back(g.nodes[t]);
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(succ(Shape({2, 1})) == shapes_of({{1, 0}, {2, 2}, {3, 1}}));
  CHECK(succ(Shape({0, 0})) == shapes_of({{1, 0}}));
  CHECK(succ(Shape({3, 3})) == shapes_of({{2, 2}}));
  // every edge moves the weight class by one
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    for (int t : g.out[k]) CHECK((g.nodes[t].weight() - g.nodes[k].weight() - 1) % 3 == 0);
}

TEST_CASE("rank 2 graphs are two-way chains") {
  const auto g = build_graph(2, 7);
  CHECK(g.nodes.size() == 8);
  for (int k = 0; k <= 7; ++k) {
    std::vector<int> want;
    if (k < 7) want.push_back(k + 1);
    if (k > 0) want.push_back(k - 1);
    std::vector<int> got = g.out[k];
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
  CHECK(to_adjacency_list(build_graph(2, 1)) == "(0) -> (1)\n(1) -> (0)\n");
}

TEST_CASE("rank 1 graph") {
  const auto g = build_graph(Profile({3}));
  CHECK(g.nodes.size() == 1);
  CHECK(g.nodes[0] == Shape());
  CHECK(g.marked == 0);
  CHECK(g.out[0] == std::vector<int>{0});
}

TEST_CASE("node counts are binomials") {
  for (int r = 1; r <= 4; ++r)
    for (int l = 1; l <= 5; ++l) CHECK(static_cast<long long>(build_graph(r, l).nodes.size()) == binomial(l + r - 1, r - 1));
}

TEST_CASE("r=3, l=2 adjacency matrix and its cube") {
  const auto order = grouped_order(3, 2);
  CHECK(order.shapes == shapes_of({{0, 0}, {2, 1}, {1, 0}, {2, 2}, {1, 1}, {2, 0}}));
  CHECK(order.block_sizes == std::vector<int>{2, 2, 2});
  const auto A = adjacency_matrix(build_graph(3, 2), order.shapes);
  CHECK(A == mat({{0, 0, 0, 0, 1, 0},
                  {0, 0, 0, 0, 1, 1},
                  {1, 1, 0, 0, 0, 0},
                  {0, 1, 0, 0, 0, 0},
                  {0, 0, 1, 1, 0, 0},
                  {0, 0, 1, 0, 0, 0}}));
  const auto A3 = matrix_power(A, 3);
  CHECK(is_block_diagonal(A3, order.block_sizes));
  CHECK_FALSE(is_block_diagonal(A, order.block_sizes));
  const auto blocks = diagonal_blocks(A3, order.block_sizes);
  CHECK(blocks[0] == mat({{1, 2}, {2, 3}}));
  CHECK(blocks[1] == mat({{3, 2}, {2, 1}}));
  CHECK(blocks[2] == mat({{3, 2}, {2, 1}}));
  for (const auto& b : blocks) CHECK(char_poly(b) == poly({-1, -4, 1}));
}

TEST_CASE("r=3, l=3 blocks of the cube") {
  const auto order = grouped_order(3, 3);
  const auto A3 = matrix_power(adjacency_matrix(build_graph(3, 3), order.shapes), 3);
  CHECK(is_block_diagonal(A3, order.block_sizes));
  const auto blocks = diagonal_blocks(A3, order.block_sizes);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0] == mat({{1, 2, 0, 1}, {2, 6, 2, 2}, {1, 2, 1, 0}, {0, 2, 1, 1}}));
  CHECK(blocks[1] == mat({{3, 3, 2}, {2, 3, 3}, {3, 2, 3}}));
  CHECK(blocks[2] == mat({{3, 2, 3}, {3, 3, 2}, {2, 3, 3}}));
  // (x - 8)(x^2 - x + 1)
  const auto cubic = poly({-8, 9, -9, 1});
  CHECK(char_poly(blocks[1]) == cubic);
  CHECK(char_poly(blocks[2]) == cubic);
  CHECK(char_poly(blocks[0]) == cubic.shifted(1));
  CHECK(strip_x_power(char_poly(blocks[0])) == cubic);
}

TEST_CASE("diagonal blocks of A^r share their char poly up to powers of x") {
  for (int r = 1; r <= 4; ++r)
    for (int l = 1; l <= 4; ++l) {
      const auto order = grouped_order(r, l);
      const auto Ar = matrix_power(adjacency_matrix(build_graph(r, l), order.shapes), r);
      CHECK(is_block_diagonal(Ar, order.block_sizes));
      const auto blocks = diagonal_blocks(Ar, order.block_sizes);
      const auto p0 = strip_x_power(char_poly(blocks[0]));
      for (const auto& b : blocks) CHECK(strip_x_power(char_poly(b)) == p0);
    }
}

TEST_CASE("r=2 squares are symmetric") {
  for (int l = 1; l <= 12; ++l) {
    const auto order = grouped_order(2, l);
    const auto A2 = matrix_power(adjacency_matrix(build_graph(2, l), order.shapes), 2);
    CHECK(A2 == transpose(A2));
  }
}

TEST_CASE("(4,0) matrices") {
  const auto order = grouped_order(2, 4);
  CHECK(order.shapes == shapes_of({{0}, {2}, {4}, {1}, {3}}));
  const auto A = adjacency_matrix(build_graph(2, 4), order.shapes);
  CHECK(A == mat({{0, 0, 0, 1, 0}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}, {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}}));
  const auto blocks = diagonal_blocks(matrix_power(A, 2), order.block_sizes);
  CHECK(blocks[0] == mat({{1, 1, 0}, {1, 2, 1}, {0, 1, 1}}));
  CHECK(blocks[1] == mat({{2, 1}, {1, 2}}));
  // (x - 3)(x - 1): the smaller block has trace 4, so its eigenvalues are 3 and 1
  CHECK(char_poly(blocks[1]) == poly({3, -4, 1}));
  CHECK(char_poly(blocks[0]) == poly({3, -4, 1}).shifted(1));
}

TEST_CASE("char poly of small matrices") {
  CHECK(char_poly(mat({{1, 0}, {0, 1}})) == poly({1, -2, 1}));
  CHECK(char_poly(mat({{5}})) == poly({-5, 1}));
  CHECK(char_poly(mat({{0, 1}, {1, 0}})) == poly({-1, 0, 1}));
  CHECK(strip_x_power(poly({0, 0, 2, 1})) == poly({2, 1}));
}

TEST_CASE("path counts") {
  const auto t = path_counts(Profile({1, 1, 1}), 7);
  CHECK(longs(t.a, 8) == std::vector<long>{1, 3, 6, 12, 24, 48, 96, 192});
  CHECK(t.by_shape[0].size() == 1);
  CHECK(t.by_shape[0].at(Shape({2, 1})) == 1);

  const auto u = path_counts(Profile({4, 0}), 30);
  CHECK(longs(u.a, 8) == std::vector<long>{1, 1, 2, 3, 6, 9, 18, 27});
  Integer three_pow = 1;
  for (int n = 0; 2 * n + 1 <= 30; ++n) {
    CHECK(u.a[2 * n + 1] == three_pow);
    if (n >= 1) CHECK(u.a[2 * n] == 2 * three_pow / 3);
    three_pow *= 3;
  }

  // (2,0,0): Fibonacci numbers, a_n = F_{n+1} with F_1 = F_2 = 1
  const auto f = path_counts(Profile({2, 0, 0}), 25);
  CHECK(longs(f.a, 8) == std::vector<long>{1, 1, 2, 3, 5, 8, 13, 21});
}

TEST_CASE("path counts are consistent with the graph") {
  for (int r = 1; r <= 3; ++r)
    for (int l = 1; l <= 4; ++l)
      for (const auto& s : all_shapes(r, l)) {
        const Profile c = shape_to_profile(s, l);
        const auto g = build_graph(c);
        const int N = r == 1 ? 12 : 24;
        const auto t = path_counts(c, N);
        for (int n = 0; n <= N; ++n) {
          Integer sum = 0;
          for (const auto& [shape, k] : t.by_shape[n]) sum += k;
          CHECK(sum == t.a[n]);
        }
        for (int n = 1; n <= N; ++n)
          for (std::size_t k = 0; k < g.nodes.size(); ++k) {
            Integer in = 0;
            for (std::size_t j = 0; j < g.nodes.size(); ++j)
              for (int t2 : g.out[j])
                if (t2 == static_cast<int>(k)) {
                  auto it = t.by_shape[n - 1].find(g.nodes[j]);
                  if (it != t.by_shape[n - 1].end()) in += it->second;
                }
            auto it = t.by_shape[n].find(g.nodes[k]);
            CHECK((it == t.by_shape[n].end() ? Integer(0) : it->second) == in);
          }
      }
}

TEST_CASE("recurrence fitting") {
  const auto t = path_counts(Profile({1, 1, 1}), 20);
  const auto rec = fit_recurrence(t.a);
  CHECK(rec.order == 1);
  CHECK(rec.coeffs == std::vector<Rational>{1, -2});
  CHECK(rec.exceptions == 1);
  CHECK(satisfies(rec, t.a));
  CHECK(to_string(rec) == "b_n - 2*b_{n-1} = 0 for n >= 2");

  const auto constant = fit_recurrence(std::vector<Integer>(10, 7));
  CHECK(constant.order == 1);
  CHECK(constant.coeffs == std::vector<Rational>{1, -1});
  CHECK(constant.exceptions == 0);

  const auto f = path_counts(Profile({2, 0, 0}), 40);
  for (int s = 0; s < 3; ++s) {
    const auto cls = residue_class(f.a, 3, s);
    const auto r3 = fit_recurrence(cls);
    CHECK(r3.coeffs == std::vector<Rational>{1, -4, -1});
    CHECK(satisfies(r3, cls));
  }
  CHECK(fit_recurrence(f.a).coeffs == std::vector<Rational>{1, -1, -1});

  // exceptional prefix: 5, then powers of two
  std::vector<Integer> v{5};
  for (int n = 0; n < 12; ++n) v.push_back(Integer(1) << n);
  const auto e = fit_recurrence(v);
  CHECK(e.order == 1);
  CHECK(e.exceptions == 1);

  std::vector<Integer> noise;
  for (int n = 0; n < 12; ++n) noise.emplace_back((n * n * 7 + 3) % 11);
  CHECK_THROWS_AS(fit_recurrence(noise, {2, 1}), NoRecurrenceFound);
}

TEST_CASE("fitted recurrences hold on residue classes up to N = 40") {
  for (int r = 1; r <= 3; ++r)
    for (int l = 1; l <= 4; ++l)
      for (const auto& s : all_shapes(r, l)) {
        const auto t = path_counts(shape_to_profile(s, l), 40);
        for (int j = 0; j < r; ++j) {
          const auto cls = residue_class(t.a, r, j);
          CHECK(satisfies(fit_recurrence(cls), cls));
        }
      }
}

TEST_CASE("distinct parts generating function") {
  CHECK(longs(distinct_gf(Profile({1, 1, 1}), 3).coeffs(), 4) == std::vector<long>{1, 3, 3, 9});
  CHECK(distinct_gf(Profile({2, 1}), 0) == Series::one(CoefficientRing::integers(), 0));
  for (const auto& c : {Profile({2, 1}), Profile({1, 1, 1}), Profile({4, 0}), Profile({2, 0, 0})})
    CHECK(first_mismatch(distinct_gf(c, 12), count_distinct_series(c, 12)) == -1);
  for (int r = 1; r <= 3; ++r)
    for (int l = 1; l <= 3; ++l)
      for (const auto& s : all_shapes(r, l)) {
        const Profile c = shape_to_profile(s, l);
        CHECK(first_mismatch(distinct_gf(c, 10), count_distinct_series(c, 10)) == -1);
      }
}

TEST_CASE("closed form for (1,1,1)") {
  const auto Q = CoefficientRing::rationals();
  const std::vector<ClosedFormTerm<Rational>> terms{{Rational(3, 2), Rational(2), 0}};
  const auto rep = verify_closed_form(Profile({1, 1, 1}), terms, {Rational(-1, 2)}, Q, 25);
  CHECK(rep.equal);
  CHECK(rep.irrational_free);
  CHECK_FALSE(verify_closed_form(Profile({1, 1, 1}), terms, {Rational(1, 2)}, Q, 25).equal);
}

TEST_CASE("closed form for (2,0,0)") {
  const auto Q5 = CoefficientRing::quadratic(5);
  const std::vector<ClosedFormTerm<Quadratic>> terms{
      {Quadratic(Rational(1, 2), Rational(1, 10), 5), phi, 0},
      {Quadratic(Rational(1, 2), Rational(-1, 10), 5), psi, 0}};
  const auto rep = verify_closed_form(Profile({2, 0, 0}), terms, {}, Q5, 25);
  CHECK(rep.equal);
  CHECK(rep.irrational_free);
}

TEST_CASE("closed form for (4,0)") {
  const auto Q3 = CoefficientRing::quadratic(3);
  const Quadratic plus(Rational(1, 3), Rational(1, 6), 3), minus(Rational(1, 3), Rational(-1, 6), 3);
  const std::vector<ClosedFormTerm<Quadratic>> terms{{plus, sqrt3, 0}, {minus, -sqrt3, 0}};
  const auto rep = verify_closed_form(Profile({4, 0}), terms, {Quadratic(Rational(1, 3))}, Q3, 25);
  CHECK(rep.equal);
  CHECK(rep.irrational_free);
  // with the coefficients attached the other way round the q^1 coefficient is -1
  const std::vector<ClosedFormTerm<Quadratic>> swapped{{plus, -sqrt3, 0}, {minus, sqrt3, 0}};
  const auto bad = verify_closed_form(Profile({4, 0}), swapped, {Quadratic(Rational(1, 3))}, Q3, 25);
  CHECK_FALSE(bad.equal);
  CHECK(bad.first_mismatch == 1);
  CHECK(closed_form_series(swapped, {Quadratic(Rational(1, 3))}, Q3, 3)[1] == Quadratic(-1));
}

TEST_CASE("closed forms reject foreign coefficients") {
  const std::vector<ClosedFormTerm<Quadratic>> terms{{Quadratic(1), Quadratic(0, 1, 2), 0}};
  CHECK_THROWS_AS(verify_closed_form(Profile({4, 0}), terms, {}, CoefficientRing::quadratic(3), 5), RingMismatch);
  const std::vector<ClosedFormTerm<Rational>> half{{Rational(1, 2), Rational(1), 0}};
  CHECK_THROWS_AS(closed_form_series(half, {}, CoefficientRing::integers(), 5), RingMismatch);
}

TEST_CASE("solving for the closed form coefficients") {
  const auto Q = CoefficientRing::rationals();
  const auto fit = solve_closed_form<Rational>(Profile({1, 1, 1}), {{Rational(2), 0}}, 0, Q, 20);
  REQUIRE(fit);
  CHECK(fit->alphas == std::vector<Rational>{Rational(3, 2)});
  CHECK(fit->residual == std::vector<Rational>{Rational(-1, 2)});

  const auto Q3 = CoefficientRing::quadratic(3);
  const auto fit40 = solve_closed_form<Quadratic>(Profile({4, 0}), {{sqrt3, 0}, {-sqrt3, 0}}, 0, Q3, 20);
  REQUIRE(fit40);
  CHECK(fit40->alphas[0] == Quadratic(Rational(1, 3), Rational(1, 6), 3));
  CHECK(fit40->alphas[1] == Quadratic(Rational(1, 3), Rational(-1, 6), 3));
  CHECK(fit40->residual[0] == Quadratic(Rational(1, 3)));

  // (2,1) is not a combination of a single product with a constant
  CHECK_FALSE(solve_closed_form<Rational>(Profile({2, 1}), {{Rational(1), 0}}, 0, Q, 20));
}
