#include "doctest.h"

#include <set>

#include "cyl/core.hpp"
#include "cyl/io.hpp"
#include "cyl/oracle.hpp"

using namespace cyl;

namespace {

std::vector<Partition> rows(std::initializer_list<std::vector<int>> rs) {
  std::vector<Partition> out;
  for (const auto& r : rs) out.emplace_back(r);
  return out;
}

}  // namespace

TEST_CASE("validate the introductory example") {
  const Profile c({1, 2, 0});
  const auto L = validate(rows({{10, 5, 4, 1}, {12, 8, 5, 3}, {7, 6, 4, 2}}), c);
  CHECK(weight(L) == 67);
  CHECK(max_part(L) == 12);
}

TEST_CASE("empty cylindric partition") {
  for (const auto& c : {Profile({1}), Profile({2, 1}), Profile({0, 3, 0})}) {
    const auto E = empty_cylindric(c);
    CHECK(weight(E) == 0);
    CHECK(max_part(E) == 0);
    CHECK(is_valid(std::vector<Partition>(c.rank()), c));
  }
}

TEST_CASE("((1),(2),()) with profile (1,2,0) is valid") {
  // lambda^(1)_1 >= lambda^(2)_{1+2} = 0 holds, and every other inequality too
  CHECK(is_valid(rows({{1}, {2}, {}}), Profile({1, 2, 0})));
}

TEST_CASE("violated inequality names row and position") {
  // row 1 against row 2 with shift c_2 = 0: 1 >= 5 fails at j = 1
  try {
    validate(rows({{1}, {5}, {}}), Profile({1, 0, 2}));
    FAIL("expected ViolatedInequality");
  } catch (const ViolatedInequality& e) {
    CHECK(e.row == 1);
    CHECK(e.pos == 1);
  }
  // wraparound: row 3 against row 1 shifted by c_1 = 0
  try {
    validate(rows({{2}, {2}, {1}}), Profile({0, 1, 1}));
    FAIL("expected ViolatedInequality");
  } catch (const ViolatedInequality& e) {
    CHECK(e.row == 3);
    CHECK(e.pos == 1);
  }
  CHECK_THROWS_AS(validate(rows({{1}, {1}}), Profile({1, 1, 1})), RowCountMismatch);
}

TEST_CASE("weight and max of the slice example") {
  const auto L = validate(rows({{5, 4}, {8, 2}, {7, 5, 1}}), Profile({1, 1, 1}));
  CHECK(weight(L) == 32);
  CHECK(max_part(L) == 8);
}

TEST_CASE("profile and shape invariants") {
  CHECK_THROWS_AS(Profile({}), InvalidProfile);
  CHECK_THROWS_AS(Profile({0, 0}), InvalidProfile);
  CHECK_THROWS_AS(Profile({1, -1, 2}), InvalidProfile);
  CHECK_THROWS_AS(Shape({1, 2}), InvalidShape);
  CHECK_THROWS_AS(Shape({-1}), InvalidShape);
  CHECK_THROWS_AS(Partition({1, 2}), InvalidPartition);
  CHECK(Partition({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
  CHECK(Profile({1, 2, 0}).level() == 3);
  CHECK(Profile({1, 2, 0}).rank() == 3);
}

TEST_CASE("shape of zero") {
  CHECK(shape_of_zero(Profile({2, 1})) == Shape({1}));
  CHECK(shape_of_zero(Profile({1, 1, 1})) == Shape({2, 1}));
  CHECK(shape_of_zero(Profile({0, 3, 0})) == Shape({3, 0}));
  CHECK(shape_of_zero(Profile({5})) == Shape());
}

TEST_CASE("shape to profile") {
  CHECK(shape_to_profile(Shape({2, 1}), 3) == Profile({1, 1, 1}));
  CHECK(shape_to_profile(Shape({1}), 3) == Profile({2, 1}));
  CHECK(shape_to_profile(Shape({0, 0, 0}), 4) == Profile({4, 0, 0, 0}));
  CHECK_THROWS_AS(shape_to_profile(Shape({4, 1}), 3), LevelTooSmall);
}

TEST_CASE("shape_of_zero inverts shape_to_profile for r, l <= 4") {
  for (int r = 1; r <= 4; ++r)
    for (int l = 1; l <= 4; ++l)
      for (const auto& s : all_shapes(r, l)) {
        CHECK(shape_of_zero(shape_to_profile(s, l)) == s);
        CHECK(shape_to_profile(s, l).level() == l);
      }
}

TEST_CASE("all_shapes counts binomials") {
  for (int r = 1; r <= 4; ++r)
    for (int l = 1; l <= 5; ++l) CHECK(static_cast<long long>(all_shapes(r, l).size()) == binomial(l + r - 1, r - 1));
}

TEST_CASE("delta worked values") {
  CHECK(delta(Profile({1, 1, 1}), Profile({0, 0, 2})) == 1);
  CHECK(delta(Profile({0, 0, 2}), Profile({1, 1, 1})) == 2);
  CHECK(delta_shapes(Shape({0, 0}), Shape({4, 1}), 5) == 5);
  CHECK(delta_shapes(Shape({4, 1}), Shape({4, 2}), 5) == 1);
  CHECK(delta_shapes(Shape({4, 2}), Shape({4, 3}), 5) == 1);
  CHECK_THROWS_AS(delta(Profile({1, 1}), Profile({1, 1, 0})), RankMismatch);
  // only c_2..c_r enter the formula, so the levels may differ
  CHECK(delta(Profile({5, 1, 1}), Profile({0, 0, 2})) == 1);
}

TEST_CASE("delta is non-negative, vanishes on the diagonal, and respects weights mod r") {
  for (int r = 1; r <= 4; ++r)
    for (int l = 1; l <= 4; ++l) {
      const auto shapes = all_shapes(r, l);
      for (const auto& s : shapes)
        for (const auto& t : shapes) {
          const int d = delta_shapes(s, t, l);
          CHECK(d >= 0);
          CHECK(((d - (t.weight() - s.weight())) % r + r) % r == 0);
          if (s == t) CHECK(d == 0);
        }
    }
}

TEST_CASE("validate agrees with the oracle on every candidate") {
  // all row tuples with parts <= 3 and at most 3 parts per row, weight <= 10
  for (int l = 1; l <= 3; ++l)
    for (int r = 1; r <= 3; ++r)
      for (const auto& s : all_shapes(r, l)) {
        const Profile c = shape_to_profile(s, l);
        std::set<std::string> from_oracle;
        for (const auto& L : enumerate_by_weight(c, 10)) from_oracle.insert(to_text(L));
        std::vector<std::vector<int>> parts;
        for (int a = 0; a <= 3; ++a)
          for (int b = 0; b <= a; ++b)
            for (int d = 0; d <= b; ++d) parts.push_back({a, b, d});
        std::size_t accepted = 0;
        std::vector<Partition> cand(r);
        auto rec = [&](auto&& self, int i, int w) -> void {
          if (w > 10) return;
          if (i == r) {
            if (is_valid(cand, c)) {
              ++accepted;
              CHECK(from_oracle.count(to_text(validate(cand, c))) == 1);
            }
            return;
          }
          for (const auto& p : parts) {
            cand[i] = Partition(p);
            self(self, i + 1, w + p[0] + p[1] + p[2]);
          }
        };
        rec(rec, 0, 0);
        std::size_t small = 0;
        for (const auto& L : enumerate_by_weight(c, 10)) {
          bool fits = true;
          for (const auto& row : L.rows()) fits = fits && row.length() <= 3 && row.at(0) <= 3;
          if (fits) ++small;
        }
        CHECK(accepted == small);
      }
}

TEST_CASE("addition stays cylindric and max is subadditive") {
  const Profile c({1, 1, 1});
  const auto all = enumerate_by_weight(c, 6);
  for (std::size_t i = 0; i < all.size(); i += 3)
    for (std::size_t j = 0; j < all.size(); j += 5) {
      const auto S = add(all[i], all[j]);
      CHECK(weight(S) == weight(all[i]) + weight(all[j]));
      CHECK(max_part(S) <= max_part(all[i]) + max_part(all[j]));
    }
}
