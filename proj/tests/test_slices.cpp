#include "doctest.h"

#include <map>
#include <random>

#include "cyl/io.hpp"
#include "cyl/oracle.hpp"
#include "cyl/slices.hpp"

using namespace cyl;

namespace {

std::vector<std::vector<int>> lengths_of(const std::vector<Slice>& chain) {
  std::vector<std::vector<int>> out;
  for (const auto& s : chain) out.push_back(s.lengths());
  return out;
}

std::vector<Slice> all_slices_up_to(const Profile& c, int W) {
  std::vector<Slice> out;
  for (const auto& s : all_shapes(c.rank(), c.level()))
    for (int w = 0; w <= W; ++w)
      if (auto sl = Slice::from_shape(c, s, w)) out.push_back(*sl);
  return out;
}

const char* kShrinkExample = "3,3,3,2,2,2,2,1,1,1,1,1|3,3,3,2,2,2,1,1,1,1|3,3,3,2,2,2,2,1,1,1,1";

}  // namespace

TEST_CASE("slice decomposition of the running example") {
  const Profile c({1, 1, 1});
  const auto L = parse_rows("5,4|8,2|7,5,1", c);
  const auto chain = decompose(L);
  const std::vector<std::vector<int>> expected{{2, 2, 3}, {2, 2, 2}, {2, 1, 2}, {2, 1, 2},
                                               {1, 1, 2}, {0, 1, 1}, {0, 1, 1}, {0, 1, 0}};
  CHECK(lengths_of(chain.expanded()) == expected);
  CHECK(chain.length() == 8);
  CHECK(chain.weight() == 32);
  CHECK(recompose(chain) == L);

  std::vector<Shape> shapes;
  for (const auto& s : chain.expanded()) shapes.push_back(s.shape());
  shapes.push_back(Slice::zero(c).shape());
  const std::vector<Shape> want{Shape({1, 0}), Shape({2, 1}), Shape({2, 0}), Shape({2, 0}), Shape({1, 0}),
                                Shape({1, 1}), Shape({1, 1}), Shape({2, 2}), Shape({2, 1})};
  CHECK(shapes == want);
}

TEST_CASE("slice decomposition of the rank 2 example") {
  const Profile c({2, 1});
  const auto L = parse_rows("15,15,10,10,6,5|18,13,6,6", c);
  const auto chain = decompose(L);
  std::vector<int> mult;
  for (auto it = chain.entries().rbegin(); it != chain.entries().rend(); ++it) mult.push_back(it->multiplicity);
  CHECK(mult == std::vector<int>{3, 2, 3, 4, 1, 5});
  CHECK(recompose(chain) == L);
}

TEST_CASE("empty chain") {
  const Profile c({2, 1});
  CHECK(decompose(empty_cylindric(c)).entries().empty());
  CHECK(recompose(SliceChain(c)) == empty_cylindric(c));
}

TEST_CASE("recompose rejects a non-decreasing chain") {
  const Profile c({1, 1, 1});
  const Slice small(c, {0, 1, 0}), big(c, {1, 1, 2});
  CHECK_THROWS_AS(SliceChain(c, {{small, 1}, {big, 1}}), ChainNotDecreasing);
  CHECK_THROWS_AS(recompose(c, {small, big}), ChainNotDecreasing);
  CHECK_THROWS_AS(Slice(c, {0, 2, 0}), InvalidSlice);
}

TEST_CASE("decompose and recompose are inverse on oracle output") {
  for (int l = 1; l <= 3; ++l)
    for (int r = 1; r <= 3; ++r)
      for (const auto& s : all_shapes(r, l)) {
        const Profile c = shape_to_profile(s, l);
        for (const auto& L : enumerate_by_weight(c, 12)) {
          const auto chain = decompose(L);
          CHECK(recompose(chain) == L);
          CHECK(chain.weight() == weight(L));
          CHECK(chain.length() == max_part(L));
          const auto& es = chain.entries();
          for (std::size_t k = 1; k < es.size(); ++k) CHECK(es[k - 1].slice.contains(es[k].slice));
        }
      }
}

TEST_CASE("shapes of slices") {
  const Profile c({1, 1, 1});
  CHECK(slice_shape(Slice(c, {2, 2, 3})) == Shape({1, 0}));
  for (const auto& p : {Profile({2, 1}), Profile({0, 3, 0}), Profile({1, 0, 2}), Profile({1, 1, 0, 1})}) {
    CHECK(Slice::zero(p).shape() == shape_of_zero(p));
    const int r = p.rank();
    for (const auto& s : all_slices_up_to(p, 8))
      CHECK(((s.shape().weight() - s.weight() - shape_of_zero(p).weight()) % r + r) % r == 0);
  }
}

TEST_CASE("at most one slice per shape and weight") {
  for (const auto& c : {Profile({1, 1, 1}), Profile({2, 1}), Profile({0, 2, 1}), Profile({4, 0})}) {
    // every valid length vector of weight <= 10
    std::map<std::pair<Shape, int>, int> seen;
    std::vector<int> l(c.rank());
    auto rec = [&](auto&& self, int i, int w) -> void {
      if (i == c.rank()) {
        if (is_valid_slice(c, l)) {
          const Slice s(c, l);
          CHECK(++seen[{s.shape(), s.weight()}] == 1);
          CHECK(Slice::from_shape(c, s.shape(), s.weight()) == s);
        }
        return;
      }
      for (int v = 0; w + v <= 10; ++v) {
        l[i] = v;
        self(self, i + 1, w + v);
      }
    };
    rec(rec, 0, 0);
  }
}

TEST_CASE("successors") {
  const auto first = successors(Slice::zero(Profile({2, 1})));
  std::vector<Shape> shapes;
  for (const auto& s : first) {
    CHECK(s.weight() == 1);
    shapes.push_back(s.shape());
  }
  std::sort(shapes.begin(), shapes.end());
  CHECK(shapes == std::vector<Shape>{Shape({0}), Shape({2})});

  const Profile c({1, 1, 1});
  const auto s21 = Slice::from_shape(c, Shape({2, 1}), 3);
  REQUIRE(s21);
  CHECK(successors(*s21).size() == 3);
  for (const auto& s : all_slices_up_to(c, 6))
    for (const auto& t : successors(s)) {
      CHECK(t.weight() == s.weight() + 1);
      CHECK(t.contains(s));
      int changed = 0;
      for (int i = 0; i < c.rank(); ++i) changed += t.length(i) != s.length(i);
      CHECK(changed == 1);
    }
}

TEST_CASE("shrink the worked example") {
  const Profile c({1, 1, 1});
  const auto L = parse_rows(kShrinkExample, c);
  const auto chain = decompose(L).expanded();
  REQUIRE(chain.size() == 3);

  const auto most = shrink(chain, ShrinkMode::AtMost);
  CHECK(most.side == Partition({9, 9, 9, 6, 6, 6, 3, 3, 3, 3}));
  CHECK(is_tight(most.tight, ShrinkMode::AtMost));
  long long tight = 0;
  for (const auto& s : most.tight) tight += s.weight();
  CHECK(tight + most.side.weight() == weight(L));
  CHECK(expand(most.tight, most.side, ShrinkMode::AtMost) == chain);

  const auto exact = shrink(chain, ShrinkMode::Exact);
  CHECK(exact.side == Partition({9, 9, 6, 6, 6, 3, 3, 3, 3}));
  CHECK(exact.tight.size() == 3);
  CHECK_FALSE(exact.tight.back().is_zero());
  CHECK(max_part(recompose(c, exact.tight)) == 3);
  CHECK(expand(exact.tight, exact.side, ShrinkMode::Exact) == chain);

  // tight chains are fixed points
  CHECK(shrink(most.tight, ShrinkMode::AtMost).side.empty());
  CHECK(shrink(exact.tight, ShrinkMode::Exact).side.empty());
  CHECK(expand(most.tight, Partition(), ShrinkMode::AtMost) == most.tight);
}

TEST_CASE("tight gaps are Delta") {
  const Profile c({1, 1, 1});
  const auto chain = decompose(parse_rows(kShrinkExample, c)).expanded();
  const auto t = shrink(chain, ShrinkMode::AtMost).tight;
  for (std::size_t j = 0; j < t.size(); ++j) {
    const Shape below = j + 1 < t.size() ? t[j + 1].shape() : shape_of_zero(c);
    const int gap = t[j].weight() - (j + 1 < t.size() ? t[j + 1].weight() : 0);
    CHECK(gap == delta_shapes(below, t[j].shape(), c.level()));
  }
}

TEST_CASE("expand errors") {
  const Profile c({1, 1, 1});
  const auto t = shrink(decompose(parse_rows(kShrinkExample, c)).expanded(), ShrinkMode::AtMost).tight;
  CHECK_THROWS_AS(expand(t, Partition({12}), ShrinkMode::AtMost), PartTooLarge);
  CHECK_THROWS_AS(expand(t, Partition({4}), ShrinkMode::AtMost), NotMultipleOfRank);
  const auto loose = decompose(parse_rows(kShrinkExample, c)).expanded();
  CHECK_THROWS_AS(expand(loose, Partition({3}), ShrinkMode::AtMost), ChainNotTight);
  std::vector<Slice> with_zero{Slice(c, {1, 1, 1}), Slice::zero(c)};
  CHECK_THROWS_AS(shrink(with_zero, ShrinkMode::Exact), ChainNotStrict);
}

TEST_CASE("shrink and expand round trip on random chains") {
  std::mt19937 rng(2024);
  for (const auto& c : {Profile({1, 1, 1}), Profile({2, 1}), Profile({0, 2, 1}), Profile({1, 0, 2}), Profile({3})}) {
    const auto shapes = all_shapes(c.rank(), c.level());
    std::uniform_int_distribution<int> pick_shape(0, static_cast<int>(shapes.size()) - 1);
    std::uniform_int_distribution<int> pick_n(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = pick_n(rng);
      for (auto mode : {ShrinkMode::AtMost, ShrinkMode::Exact}) {
        std::vector<Shape> seq;
        for (int j = 0; j < n; ++j) seq.push_back(shapes[pick_shape(rng)]);
        const auto tight = tight_chain(c, seq, mode);
        CHECK(is_tight(tight, mode));
        std::vector<int> side;
        std::uniform_int_distribution<int> pick_j(1, n);
        std::uniform_int_distribution<int> count(0, 3);
        for (int k = count(rng); k > 0; --k) side.push_back(c.rank() * pick_j(rng));
        std::sort(side.rbegin(), side.rend());
        const auto loose = expand(tight, Partition(side), mode);
        long long w = 0;
        for (const auto& s : loose) w += s.weight();
        if (w > 20) continue;
        const auto back = shrink(loose, mode);
        CHECK(back.tight == tight);
        CHECK(back.side == Partition(side));
      }
    }
  }
}
