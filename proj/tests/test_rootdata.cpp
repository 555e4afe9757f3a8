/*
  Copyright 2026 qschur developers

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rootdata.hpp"

using namespace qschur;

namespace {
ShiftedWeight sw(std::vector<std::int64_t> v) { return ShiftedWeight(std::move(v)); }
}  // namespace

TEST_CASE("Cartan matrices of the classical and exceptional families") {
  const auto g2 = CartanDatum::make('G', 2);
  CHECK(g2.cartan == std::vector<std::vector<int>>{{2, -3}, {-1, 2}});

  const auto a3 = CartanDatum::make('A', 3);
  CHECK(a3.cartan == std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});

  const auto b2 = CartanDatum::make('B', 2);
  CHECK(b2.cartan == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
  const auto c2 = CartanDatum::make('C', 2);
  CHECK(c2.cartan == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});

  const auto b3 = CartanDatum::make('B', 3);
  CHECK(b3.cartan[2][1] == -2);
  CHECK(b3.cartan[1][2] == -1);

  const auto d4 = CartanDatum::make('D', 4);
  CHECK(d4.cartan[3][1] == -1);
  CHECK(d4.cartan[3][2] == 0);

  const auto f4 = CartanDatum::make('F', 4);
  CHECK(f4.cartan[2][1] == -2);
  CHECK(f4.cartan[1][2] == -1);

  const auto e6 = CartanDatum::make('E', 6);
  CHECK(e6.cartan[1][3] == -1);
  CHECK(e6.cartan[0][2] == -1);
  CHECK(e6.cartan[0][1] == 0);

  CHECK_THROWS(CartanDatum::make('B', 1));
  CHECK_THROWS(CartanDatum::make('E', 9));
  CHECK_THROWS(CartanDatum::make('Z', 2));
}

TEST_CASE("label parsing round-trips") {
  for (const char* lbl : {"A1", "A5", "B3", "C4", "D5", "E6", "F4", "G2"}) {
    auto cd = CartanDatum::parse(lbl);
    REQUIRE(cd.has_value());
    CHECK(cd->label() == lbl);
  }
  CHECK_FALSE(CartanDatum::parse("G3").has_value());
  CHECK_FALSE(CartanDatum::parse("").has_value());
  CHECK_FALSE(CartanDatum::parse("A0").has_value());
  CHECK_FALSE(CartanDatum::parse("Q7").has_value());
}

TEST_CASE("reflection in simple coordinates") {
  const auto g2 = CartanDatum::make('G', 2);
  // s_k fixes m_k's sign flip: m_k -> -m_k, and m_j -> m_j - m_k c_{jk}.
  const ShiftedWeight w = sw({1, -2});
  const ShiftedWeight r0 = reflect(g2, w, 0);
  CHECK(r0 == sw({-1, -1}));
  const ShiftedWeight r1 = reflect(g2, w, 1);
  CHECK(r1 == sw({-5, 2}));
  CHECK(reflect(g2, r0, 0) == w);
  CHECK(reflect(g2, r1, 1) == w);
}

TEST_CASE("reflection matches the delta coordinate action for G2") {
  const auto g2 = CartanDatum::make('G', 2);
  // s_1 swaps the first two delta coordinates, s_2 maps (a,b,c) to
  // (-a,-c,-b).
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      const G2Delta d{a, b, -a - b};
      const ShiftedWeight w = g2_pairings(d);
      const G2Delta ds1 = g2_delta(reflect(g2, w, 0));
      CHECK(ds1 == G2Delta{b, a, -a - b});
      const G2Delta ds2 = g2_delta(reflect(g2, w, 1));
      CHECK(ds2 == G2Delta{-a, a + b, -b});
    }
}

TEST_CASE("delta conversions invert each other") {
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) {
      const G2Delta d{a, b, -a - b};
      CHECK(g2_delta(g2_pairings(d)) == d);
    }
  CHECK_THROWS(g2_pairings(G2Delta{1, 1, 1}));
}

TEST_CASE("antidominance and descent signs") {
  CHECK(antidominant(sw({0, 0})));
  CHECK(antidominant(sw({-1, 0})));
  CHECK_FALSE(antidominant(sw({1, -5})));
  CHECK(descent_sign(sw({0, 3}), 0) == DescentSign::Fixed);
  CHECK(descent_sign(sw({-2, 3}), 0) == DescentSign::Up);
  CHECK(descent_sign(sw({2, 3}), 0) == DescentSign::Down);
  CHECK(descent_sign(sw({2, 3}), 1) == DescentSign::Down);
}

TEST_CASE("dominance comparison via exact linear solve") {
  const auto a2 = CartanDatum::make('A', 2);
  // In type A2 the difference (3,0) = 2a_1 + a_2 rows of the Cartan
  // matrix: c = (2,1) >= 0, so (0,0) dominates from below.
  auto cmp = dominance_compare(a2, sw({0, 0}), sw({3, 0}));
  REQUIRE(cmp.has_value());
  CHECK(*cmp == -1);
  auto cmp2 = dominance_compare(a2, sw({3, 0}), sw({0, 0}));
  REQUIRE(cmp2.has_value());
  CHECK(*cmp2 == 1);
  // (1,0) - (0,0) needs c = (2/3, 1/3): not integral, incomparable.
  CHECK_FALSE(dominance_compare(a2, sw({0, 0}), sw({1, 0})).has_value());
  // Mixed signs: (1,-2) = a_1 - a_2 difference direction.
  CHECK_FALSE(dominance_compare(a2, sw({0, 0}), sw({4, -5})).has_value());
  // Equal weights compare as 0.
  auto eq = dominance_compare(a2, sw({2, 2}), sw({2, 2}));
  REQUIRE(eq.has_value());
  CHECK(*eq == 0);

  const auto g2 = CartanDatum::make('G', 2);
  // G2's Cartan matrix is unimodular, so integral solutions always
  // exist; comparability is then decided by the sign pattern alone.
  auto g = dominance_compare(g2, sw({-1, -1}), sw({1, 0}));
  REQUIRE(g.has_value());
  CHECK(*g == -1);
}

TEST_CASE("weight parsing and printing") {
  const auto g2 = CartanDatum::make('G', 2);
  auto w = parse_weight(g2, "(0,1,-1)");
  REQUIRE(w.has_value());
  CHECK(g2_delta(*w) == G2Delta{0, 1, -1});
  CHECK(weight_str(g2, *w) == "(0,1,-1)");
  CHECK_FALSE(parse_weight(g2, "(1,1,1)").has_value());  // not zero-sum

  const auto a2 = CartanDatum::make('A', 2);
  auto v = parse_weight(a2, "(-1,2)");
  REQUIRE(v.has_value());
  CHECK(*v == sw({-1, 2}));
  CHECK(weight_str(a2, *v) == "(-1,2)");
  CHECK_FALSE(parse_weight(a2, "(1,2,3)").has_value());
}
