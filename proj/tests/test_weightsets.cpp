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

#include <algorithm>
#include <set>

#include "weightsets.hpp"

using namespace qschur;

namespace {

std::shared_ptr<const WeylGroup> g2() {
  return WeylGroup::generate(CartanDatum::parse("G2").value());
}

WeightSet xbar(int n) { return WeightSet::close_under_W(g2(), g2_xbar_seeds(n)); }

ShiftedWeight sw(std::vector<std::int64_t> v) { return ShiftedWeight(std::move(v)); }

std::multiset<long> abs_multiset(const ShiftedWeight& w) {
  const G2Delta d = g2_delta(w);
  return {std::labs(d.a), std::labs(d.b), std::labs(d.c)};
}

}  // namespace

TEST_CASE("G2 weight set cardinalities follow 6n^2+6n+1") {
  const int expect[] = {13, 37, 73, 121, 181};
  for (int n = 1; n <= 5; ++n) {
    const WeightSet ws = xbar(n);
    CHECK(ws.size() == static_cast<std::size_t>(expect[n - 1]));
    CHECK(ws.size() == static_cast<std::size_t>(6 * n * n + 6 * n + 1));
  }
}

TEST_CASE("G2 orbit census by stabilizer type") {
  for (int n = 1; n <= 3; ++n) {
    const WeightSet ws = xbar(n);
    int regular = 0, wall1 = 0, wall2 = 0, center = 0;
    for (std::size_t c = 0; c < ws.class_count(); ++c) {
      const auto& cls = ws.linkage_class(static_cast<int>(c));
      switch (cls.J) {
        case 0u: ++regular; CHECK(cls.members.size() == 12); break;
        case 1u: ++wall1; CHECK(cls.members.size() == 6); break;
        case 2u: ++wall2; CHECK(cls.members.size() == 6); break;
        case 3u: ++center; CHECK(cls.members.size() == 1); break;
        default: FAIL("unexpected stabilizer mask");
      }
    }
    CHECK(regular == n * (n - 1) / 2);
    CHECK(wall1 == n);
    CHECK(wall2 == n);
    CHECK(center == 1);
  }
  CHECK_FALSE(xbar(1).has_regular_class());
  CHECK(xbar(2).has_regular_class());
}

TEST_CASE("classes are sorted and internally coherent") {
  const WeightSet ws = xbar(2);
  const auto& W = ws.group();
  for (std::size_t c = 0; c < ws.class_count(); ++c) {
    const auto& cls = ws.linkage_class(static_cast<int>(c));
    if (c + 1 < ws.class_count())
      CHECK(cls.antidom < ws.linkage_class(static_cast<int>(c) + 1).antidom);
    CHECK(antidominant(cls.antidom));
    CHECK(cls.members.size() == cls.coset_reps.size());
    for (std::size_t t = 0; t < cls.members.size(); ++t) {
      const int i = cls.members[t];
      CHECK(ws.class_of(i) == static_cast<int>(c));
      CHECK(ws.pos_in_class(i) == static_cast<int>(t));
      CHECK(ws.weight(i) == W.act(cls.antidom, cls.coset_reps[t]));
    }
    CHECK(ws.weight(ws.antidom_index(static_cast<int>(c))) == cls.antidom);
  }
}

TEST_CASE("generator action table matches direct reflection") {
  const WeightSet ws = xbar(2);
  const auto& cd = ws.group().datum();
  for (int i = 0; i < static_cast<int>(ws.size()); ++i)
    for (int k = 0; k < 2; ++k) {
      CHECK(ws.weight(ws.act_gen(i, k)) == reflect(cd, ws.weight(i), k));
      CHECK(ws.act_gen(ws.act_gen(i, k), k) == i);
    }
}

TEST_CASE("linkage equals equality of absolute-value multisets") {
  const WeightSet ws = xbar(2);
  for (int i = 0; i < static_cast<int>(ws.size()); ++i)
    for (int j = 0; j < static_cast<int>(ws.size()); ++j) {
      const bool linked = ws.class_of(i) == ws.class_of(j);
      CHECK(linked == (abs_multiset(ws.weight(i)) == abs_multiset(ws.weight(j))));
    }
}

TEST_CASE("antidominant representative walk") {
  const auto cd = CartanDatum::parse("G2").value();
  const WeightSet ws = xbar(3);
  for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
    const ShiftedWeight lo = antidominant_rep(cd, ws.weight(i));
    CHECK(antidominant(lo));
    CHECK(lo == ws.linkage_class(ws.class_of(i)).antidom);
  }
}

TEST_CASE("closure of a non-invariant seed is the full orbit") {
  auto W = g2();
  // (1,-2) is regular: its delta coordinates (2,1,-3) have trivial
  // stabilizer, so the closure is one free orbit.
  const ShiftedWeight seed = sw({1, -2});
  const WeightSet ws = WeightSet::close_under_W(W, {seed});
  CHECK(ws.size() == 12);
  CHECK(ws.class_count() == 1);
  CHECK(ws.index_of(seed).has_value());
  for (int i = 0; i < static_cast<int>(ws.size()); ++i)
    for (int k = 0; k < 2; ++k)
      CHECK(ws.act_gen(i, k) >= 0);

  // A wall seed closes to a six-element orbit.
  const WeightSet wall = WeightSet::close_under_W(W, {sw({2, -1})});
  CHECK(wall.size() == 6);
  CHECK(wall.class_count() == 1);
}

TEST_CASE("Xi cardinalities follow 3n^4+6n^3+6n^2+3n+1") {
  const long expect[] = {19, 127, 469};
  for (int n = 1; n <= 3; ++n) {
    const WeightSet ws = xbar(n);
    const XiSet xi(ws);
    CHECK(xi.size() == static_cast<std::size_t>(expect[n - 1]));
    CHECK(xi.size() ==
          static_cast<std::size_t>(3L * n * n * n * n + 6L * n * n * n +
                                   6L * n * n + 3L * n + 1));
  }
}

TEST_CASE("triples biject with the transversal of weight pairs") {
  for (int n = 1; n <= 2; ++n) {
    const WeightSet ws = xbar(n);
    const XiSet xi(ws);

    // Enumerate the transversal directly from the descent conditions.
    std::set<std::pair<int, int>> pairs;
    for (int j = 0; j < static_cast<int>(ws.size()); ++j) {
      if (j != ws.antidom_index(ws.class_of(j))) continue;
      for (int i = 0; i < static_cast<int>(ws.size()); ++i)
        if (xi.in_transversal(i, j)) pairs.emplace(i, j);
    }
    CHECK(pairs.size() == xi.size());

    // Round trip through pair_of / xi_of_pair hits each pair once.
    std::set<std::pair<int, int>> seen;
    for (int x = 0; x < static_cast<int>(xi.size()); ++x) {
      const auto [i, j] = xi.pair_of(x);
      CHECK(xi.in_transversal(i, j));
      CHECK(seen.emplace(i, j).second);
      const auto back = xi.xi_of_pair(i, j);
      REQUIRE(back.has_value());
      CHECK(*back == x);
    }
    CHECK(seen == pairs);
  }
}

TEST_CASE("xi_of_pair normalizes arbitrary first components") {
  const WeightSet ws = xbar(2);
  const XiSet xi(ws);
  // Any (i, antidominant j) lands on the triple of i's double coset.
  for (int x = 0; x < static_cast<int>(xi.size()); x += 7) {
    const auto& t = xi.triple(x);
    const int j = ws.antidom_index(t.nu);
    for (int w : xi.coset(x).elements) {
      if ((ws.group().ldesc(w) & ws.linkage_class(t.gamma).J) != 0) continue;
      const int i = ws.act(ws.antidom_index(t.gamma), w);
      const auto back = xi.xi_of_pair(i, j);
      REQUIRE(back.has_value());
      CHECK(*back == x);
    }
  }
  // Non-antidominant second component is rejected.
  for (std::size_t c = 0; c < ws.class_count(); ++c) {
    if (ws.linkage_class(static_cast<int>(c)).J != 0) continue;
    const int moved = ws.linkage_class(static_cast<int>(c)).members.back();
    CHECK_FALSE(xi.xi_of_pair(0, moved).has_value());
  }
}

TEST_CASE("triple ordering is by class pair then ShortLex") {
  const WeightSet ws = xbar(2);
  const XiSet xi(ws);
  for (int x = 0; x + 1 < static_cast<int>(xi.size()); ++x) {
    const auto& a = xi.triple(x);
    const auto& b = xi.triple(x + 1);
    const auto ka = std::make_pair(a.gamma, a.nu);
    const auto kb = std::make_pair(b.gamma, b.nu);
    CHECK(ka <= kb);
    if (ka == kb) CHECK(ws.group().shortlex_less(a.g, b.g));
  }
}

TEST_CASE("exponent identity between def-dA and orbit dimensions") {
  auto check_set = [](const WeightSet& ws) {
    const XiSet xi(ws);
    for (int x = 0; x < static_cast<int>(xi.size()); ++x) {
      const auto& t = xi.triple(x);
      CHECK(xi.d_exponent(x) ==
            xi.orbit_dim(x) - xi.orbit_dim(xi.diagonal(t.gamma)));
    }
  };
  check_set(xbar(1));
  check_set(xbar(2));
  auto b2 = WeylGroup::generate(CartanDatum::parse("B2").value());
  check_set(WeightSet::close_under_W(
      b2, {sw({-1, -1}), sw({0, -1}), sw({-1, 0}), sw({0, 0})}));
}

TEST_CASE("double cosets of a triple cover the class pair consistently") {
  const WeightSet ws = xbar(2);
  const XiSet xi(ws);
  const auto& W = ws.group();
  for (int x = 0; x < static_cast<int>(xi.size()); ++x) {
    const auto& t = xi.triple(x);
    CHECK(xi.coset(x).gmin == t.g);
    // Row representatives carry no left descent in J_gamma and traverse
    // distinct weights.
    std::set<int> hit;
    for (int w : xi.row_reps(x)) {
      CHECK((W.ldesc(w) & ws.linkage_class(t.gamma).J) == 0);
      CHECK(hit.insert(ws.act(ws.antidom_index(t.gamma), w)).second);
    }
  }
  // Blocks tile the triple list.
  std::size_t total = 0;
  for (int gamma = 0; gamma < static_cast<int>(ws.class_count()); ++gamma)
    for (int nu = 0; nu < static_cast<int>(ws.class_count()); ++nu)
      total += xi.block(gamma, nu).size();
  CHECK(total == xi.size());
}

TEST_CASE("rank-2 analogue weight sets for other types") {
  auto b2 = WeylGroup::generate(CartanDatum::parse("B2").value());
  const WeightSet wb = WeightSet::close_under_W(
      b2, {sw({-1, -1}), sw({0, -1}), sw({-1, 0}), sw({0, 0})});
  CHECK(wb.size() == 8 + 4 + 4 + 1);
  CHECK(wb.class_count() == 4);
  CHECK(wb.has_regular_class());

  auto a2 = WeylGroup::generate(CartanDatum::parse("A2").value());
  const WeightSet wa = WeightSet::close_under_W(
      a2, {sw({-1, -1}), sw({0, -1}), sw({-1, 0}), sw({0, 0})});
  CHECK(wa.size() == 6 + 3 + 3 + 1);
  CHECK(wa.class_count() == 4);
}
