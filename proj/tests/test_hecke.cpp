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

#include "hecke.hpp"
#include "oracles.hpp"

using namespace qschur;

namespace {

HeckeAlgebra make(const char* lbl) {
  return HeckeAlgebra(WeylGroup::generate(CartanDatum::parse(lbl).value()));
}

Laurent qp(std::int64_t e) { return Laurent::q_power(e); }

}  // namespace

TEST_CASE("quadratic relation in every rank-2 type") {
  for (const char* lbl : {"A2", "B2", "G2"}) {
    auto H = make(lbl);
    for (int k = 0; k < 2; ++k) {
      // (H_k - q^-1)(H_k + q) = 0, i.e. H_k^2 = (q^-1 - q) H_k + 1.
      const HeckeElement hk = HeckeElement::basis(H.group().simple(k));
      const HeckeElement sq = H.mul(hk, hk);
      HeckeElement expect = hk * (qp(-1) - qp(1));
      expect += HeckeElement::basis(H.group().identity());
      CHECK(sq == expect);
    }
  }
}

TEST_CASE("braid relations through basis multiplication") {
  auto H = make("G2");
  const auto& W = H.group();
  const HeckeElement h1 = HeckeElement::basis(W.simple(0));
  const HeckeElement h2 = HeckeElement::basis(W.simple(1));
  // (H_1 H_2)^3 = (H_2 H_1)^3 in type G2.
  HeckeElement a = h1, b = h2;
  for (int i = 0; i < 2; ++i) {
    a = H.mul(a, h2);
    a = H.mul(a, h1);
    b = H.mul(b, h1);
    b = H.mul(b, h2);
  }
  a = H.mul(a, h2);
  b = H.mul(b, h1);
  CHECK(a == b);
  // Both sides are the standard basis element of the longest element.
  CHECK(a == HeckeElement::basis(W.longest()));
}

TEST_CASE("products respect length additivity") {
  auto H = make("A3");
  const auto& W = H.group();
  for (int x = 0; x < static_cast<int>(W.size()); ++x)
    for (int y = 0; y < static_cast<int>(W.size()); ++y) {
      if (W.length(W.mul(x, y)) != W.length(x) + W.length(y)) continue;
      CHECK(H.mul(HeckeElement::basis(x), HeckeElement::basis(y)) ==
            HeckeElement::basis(W.mul(x, y)));
    }
}

TEST_CASE("bar is an involution and fixes canonical basis elements") {
  for (const char* lbl : {"B2", "G2"}) {
    auto H = make(lbl);
    const auto& W = H.group();
    for (int w = 0; w < static_cast<int>(W.size()); ++w) {
      const HeckeElement hw = HeckeElement::basis(w);
      CHECK(H.bar(H.bar(hw)) == hw);
      CHECK(H.bar(H.kl_elt(w)) == H.kl_elt(w));
    }
  }
}

TEST_CASE("bar is multiplicative on a sample") {
  auto H = make("B2");
  const auto& W = H.group();
  for (int x = 0; x < static_cast<int>(W.size()); ++x)
    for (int y = 0; y < static_cast<int>(W.size()); ++y) {
      const HeckeElement p =
          H.mul(HeckeElement::basis(x), HeckeElement::basis(y));
      CHECK(H.bar(p) ==
            H.mul(H.bar(HeckeElement::basis(x)), H.bar(HeckeElement::basis(y))));
    }
}

TEST_CASE("canonical basis against the bar-invariance linear solve") {
  for (const char* lbl : {"B2", "G2"}) {
    auto H = make(lbl);
    const auto& W = H.group();
    for (int w = 0; w < static_cast<int>(W.size()); ++w) {
      const auto row = oracle::kl_row(W, w);
      const HeckeElement& cw = H.kl_elt(w);
      CHECK(cw.term_count() == row.size());
      for (const auto& [y, p] : row) CHECK(H.kl_p(y, w) == p);
    }
  }
}

TEST_CASE("all G2 KL polynomials are powers of q") {
  auto H = make("G2");
  const auto& W = H.group();
  int pairs = 0;
  int comparable = 0;
  for (int w = 0; w < 12; ++w)
    for (int y = 0; y < 12; ++y) {
      ++pairs;
      if (!W.bruhat_leq(y, w)) {
        CHECK(H.kl_p(y, w).is_zero());
        continue;
      }
      ++comparable;
      const auto gap = static_cast<std::int64_t>(W.length(w) - W.length(y));
      CHECK(H.kl_p(y, w) == qp(gap));
    }
  CHECK(pairs == 144);
  CHECK(comparable == 73);
}

TEST_CASE("A3 has a KL polynomial with two terms") {
  auto H = make("A3");
  const auto& W = H.group();
  const int y = W.parse_word("s2").value();
  const int w = W.parse_word("s2*s1*s3*s2").value();
  CHECK(H.kl_p(y, w) == qp(1) + qp(3));
  // Classical normalization: P_{y,w} = 1 + q.
  CHECK(H.classical_P(y, w) == Laurent::one() + qp(1));
  // Against the independent solve.
  const auto row = oracle::kl_row(W, w);
  CHECK(row.at(y) == qp(1) + qp(3));
}

TEST_CASE("classical P is 1 for all G2 pairs") {
  auto H = make("G2");
  const auto& W = H.group();
  for (int w = 0; w < 12; ++w)
    for (int y = 0; y < 12; ++y)
      if (W.bruhat_leq(y, w)) CHECK(H.classical_P(y, w).is_one());
}

TEST_CASE("q-symmetrizer absorbs its generators") {
  for (const char* lbl : {"G2", "A3"}) {
    auto H = make(lbl);
    const auto& W = H.group();
    for (std::uint32_t J = 0; J < (1u << W.rank()); ++J) {
      const HeckeElement xj = H.q_symmetrizer(J);
      for (int k = 0; k < W.rank(); ++k) {
        if (!(J >> k & 1u)) continue;
        CHECK(H.rmul_gen(xj, k) == xj * qp(-1));
        CHECK(H.lmul_gen(k, xj) == xj * qp(-1));
      }
      // x_J equals the canonical basis element of the longest element
      // of W_J.
      CHECK(xj == H.kl_elt(W.parabolic_longest(J)));
    }
  }
}

TEST_CASE("subset sums scale basis elements by q^-length") {
  auto H = make("B2");
  const auto& W = H.group();
  const auto all = W.parabolic_elements(3);
  const HeckeElement hw = H.subset_sum(all);
  for (int w : all) CHECK(hw.coeff(w) == qp(-static_cast<std::int64_t>(W.length(w))));
  CHECK(H.q_symmetrizer(3) == hw * qp(static_cast<std::int64_t>(W.length(W.longest()))));
}

TEST_CASE("parabolic canonical basis elements live in the q-symmetrizer ideal") {
  auto H = make("G2");
  const auto& W = H.group();
  for (std::uint32_t J : {1u, 2u}) {
    for (int w : W.min_coset_reps(J)) {
      const HeckeElement c = H.parabolic_kl_elt(J, w);
      CHECK(H.bar(c) == c);
      const auto coords = H.qsym_coords(J, c);
      REQUIRE(coords.has_value());
      // Unit leading coordinate at w, strictly positive powers below.
      for (const auto& [y, a] : *coords) {
        if (y == w) {
          CHECK(a.is_one());
        } else {
          CHECK(a.in_qZq());
          CHECK(W.bruhat_leq(y, w));
        }
      }
    }
    CHECK_THROWS(H.parabolic_kl_elt(J, W.parabolic_longest(J)));
  }
}

TEST_CASE("hand-expanded parabolic element in type G2") {
  auto H = make("G2");
  const auto& W = H.group();
  const std::uint32_t J = 1u << 1;  // W_J = {e, s2}
  const int s1 = W.simple(0);
  const HeckeElement c = H.parabolic_kl_elt(J, s1);
  // x_J (H_{s1} + q) written out in the standard basis.
  HeckeElement expect;
  expect.add_term(W.parse_word("s2*s1").value(), Laurent::one());
  expect.add_term(s1, qp(1));
  expect.add_term(W.simple(1), qp(1));
  expect.add_term(W.identity(), qp(2));
  CHECK(c == expect);
}

TEST_CASE("qsym_coords rejects elements outside the ideal") {
  auto H = make("G2");
  const auto& W = H.group();
  CHECK_FALSE(H.qsym_coords(1u << 1, HeckeElement::basis(W.simple(0))).has_value());
  CHECK(H.qsym_coords(1u << 1, HeckeElement()).has_value());
}
