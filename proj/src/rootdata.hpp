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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qschur {

/*
  Cartan datum of a finite Weyl group, hard-coded in Bourbaki numbering.
  cartan[j][k] = pairing of simple root alpha_k against coroot alpha_j-vee,
  so column k is the simple root alpha_k written in coroot-pairing
  coordinates.  Indices are 0-based internally; user-facing labels are
  1-based (s1..sd).
*/
struct CartanDatum {
  char family = 'A';  // 'A'..'G'
  int rank = 1;
  std::vector<std::vector<int>> cartan;

  int d() const { return rank; }
  std::string label() const { return std::string(1, family) + std::to_string(rank); }

  // "A3", "B2", "G2", ... with the rank bounds of each family enforced.
  static CartanDatum make(char family, int rank);
  static std::optional<CartanDatum> parse(std::string_view label);
};

/*
  A shifted weight in canonical internal coordinates: the vector of coroot
  pairings m_k.  This representation makes reflection, dominance tests and
  stabilizer detection uniform across all types.
*/
struct ShiftedWeight {
  std::vector<std::int64_t> m;

  ShiftedWeight() = default;
  explicit ShiftedWeight(std::vector<std::int64_t> v) : m(std::move(v)) {}

  bool operator==(const ShiftedWeight& o) const { return m == o.m; }
  bool operator!=(const ShiftedWeight& o) const { return !(*this == o); }
  bool operator<(const ShiftedWeight& o) const { return m < o.m; }  // lex

  std::string str() const;  // "(m1,m2,...)"
};

enum class DescentSign { Fixed, Up, Down };

// Right action of the simple reflection s_k (0-based k): subtracts
// m_k times the k-th simple root.
ShiftedWeight reflect(const CartanDatum& cd, const ShiftedWeight& w, int k);

// All coroot pairings <= 0.
bool antidominant(const ShiftedWeight& w);

// How w compares with w*s_k in the dominance order: Fixed when m_k = 0,
// Up when m_k < 0 (w*s_k is strictly higher), Down when m_k > 0.
DescentSign descent_sign(const ShiftedWeight& w, int k);

// Dominance order: returns -1 when a < b, 0 when equal, +1 when a > b,
// nullopt when incomparable (difference not a one-signed integral
// combination of simple roots).  Exact rational solve against the Cartan
// matrix.
std::optional<int> dominance_compare(const CartanDatum& cd,
                                     const ShiftedWeight& a,
                                     const ShiftedWeight& b);

/*
  Type-G2 weights are naturally written in three coordinates (a,b,c) with
  a+b+c = 0: the first simple root reflects (a,b,c) -> (b,a,c) and the
  second (a,b,c) -> (-a,-c,-b).  Conversions to and from the canonical
  pairing coordinates: m1 = a - b, m2 = -a.
*/
struct G2Delta {
  std::int64_t a = 0, b = 0, c = 0;

  bool operator==(const G2Delta& o) const {
    return a == o.a && b == o.b && c == o.c;
  }
  std::string str() const;  // "(a,b,c)"
};

ShiftedWeight g2_pairings(const G2Delta& d);
G2Delta g2_delta(const ShiftedWeight& w);

// Parses "(a,b,c)" into delta coordinates or "(m1,m2,...)"/"m1,m2,..."
// into pairing coordinates; for G2, three entries mean delta form (their
// sum must vanish) and two entries mean pairing form.
std::optional<ShiftedWeight> parse_weight(const CartanDatum& cd,
                                          std::string_view text);

// Renders a weight for display: delta form for G2, pairing form otherwise.
std::string weight_str(const CartanDatum& cd, const ShiftedWeight& w);

}  // namespace qschur
