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

#include "rootdata.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qschur {

/*
  A finite Weyl group, fully enumerated.  Elements are identified with
  their action on a fixed regular antidominant tracking weight: id 0 is
  the identity and the id of w is the position of tracking*w in discovery
  order.  Generator indices k are 0-based; rendered words use 1-based
  labels ("s1*s2*s1", identity "e").

  Subsets J of simple reflections are bitmasks (bit k = generator k).
*/
class WeylGroup {
 public:
  // Enumerates the group; throws if the order would exceed `cap`.
  static std::shared_ptr<const WeylGroup> generate(const CartanDatum& cd,
                                                   std::size_t cap = 51840);

  const CartanDatum& datum() const { return cd_; }
  int rank() const { return cd_.rank; }
  std::size_t size() const { return length_.size(); }

  int identity() const { return 0; }
  int simple(int k) const { return rmul_[0][static_cast<std::size_t>(k)]; }
  unsigned length(int w) const { return length_[static_cast<std::size_t>(w)]; }
  int longest() const { return longest_; }

  int rmul(int w, int k) const { return rmul_[static_cast<std::size_t>(w)][static_cast<std::size_t>(k)]; }
  int lmul(int k, int w) const { return lmul_[static_cast<std::size_t>(w)][static_cast<std::size_t>(k)]; }
  int mul(int x, int y) const;  // walks the reduced word of y
  int inv(int w) const { return inv_[static_cast<std::size_t>(w)]; }

  std::uint32_t rdesc(int w) const { return rdesc_[static_cast<std::size_t>(w)]; }
  std::uint32_t ldesc(int w) const { return ldesc_[static_cast<std::size_t>(w)]; }

  // ShortLex-least reduced word (0-based letters).
  const std::vector<int>& word(int w) const { return word_[static_cast<std::size_t>(w)]; }
  std::string word_str(int w) const;
  std::optional<int> parse_word(std::string_view text) const;

  // ShortLex order on elements: by length, then lexicographic on the
  // stored reduced word.  Used wherever a transversal needs a
  // deterministic ordering.
  bool shortlex_less(int x, int y) const;

  // Bruhat order (precomputed on first use; groups are desk-scale here).
  bool bruhat_leq(int x, int y) const;
  // All covering pairs (x, y) with x < y and l(y) = l(x) + 1.
  std::vector<std::pair<int, int>> bruhat_covers() const;

  // Right action on shifted weights: w acts by its reduced word.
  ShiftedWeight act(const ShiftedWeight& i, int w) const;

  // Standard parabolic W_J, listed in ShortLex order.
  std::vector<int> parabolic_elements(std::uint32_t J) const;
  int parabolic_longest(std::uint32_t J) const;
  // Minimal-length representatives of the cosets W_J \ W (no left
  // descent in J), ShortLex order.
  std::vector<int> min_coset_reps(std::uint32_t J) const;
  // Minimal-length representatives of double cosets W_J1 \ W / W_J2 (no
  // left descent in J1, no right descent in J2), ShortLex order.
  std::vector<int> double_coset_min_reps(std::uint32_t J1, std::uint32_t J2) const;

  struct DoubleCoset {
    int gmin = 0;               // unique minimal-length element
    int gplus = 0;              // unique maximal-length element
    std::vector<int> elements;  // whole coset, ShortLex order
  };
  DoubleCoset double_coset(std::uint32_t J1, int g, std::uint32_t J2) const;

 private:
  WeylGroup() = default;
  void ensure_bruhat() const;

  CartanDatum cd_;
  std::vector<unsigned> length_;
  std::vector<std::vector<int>> rmul_;  // [w][k] -> w s_k
  std::vector<std::vector<int>> lmul_;  // [w][k] -> s_k w
  std::vector<int> inv_;
  std::vector<std::uint32_t> rdesc_, ldesc_;
  std::vector<std::vector<int>> word_;
  int longest_ = 0;
  // Row-major bit matrix, filled lazily: bruhat_[x * size + y] = (x <= y).
  mutable std::vector<bool> bruhat_;
};

}  // namespace qschur
