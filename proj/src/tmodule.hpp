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

#ifndef QSCHUR_TMODULE_HPP
#define QSCHUR_TMODULE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke.hpp"
#include "weightsets.hpp"

namespace qschur {

// Vector in the tensor-space module: a Laurent combination of basis
// vectors v_i indexed by global weight indices of a WeightSet.
class TElement {
 public:
  TElement() = default;
  static TElement basis(int i) {
    TElement v;
    v.terms_[i] = Laurent::one();
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(int i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Laurent::zero() : it->second;
  }
  const std::map<int, Laurent>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(int i, const Laurent& c);
  TElement& operator+=(const TElement& o);
  TElement& operator-=(const TElement& o);
  TElement& operator*=(const Laurent& c);
  TElement operator+(const TElement& o) const;
  TElement operator-(const TElement& o) const;
  TElement operator*(const Laurent& c) const;
  bool operator==(const TElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const TElement& o) const { return !(*this == o); }

 private:
  std::map<int, Laurent> terms_;
};

// The right Hecke-module structure on the free module over a W-invariant
// weight set, with its block isomorphisms onto the q-permutation modules
// x_gamma H and the induced bar involution and canonical basis.
class TModule {
 public:
  TModule(const WeightSet& ws, const HeckeAlgebra& H);

  const WeightSet& weights() const { return *ws_; }
  const HeckeAlgebra& hecke() const { return *H_; }

  // Right action of the generator H_k, a basis element H_w, and a
  // general algebra element.
  TElement act_gen(const TElement& v, int k) const;
  TElement act_w(const TElement& v, int w) const;
  TElement act(const TElement& v, const HeckeElement& h) const;

  // Block isomorphism v_{antidom(gamma) * y} -> x_gamma H_y. The input
  // must be supported on class gamma.
  HeckeElement omega(int gamma, const TElement& v) const;
  // Inverse; the input must lie in the ideal x_gamma H.
  TElement omega_inv(int gamma, const HeckeElement& h) const;

  // Bar involution, compatible blockwise with the Hecke bar under omega.
  TElement bar(const TElement& v) const;

  // Canonical basis vector attached to weight i (memoized).
  const TElement& canonical(int i) const;
  // Coordinates of v over the canonical basis; throws if the
  // triangular elimination leaves a remainder, which cannot happen for
  // well-formed inputs.
  std::map<int, Laurent> canonical_coords(const TElement& v) const;

  std::string str(const TElement& v) const;

 private:
  const WeightSet* ws_;
  const HeckeAlgebra* H_;
  std::vector<std::map<int, int>> rep_pos_;  // class -> (group elt -> position)
  mutable std::vector<TElement> can_;
  mutable std::vector<char> can_done_;
};

}  // namespace qschur

#endif
