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

#ifndef QSCHUR_HECKE_HPP
#define QSCHUR_HECKE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "weylgroup.hpp"

namespace qschur {

// Element of the Hecke algebra in the standard basis {H_w}. Keys are
// group element indices, values are nonzero Laurent coefficients.
class HeckeElement {
 public:
  HeckeElement() = default;
  static HeckeElement basis(int w) {
    HeckeElement h;
    h.terms_[w] = Laurent::one();
    return h;
  }

  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(int w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Laurent::zero() : it->second;
  }
  const std::map<int, Laurent>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(int w, const Laurent& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const Laurent& c);
  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement operator*(const Laurent& c) const;
  bool operator==(const HeckeElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }

 private:
  std::map<int, Laurent> terms_;
};

// The Hecke algebra over Z[q,q^-1] with quadratic relation
// (H_k - q^-1)(H_k + q) = 0, attached to an enumerated Weyl group.
// Kazhdan-Lusztig elements and bar images are memoized; instances are
// not safe for concurrent mutation.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const WeylGroup> W);

  const WeylGroup& group() const { return *W_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return W_; }

  // h * H_k and H_k * h for a single generator (0-based k).
  HeckeElement rmul_gen(const HeckeElement& h, int k) const;
  HeckeElement lmul_gen(int k, const HeckeElement& h) const;
  // h * H_w along a reduced word of w.
  HeckeElement rmul_basis(const HeckeElement& h, int w) const;
  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;

  // Bar involution: q -> q^-1, H_w -> (H_{w^-1})^-1.
  HeckeElement bar(const HeckeElement& h) const;

  // Sum over a subset of W of q^{-l(w)} H_w.
  HeckeElement subset_sum(const std::vector<int>& ws) const;
  // x_J = sum over W_J of q^{l(w0J)-l(u)} H_u, the q-symmetrizer.
  HeckeElement q_symmetrizer(std::uint32_t J) const;

  // Canonical basis element C_w and the polynomials p_{y,w} with
  // C_w = H_w + sum_{y<w} p_{y,w} H_y, p_{y,w} in qZ[q].
  const HeckeElement& kl_elt(int w) const;
  Laurent kl_p(int y, int w) const;
  // Coefficient of q^1 in p_{y,w}.
  long mu(int y, int w) const;
  // Classical normalization: p_{y,w} = q^{l(w)-l(y)} P_{y,w}(q^-2),
  // returned as a polynomial in the classical variable.
  Laurent classical_P(int y, int w) const;

  // Canonical basis element of the parabolic module x_J H, indexed by a
  // minimal coset representative w (no left descent in J). Equals
  // kl_elt(w0J * w).
  HeckeElement parabolic_kl_elt(std::uint32_t J, int w) const;

  // If h lies in the right ideal x_J H, return its coordinates over the
  // basis {x_J H_y : y minimal in W_J y}; otherwise nullopt.
  std::optional<std::map<int, Laurent>> qsym_coords(std::uint32_t J,
                                                    const HeckeElement& h) const;

  std::string str(const HeckeElement& h) const;

 private:
  std::shared_ptr<const WeylGroup> W_;
  mutable std::vector<HeckeElement> cw_;
  mutable std::vector<char> cw_done_;
  mutable std::vector<HeckeElement> barh_;
  mutable std::vector<char> barh_done_;

  const HeckeElement& bar_basis(int w) const;
};

}  // namespace qschur

#endif
