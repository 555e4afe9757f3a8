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

#ifndef QSCHUR_SCHUR_HPP
#define QSCHUR_SCHUR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hecke.hpp"
#include "laurent.hpp"
#include "ratmat.hpp"
#include "tmodule.hpp"
#include "weightsets.hpp"
#include "weylgroup.hpp"

namespace qschur {

// An endomorphism of the permutation-style module, stored as a dense
// matrix of Laurent polynomials. Column j is the image of the j-th basis
// vector; rows and columns are indexed by global weight indices.
class SchurElement {
 public:
  SchurElement() = default;
  explicit SchurElement(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t dim() const { return n_; }
  bool is_zero() const;

  const Laurent& entry(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * n_ + static_cast<std::size_t>(c)];
  }
  void set_entry(int r, int c, const Laurent& v) {
    a_[static_cast<std::size_t>(r) * n_ + static_cast<std::size_t>(c)] = v;
  }
  void add_entry(int r, int c, const Laurent& v) {
    a_[static_cast<std::size_t>(r) * n_ + static_cast<std::size_t>(c)] += v;
  }

  SchurElement& operator+=(const SchurElement& o);
  SchurElement& operator-=(const SchurElement& o);
  SchurElement& operator*=(const Laurent& c);
  SchurElement operator+(const SchurElement& o) const;
  SchurElement operator-(const SchurElement& o) const;
  SchurElement operator*(const Laurent& c) const;
  bool operator==(const SchurElement& o) const {
    return n_ == o.n_ && a_ == o.a_;
  }
  bool operator!=(const SchurElement& o) const { return !(*this == o); }

  // Matrix product: (this * o) acts by o first, then this.
  SchurElement mul(const SchurElement& o) const;

 private:
  std::size_t n_ = 0;
  std::vector<Laurent> a_;
};

// One specialization of the double centralizer check at a rational
// sample point.
struct DualitySample {
  mpq_class q;
  bool commutes = false;        // every generator matrix commutes with
                                // every standard basis matrix
  std::size_t hecke_rank = 0;   // rank of the span of the H-action matrices
  std::size_t centralizer_dim = 0;  // dimension of the centralizer of the
                                    // algebra image inside End(T)
  bool equals_span = false;     // centralizer == span of H-action matrices
  bool faithful = false;        // hecke_rank == |W|
  bool ok = false;
};

struct DualityReport {
  bool has_regular = false;
  bool refused = false;
  std::string message;
  std::vector<DualitySample> samples;
  bool pass = false;
};

struct PositivityReport {
  std::size_t products_checked = 0;
  std::size_t actions_checked = 0;
  std::size_t violations = 0;
  std::vector<std::string> failures;  // first few, for diagnostics
  bool pass = false;
};

struct BarCompatReport {
  int checked = 0;
  int mismatches = 0;
  bool pass = false;
};

// The q-Schur algebra attached to a W-invariant weight set: the
// endomorphism algebra of the module T over the Hecke algebra, with its
// standard and canonical bases indexed by the triple set.
class SchurContext {
 public:
  explicit SchurContext(WeightSet ws);
  SchurContext(const SchurContext&) = delete;
  SchurContext& operator=(const SchurContext&) = delete;

  const WeylGroup& group() const { return *W_; }
  const WeightSet& weights() const { return ws_; }
  const HeckeAlgebra& hecke() const { return H_; }
  const XiSet& xi() const { return xi_; }
  const TModule& tmodule() const { return T_; }
  std::size_t dim() const { return xi_.size(); }

  // Normalized homomorphism attached to triple x: the column at the
  // antidominant element of class nu collects the coset members above g
  // with coefficient q^{l(g)-l(w)}; the other columns of the block follow
  // by H-linearity.
  const SchurElement& eta(int x) const;
  // The same map rescaled by q^{l(w0^nu)-l(w0^gamma)-l(g)}.
  SchurElement phi(int x) const;
  // Standard basis element [x]: eta rescaled by
  // q^{l(g+)-l(w0^gamma)-l(g)}.
  const SchurElement& std_elt(int x) const;
  // Canonical basis element {x}: the bar-invariant element equal to [x]
  // plus Kazhdan-Lusztig corrections from lower triples in the block.
  const SchurElement& canonical(int x) const;
  // Standard coordinates of canonical(x); unit at x.
  const std::map<int, Laurent>& canonical_std_coords(int x) const;
  // Independent construction of phi(x): the antidominant column is pulled
  // back from q^{l(w0^nu)} times the double coset sum in the Hecke
  // algebra, then extended H-linearly across the block.
  SchurElement phi_direct(int x) const;

  TElement apply(const SchurElement& S, const TElement& v) const;
  SchurElement compose(const SchurElement& a, const SchurElement& b) const {
    return a.mul(b);
  }

  // Bar involution on endomorphisms, determined blockwise by the bar of
  // the antidominant column.
  SchurElement bar(const SchurElement& S) const;

  // Whether S commutes with the Hecke action, tested through the
  // coordinate relations for all generators and weight pairs.
  bool is_member(const SchurElement& S) const;

  // Coordinates in the standard basis, verified by reconstruction;
  // throws std::invalid_argument if S is outside the span.
  std::map<int, Laurent> coords_std(const SchurElement& S) const;
  // Coordinates in the canonical basis, via triangular elimination of
  // the standard coordinates.
  std::map<int, Laurent> coords_canonical(const SchurElement& S) const;

  // Evaluate all entries at a rational point.
  RatMat eval(const SchurElement& S, const mpq_class& q) const;

  // Double centralizer check at the given sample points. Weight sets
  // without a regular orbit are refused unless require_regular is false;
  // the unchecked mode still reports the measured dimensions so a failure
  // can be diagnosed.
  DualityReport verify_duality(const std::vector<mpq_class>& qs,
                               bool require_regular = true) const;

  // Positivity of all canonical structure constants and of the canonical
  // action on the canonical basis of T.
  PositivityReport verify_positivity() const;

  // Compatibility of the bar involution with the two-sided action on
  // random triples (S, v, h).
  BarCompatReport verify_bar_compat(int samples, std::uint64_t seed) const;

  std::string str(const SchurElement& S) const;

 private:
  DualitySample duality_sample(const mpq_class& q) const;

  std::shared_ptr<const WeylGroup> W_;
  WeightSet ws_;
  HeckeAlgebra H_;
  XiSet xi_;
  TModule T_;

  mutable std::vector<std::unique_ptr<SchurElement>> eta_;
  mutable std::vector<std::unique_ptr<SchurElement>> std_;
  mutable std::vector<std::unique_ptr<SchurElement>> can_;
  mutable std::vector<std::unique_ptr<std::map<int, Laurent>>> can_coords_;
};

}  // namespace qschur

#endif
