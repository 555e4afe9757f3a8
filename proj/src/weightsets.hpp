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

#ifndef QSCHUR_WEIGHTSETS_HPP
#define QSCHUR_WEIGHTSETS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "rootdata.hpp"
#include "weylgroup.hpp"

namespace qschur {

// One W-orbit inside a finite W-invariant weight set. The orbit is
// enumerated through the minimal coset representatives of the stabilizer
// of its unique antidominant element.
struct LinkageClass {
  ShiftedWeight antidom;
  std::uint32_t J = 0;          // generators fixing the antidominant element
  int w0J = 0;                  // longest element of W_J
  std::vector<int> coset_reps;  // minimal reps of W_J \ W, ShortLex order
  std::vector<int> members;     // global weight indices, aligned with reps
};

// A finite W-invariant set of shifted weights, organized by linkage
// class. Global element order is the concatenation of the class member
// lists; classes are sorted by their antidominant weight.
class WeightSet {
 public:
  static WeightSet close_under_W(std::shared_ptr<const WeylGroup> W,
                                 const std::vector<ShiftedWeight>& seeds);

  const WeylGroup& group() const { return *W_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return W_; }

  std::size_t size() const { return weights_.size(); }
  const ShiftedWeight& weight(int i) const {
    return weights_[static_cast<std::size_t>(i)];
  }
  std::optional<int> index_of(const ShiftedWeight& w) const;

  // Index of weight(i) acted on by s_k, then by a general element.
  int act_gen(int i, int k) const {
    return act_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  }
  int act(int i, int w) const;

  std::size_t class_count() const { return classes_.size(); }
  const LinkageClass& linkage_class(int c) const {
    return classes_[static_cast<std::size_t>(c)];
  }
  int class_of(int i) const { return class_of_[static_cast<std::size_t>(i)]; }
  // Position of element i within its class (index into coset_reps).
  int pos_in_class(int i) const { return pos_of_[static_cast<std::size_t>(i)]; }
  // Global index of the antidominant element of class c.
  int antidom_index(int c) const {
    return classes_[static_cast<std::size_t>(c)].members.front();
  }
  bool has_regular_class() const;

 private:
  std::shared_ptr<const WeylGroup> W_;
  std::vector<ShiftedWeight> weights_;
  std::map<ShiftedWeight, int> index_;
  std::vector<LinkageClass> classes_;
  std::vector<int> class_of_;
  std::vector<int> pos_of_;
  std::vector<std::vector<int>> act_;
};

// Antidominant representative of the orbit of w: repeatedly reflect at a
// coordinate with strictly positive pairing.
ShiftedWeight antidominant_rep(const CartanDatum& cd, ShiftedWeight w);

// Seeds whose closure is the type-G2 set of all zero-sum triples linked
// to some (a,b,c) with 0 <= a <= b <= n.
std::vector<ShiftedWeight> g2_xbar_seeds(int n);

// A parametrized basis triple: linkage classes gamma, nu and a minimal
// double coset representative g for (W_gamma, W_nu).
struct XiTriple {
  int gamma;
  int g;
  int nu;
  bool operator==(const XiTriple& o) const {
    return gamma == o.gamma && g == o.g && nu == o.nu;
  }
};

// All triples over a weight set, ordered by (gamma, nu, ShortLex g), with
// cached double cosets and the exponents attached to each triple.
class XiSet {
 public:
  explicit XiSet(const WeightSet& ws);

  const WeightSet& weights() const { return *ws_; }
  std::size_t size() const { return triples_.size(); }
  const XiTriple& triple(int x) const {
    return triples_[static_cast<std::size_t>(x)];
  }
  std::optional<int> index_of(int gamma, int g, int nu) const;

  // The double coset W_gamma g W_nu of triple x.
  const WeylGroup::DoubleCoset& coset(int x) const {
    return cosets_[static_cast<std::size_t>(x)];
  }
  int gplus(int x) const { return cosets_[static_cast<std::size_t>(x)].gplus; }

  // Members of the triple's double coset with no left descent in
  // J_gamma; these enumerate the weights hit by the corresponding
  // homomorphism.
  const std::vector<int>& row_reps(int x) const {
    return row_reps_[static_cast<std::size_t>(x)];
  }

  // Weight-pair image of a triple: (index of antidom(gamma)*g,
  // index of antidom(nu)).
  std::pair<int, int> pair_of(int x) const;
  // Inverse normalization: j must be an antidominant element; any i in
  // the set is accepted and mapped to the triple of its double coset.
  std::optional<int> xi_of_pair(int i, int j) const;
  // Transversal membership for a weight pair: j antidominant, and no k
  // fixing j moves i strictly down.
  bool in_transversal(int i, int j) const;

  // Exponent attached to the standard basis element of triple x:
  // l(g+) - l(w0^nu).
  long d_exponent(int x) const;
  // Dimension of the attached orbit: l(g+) + l(w0) - l(w0^gamma)
  // - l(w0^nu).
  long orbit_dim(int x) const;
  // The diagonal triple (c, e, c).
  int diagonal(int c) const;

  // All triples with the same (gamma, nu) as x, in ShortLex order of g.
  const std::vector<int>& block(int gamma, int nu) const;

 private:
  const WeightSet* ws_;
  std::vector<XiTriple> triples_;
  std::vector<WeylGroup::DoubleCoset> cosets_;
  std::vector<std::vector<int>> row_reps_;
  std::map<std::tuple<int, int, int>, int> index_;
  std::map<std::pair<int, int>, std::vector<int>> blocks_;
};

}  // namespace qschur

#endif
