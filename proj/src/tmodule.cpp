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

#include "tmodule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qschur {

void TElement::add_term(int i, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(i, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TElement& TElement::operator+=(const TElement& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, c);
  return *this;
}

TElement& TElement::operator-=(const TElement& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, -c);
  return *this;
}

TElement& TElement::operator*=(const Laurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, v] : terms_) v = v * c;
  return *this;
}

TElement TElement::operator+(const TElement& o) const {
  TElement r = *this;
  r += o;
  return r;
}

TElement TElement::operator-(const TElement& o) const {
  TElement r = *this;
  r -= o;
  return r;
}

TElement TElement::operator*(const Laurent& c) const {
  TElement r = *this;
  r *= c;
  return r;
}

TModule::TModule(const WeightSet& ws, const HeckeAlgebra& H)
    : ws_(&ws), H_(&H) {
  if (&ws.group() != &H.group())
    throw std::invalid_argument("TModule: weight set and algebra disagree");
  rep_pos_.resize(ws.class_count());
  for (std::size_t c = 0; c < ws.class_count(); ++c) {
    const auto& reps = ws.linkage_class(static_cast<int>(c)).coset_reps;
    for (std::size_t t = 0; t < reps.size(); ++t)
      rep_pos_[c].emplace(reps[t], static_cast<int>(t));
  }
  can_.resize(ws.size());
  can_done_.assign(ws.size(), 0);
}

TElement TModule::act_gen(const TElement& v, int k) const {
  TElement out;
  const Laurent drop = Laurent::q_power(-1) - Laurent::q_power(1);
  for (const auto& [i, c] : v.terms()) {
    switch (descent_sign(ws_->weight(i), k)) {
      case DescentSign::Fixed:
        out.add_term(i, c * Laurent::q_power(-1));
        break;
      case DescentSign::Up:
        out.add_term(ws_->act_gen(i, k), c);
        break;
      case DescentSign::Down:
        out.add_term(ws_->act_gen(i, k), c);
        out.add_term(i, c * drop);
        break;
    }
  }
  return out;
}

TElement TModule::act_w(const TElement& v, int w) const {
  TElement out = v;
  for (int k : ws_->group().word(w)) out = act_gen(out, k);
  return out;
}

TElement TModule::act(const TElement& v, const HeckeElement& h) const {
  TElement out;
  for (const auto& [w, c] : h.terms()) {
    TElement part = act_w(v, w);
    part *= c;
    out += part;
  }
  return out;
}

HeckeElement TModule::omega(int gamma, const TElement& v) const {
  const HeckeElement xg = H_->q_symmetrizer(ws_->linkage_class(gamma).J);
  HeckeElement out;
  for (const auto& [i, c] : v.terms()) {
    if (ws_->class_of(i) != gamma)
      throw std::invalid_argument("omega: vector leaves the class");
    const int rep = ws_->linkage_class(gamma)
                        .coset_reps[static_cast<std::size_t>(ws_->pos_in_class(i))];
    HeckeElement part = H_->rmul_basis(xg, rep);
    part *= c;
    out += part;
  }
  return out;
}

TElement TModule::omega_inv(int gamma, const HeckeElement& h) const {
  const auto coords = H_->qsym_coords(ws_->linkage_class(gamma).J, h);
  if (!coords)
    throw std::invalid_argument("omega_inv: element outside x_gamma H");
  TElement out;
  for (const auto& [y, a] : *coords) {
    const auto it = rep_pos_[static_cast<std::size_t>(gamma)].find(y);
    if (it == rep_pos_[static_cast<std::size_t>(gamma)].end())
      throw std::logic_error("omega_inv: representative not in class");
    out.add_term(
        ws_->linkage_class(gamma).members[static_cast<std::size_t>(it->second)],
        a);
  }
  return out;
}

TElement TModule::bar(const TElement& v) const {
  // Blockwise: bar(v_low * H_y) = v_low * bar(H_y) with v_low the
  // antidominant vector of the class, since bar fixes each v_low.
  TElement out;
  for (const auto& [i, c] : v.terms()) {
    const int gamma = ws_->class_of(i);
    const int rep = ws_->linkage_class(gamma)
                        .coset_reps[static_cast<std::size_t>(ws_->pos_in_class(i))];
    const TElement low = TElement::basis(ws_->antidom_index(gamma));
    TElement part = act(low, H_->bar(HeckeElement::basis(rep)));
    part *= c.bar();
    out += part;
  }
  return out;
}

const TElement& TModule::canonical(int i) const {
  if (can_done_[static_cast<std::size_t>(i)])
    return can_[static_cast<std::size_t>(i)];
  const int gamma = ws_->class_of(i);
  const auto& cls = ws_->linkage_class(gamma);
  const int rep = cls.coset_reps[static_cast<std::size_t>(ws_->pos_in_class(i))];
  TElement r = omega_inv(gamma, H_->parabolic_kl_elt(cls.J, rep));
  if (!r.coeff(i).is_one())
    throw std::logic_error("canonical: diagonal coefficient not 1");
  can_[static_cast<std::size_t>(i)] = std::move(r);
  can_done_[static_cast<std::size_t>(i)] = 1;
  return can_[static_cast<std::size_t>(i)];
}

std::map<int, Laurent> TModule::canonical_coords(const TElement& v) const {
  // The canonical vectors are unitriangular over the standard ones with
  // lower terms at strictly smaller coset-representative length, so
  // eliminating the longest remaining term terminates with zero
  // remainder. Each step removes the current maximum and can only add
  // strictly shorter terms.
  auto len = [&](int i) {
    const auto& cls = ws_->linkage_class(ws_->class_of(i));
    return ws_->group().length(
        cls.coset_reps[static_cast<std::size_t>(ws_->pos_in_class(i))]);
  };
  std::map<int, Laurent> coords;
  TElement rest = v;
  while (!rest.is_zero()) {
    int best = -1;
    unsigned blen = 0;
    for (const auto& [i, c] : rest.terms())
      if (best < 0 || len(i) > blen) {
        best = i;
        blen = len(i);
      }
    if (coords.count(best))
      throw std::logic_error("canonical_coords: elimination revisited a term");
    const Laurent a = rest.coeff(best);
    coords[best] = a;
    rest -= canonical(best) * a;
  }
  return coords;
}

std::string TModule::str(const TElement& v) const {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*v[" << weight_str(ws_->group().datum(), ws_->weight(i))
       << "]";
  }
  return os.str();
}

}  // namespace qschur
