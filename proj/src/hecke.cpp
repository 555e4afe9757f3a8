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

#include "hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace qschur {

void HeckeElement::add_term(int w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const Laurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v = v * c;
  return *this;
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  HeckeElement r = *this;
  r += o;
  return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  HeckeElement r = *this;
  r -= o;
  return r;
}

HeckeElement HeckeElement::operator*(const Laurent& c) const {
  HeckeElement r = *this;
  r *= c;
  return r;
}

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const WeylGroup> W)
    : W_(std::move(W)) {
  cw_.resize(W_->size());
  cw_done_.assign(W_->size(), 0);
  barh_.resize(W_->size());
  barh_done_.assign(W_->size(), 0);
}

HeckeElement HeckeAlgebra::rmul_gen(const HeckeElement& h, int k) const {
  HeckeElement out;
  const Laurent qm = Laurent::q_power(-1) - Laurent::q_power(1);
  for (const auto& [w, c] : h.terms()) {
    const int ws = W_->rmul(w, k);
    if (W_->length(ws) > W_->length(w)) {
      out.add_term(ws, c);
    } else {
      out.add_term(ws, c);
      out.add_term(w, c * qm);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::lmul_gen(int k, const HeckeElement& h) const {
  HeckeElement out;
  const Laurent qm = Laurent::q_power(-1) - Laurent::q_power(1);
  for (const auto& [w, c] : h.terms()) {
    const int sw = W_->lmul(k, w);
    if (W_->length(sw) > W_->length(w)) {
      out.add_term(sw, c);
    } else {
      out.add_term(sw, c);
      out.add_term(w, c * qm);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::rmul_basis(const HeckeElement& h, int w) const {
  HeckeElement out = h;
  for (int k : W_->word(w)) out = rmul_gen(out, k);
  return out;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& a,
                               const HeckeElement& b) const {
  HeckeElement out;
  for (const auto& [y, c] : b.terms()) {
    HeckeElement part = rmul_basis(a, y);
    part *= c;
    out += part;
  }
  return out;
}

const HeckeElement& HeckeAlgebra::bar_basis(int w) const {
  if (barh_done_[static_cast<std::size_t>(w)])
    return barh_[static_cast<std::size_t>(w)];
  HeckeElement r;
  if (w == W_->identity()) {
    r = HeckeElement::basis(w);
  } else {
    // bar(H_w) = bar(H_k) bar(H_{w'}) for w = s_k w' reduced, where
    // bar(H_k) = H_k + (q - q^-1) by the quadratic relation.
    const int k = W_->word(w).front();
    const HeckeElement& rest = bar_basis(W_->lmul(k, w));
    r = lmul_gen(k, rest);
    r += rest * (Laurent::q_power(1) - Laurent::q_power(-1));
  }
  barh_[static_cast<std::size_t>(w)] = std::move(r);
  barh_done_[static_cast<std::size_t>(w)] = 1;
  return barh_[static_cast<std::size_t>(w)];
}

HeckeElement HeckeAlgebra::bar(const HeckeElement& h) const {
  HeckeElement out;
  for (const auto& [w, c] : h.terms()) {
    HeckeElement part = bar_basis(w);
    part *= c.bar();
    out += part;
  }
  return out;
}

HeckeElement HeckeAlgebra::subset_sum(const std::vector<int>& ws) const {
  HeckeElement out;
  for (int w : ws)
    out.add_term(w, Laurent::q_power(-static_cast<std::int64_t>(W_->length(w))));
  return out;
}

HeckeElement HeckeAlgebra::q_symmetrizer(std::uint32_t J) const {
  const int w0J = W_->parabolic_longest(J);
  HeckeElement out;
  for (int u : W_->parabolic_elements(J))
    out.add_term(u, Laurent::q_power(static_cast<std::int64_t>(W_->length(w0J)) -
                                     static_cast<std::int64_t>(W_->length(u))));
  return out;
}

const HeckeElement& HeckeAlgebra::kl_elt(int w) const {
  if (cw_done_[static_cast<std::size_t>(w)])
    return cw_[static_cast<std::size_t>(w)];
  HeckeElement r;
  if (w == W_->identity()) {
    r = HeckeElement::basis(w);
  } else {
    // C_w = C_k C_{w'} - sum_{y: s_k y < y} mu(y,w') C_y with w = s_k w'
    // reduced and C_k = H_k + q.
    const int k = W_->word(w).front();
    const int wp = W_->lmul(k, w);
    const HeckeElement& cwp = kl_elt(wp);
    r = lmul_gen(k, cwp);
    r += cwp * Laurent::q_power(1);
    std::vector<std::pair<int, long>> drops;
    for (const auto& [y, p] : cwp.terms()) {
      if (y == wp) continue;
      if (W_->length(W_->lmul(k, y)) < W_->length(y)) {
        const mpz_class& m = p.coeff(1);
        if (m != 0) drops.emplace_back(y, m.get_si());
      }
    }
    for (const auto& [y, m] : drops) r -= kl_elt(y) * Laurent::constant(m);
  }
  // Structural guarantees of the recursion, cheap enough to keep on.
  for (const auto& [y, p] : r.terms()) {
    if (y == w) {
      if (!p.is_one()) throw std::logic_error("kl_elt: leading term not 1");
    } else if (!p.in_qZq() || !W_->bruhat_leq(y, w)) {
      throw std::logic_error("kl_elt: bad lower term");
    }
  }
  cw_[static_cast<std::size_t>(w)] = std::move(r);
  cw_done_[static_cast<std::size_t>(w)] = 1;
  return cw_[static_cast<std::size_t>(w)];
}

Laurent HeckeAlgebra::kl_p(int y, int w) const { return kl_elt(w).coeff(y); }

long HeckeAlgebra::mu(int y, int w) const {
  return kl_p(y, w).coeff(1).get_si();
}

Laurent HeckeAlgebra::classical_P(int y, int w) const {
  const Laurent p = kl_p(y, w);
  const std::int64_t gap = static_cast<std::int64_t>(W_->length(w)) -
                           static_cast<std::int64_t>(W_->length(y));
  Laurent out;
  for (const auto& [e, c] : p.terms()) {
    const std::int64_t num = gap - e;
    if (num < 0 || num % 2 != 0)
      throw std::logic_error("classical_P: exponent parity violated");
    out += Laurent::monomial(num / 2, c);
  }
  return out;
}

HeckeElement HeckeAlgebra::parabolic_kl_elt(std::uint32_t J, int w) const {
  if ((W_->ldesc(w) & J) != 0)
    throw std::invalid_argument("parabolic_kl_elt: not a minimal representative");
  return kl_elt(W_->mul(W_->parabolic_longest(J), w));
}

std::optional<std::map<int, Laurent>> HeckeAlgebra::qsym_coords(
    std::uint32_t J, const HeckeElement& h) const {
  // For y minimal in W_J y, the only product x_J H_{y'} whose expansion
  // touches H_y is y' = y, with coefficient q^{l(w0J)}.
  const int w0J = W_->parabolic_longest(J);
  const Laurent unlead =
      Laurent::q_power(-static_cast<std::int64_t>(W_->length(w0J)));
  std::map<int, Laurent> coords;
  for (const auto& [y, c] : h.terms())
    if ((W_->ldesc(y) & J) == 0) coords.emplace(y, c * unlead);
  HeckeElement rebuilt;
  const HeckeElement xj = q_symmetrizer(J);
  for (const auto& [y, a] : coords) {
    HeckeElement part = rmul_basis(xj, y);
    part *= a;
    rebuilt += part;
  }
  if (rebuilt != h) return std::nullopt;
  return coords;
}

std::string HeckeAlgebra::str(const HeckeElement& h) const {
  if (h.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : h.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*H[" << W_->word_str(w) << "]";
  }
  return os.str();
}

}  // namespace qschur
