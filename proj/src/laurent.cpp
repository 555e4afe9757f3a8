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

#include "laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qschur {

Laurent Laurent::monomial(std::int64_t e, long coeff) {
  return monomial(e, mpz_class(coeff));
}

Laurent Laurent::monomial(std::int64_t e, mpz_class coeff) {
  Laurent p;
  if (coeff != 0) p.terms_.emplace(e, std::move(coeff));
  return p;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

mpz_class Laurent::coeff(std::int64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::int64_t Laurent::min_exp() const {
  if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

std::int64_t Laurent::max_exp() const {
  if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

Laurent Laurent::operator-() const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(e, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto [it, fresh] = out.terms_.try_emplace(ea + eb, ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Laurent& Laurent::shift(std::int64_t e) {
  if (e == 0 || is_zero()) return *this;
  std::map<std::int64_t, mpz_class> shifted;
  for (auto& [ex, c] : terms_) shifted.emplace(ex + e, std::move(c));
  terms_ = std::move(shifted);
  return *this;
}

Laurent Laurent::bar() const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

bool Laurent::in_qZq() const {
  return terms_.empty() || terms_.begin()->first >= 1;
}

bool Laurent::in_Nqq() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

mpq_class Laurent::eval(const mpq_class& x) const {
  if (!terms_.empty() && terms_.begin()->first < 0 && x == 0)
    throw std::domain_error("evaluating a negative q-power at 0");
  mpq_class acc(0);
  for (const auto& [e, c] : terms_) {
    mpq_class p(1);
    std::int64_t n = e >= 0 ? e : -e;
    mpq_class base = x;
    // Binary powering; invert once for negative exponents.
    mpq_class pw(1);
    while (n > 0) {
      if (n & 1) pw *= base;
      base *= base;
      n >>= 1;
    }
    if (e < 0) pw = mpq_class(1) / pw;
    p = pw;
    acc += mpq_class(c) * p;
  }
  acc.canonicalize();
  return acc;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace qschur
