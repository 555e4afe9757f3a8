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

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

namespace qschur {

/*
  Laurent polynomials in one variable q with arbitrary-precision integer
  coefficients: the ground ring of everything in this library.  Stored
  sparsely as exponent -> nonzero coefficient; the zero polynomial is the
  empty map.  All arithmetic is exact.
*/
class Laurent {
 public:
  Laurent() = default;

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return monomial(0, 1); }
  // q^e with an integer or bignum coefficient.
  static Laurent monomial(std::int64_t e, long coeff);
  static Laurent monomial(std::int64_t e, mpz_class coeff);
  static Laurent q_power(std::int64_t e) { return monomial(e, 1); }
  static Laurent constant(long c) { return monomial(0, c); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Coefficient of q^e (zero if absent).
  mpz_class coeff(std::int64_t e) const;
  std::int64_t min_exp() const;  // requires nonzero
  std::int64_t max_exp() const;  // requires nonzero
  std::size_t term_count() const { return terms_.size(); }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Multiply by the unit q^e in place (cheap exponent shift).
  Laurent& shift(std::int64_t e);

  // The bar involution q -> q^{-1}: negates every exponent.
  Laurent bar() const;

  // Membership in q.Z[q]: every exponent >= 1 (true for zero).
  bool in_qZq() const;
  // Membership in N[q, q^{-1}]: every coefficient >= 0 (true for zero).
  bool in_Nqq() const;

  // Exact evaluation at a rational point (x must be nonzero when negative
  // exponents are present).
  mpq_class eval(const mpq_class& x) const;

  // Human-readable form, e.g. "q^-1 - q", "1 + q^2".  Zero prints "0".
  std::string str() const;

  const std::map<std::int64_t, mpz_class>& terms() const { return terms_; }

 private:
  std::map<std::int64_t, mpz_class> terms_;
};

inline Laurent operator*(const Laurent& a, long c) {
  return a * Laurent::constant(c);
}

}  // namespace qschur
