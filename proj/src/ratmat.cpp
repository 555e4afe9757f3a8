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

#include "ratmat.hpp"

#include <stdexcept>

namespace qschur {

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat& RatMat::operator+=(const RatMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("RatMat::operator+=: shape");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

RatMat& RatMat::operator-=(const RatMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("RatMat::operator-=: shape");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

RatMat RatMat::operator+(const RatMat& o) const {
  RatMat out = *this;
  out += o;
  return out;
}

RatMat RatMat::operator-(const RatMat& o) const {
  RatMat out = *this;
  out -= o;
  return out;
}

RatMat RatMat::scale(const mpq_class& c) const {
  RatMat out = *this;
  for (auto& x : out.a_) x *= c;
  return out;
}

RatMat RatMat::mul(const RatMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RatMat::mul: shape");
  RatMat out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const mpq_class& y = o.at(k, j);
        if (y == 0) continue;
        out.at(i, j) += x * y;
      }
    }
  }
  return out;
}

void EchelonBasis::reduce(std::vector<mpq_class>& v) const {
  for (const auto& [piv, row] : rows_) {
    const mpq_class& c = v[piv];
    if (c == 0) continue;
    mpq_class factor = c;
    for (std::size_t j = piv; j < dim_; ++j) {
      if (row[j] != 0) v[j] -= factor * row[j];
    }
  }
}

bool EchelonBasis::add(std::vector<mpq_class> v) {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis::add: size");
  reduce(v);
  std::size_t piv = dim_;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (v[j] != 0) {
      piv = j;
      break;
    }
  }
  if (piv == dim_) return false;
  mpq_class lead = v[piv];
  for (std::size_t j = piv; j < dim_; ++j) {
    if (v[j] != 0) v[j] /= lead;
  }
  // Back-substitute into earlier rows so the basis stays fully reduced;
  // this keeps entry growth in check across long constraint streams.
  for (auto& [p, row] : rows_) {
    const mpq_class& c = row[piv];
    if (c == 0) continue;
    mpq_class factor = c;
    for (std::size_t j = piv; j < dim_; ++j) {
      if (v[j] != 0) row[j] -= factor * v[j];
    }
  }
  auto it = rows_.begin();
  while (it != rows_.end() && it->first < piv) ++it;
  rows_.insert(it, {piv, std::move(v)});
  return true;
}

bool EchelonBasis::contains(std::vector<mpq_class> v) const {
  if (v.size() != dim_) {
    throw std::invalid_argument("EchelonBasis::contains: size");
  }
  reduce(v);
  for (const auto& c : v) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace qschur
