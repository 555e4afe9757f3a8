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

#ifndef QSCHUR_RATMAT_HPP
#define QSCHUR_RATMAT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace qschur {

// Dense matrix over the rationals. Small and exact; used by the duality
// verifier to specialize the ground ring at sample points.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpq_class& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const mpq_class& at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  RatMat mul(const RatMat& o) const;
  RatMat& operator+=(const RatMat& o);
  RatMat& operator-=(const RatMat& o);
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat scale(const mpq_class& c) const;

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const RatMat& o) const { return !(*this == o); }

  // Entries flattened row-major, e.g. for feeding a matrix to an
  // EchelonBasis as one long vector.
  const std::vector<mpq_class>& flat() const { return a_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> a_;
};

// Incremental row space over the rationals: rows are reduced against the
// accumulated echelon basis as they arrive, so the rank is maintained
// exactly after every insertion.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  // Reduces v against the basis; if a nonzero remainder survives it is
  // normalized and inserted, and the call returns true.
  bool add(std::vector<mpq_class> v);

  // Whether v lies in the span of the rows added so far.
  bool contains(std::vector<mpq_class> v) const;

 private:
  void reduce(std::vector<mpq_class>& v) const;

  std::size_t dim_;
  // Pairs (pivot column, fully reduced row with unit pivot), kept sorted
  // by pivot column.
  std::vector<std::pair<std::size_t, std::vector<mpq_class>>> rows_;
};

}  // namespace qschur

#endif
