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

#ifndef QSCHUR_G2SUITE_HPP
#define QSCHUR_G2SUITE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "schur.hpp"

namespace qschur {

// Outcome of replaying one of the curated G2 identity corpora. A family
// is one formula template; an instance is one concrete identity checked
// after filling in all free parameters.
struct CorpusReport {
  int families = 0;
  int checked = 0;
  int mismatches = 0;
  std::vector<std::string> failures;  // capped at a few entries
  std::vector<std::string> notes;
  bool pass = false;
};

// Driver for the curated type G2 corpora on the weight set X(n): the
// Chevalley-style generators e_a, f_a and the wall-crossing element t of
// the q-Schur algebra, the bar-involution tables for the module T(n),
// and the q = 1 multiplication relations for n = 2.
//
// Weights are named by zero-sum integer triples (a, b, c); the triple
// with 0 <= a <= b is the antidominant representative of its orbit.
class G2Suite {
 public:
  explicit G2Suite(int n);
  G2Suite(const G2Suite&) = delete;
  G2Suite& operator=(const G2Suite&) = delete;

  int n() const { return n_; }
  const SchurContext& context() const { return *ctx_; }

  // Generators as sums of canonical basis elements; 0 <= a < n.
  const SchurElement& e(int a) const;
  const SchurElement& f(int a) const;
  const SchurElement& t() const;
  // The same element t written in the standard basis with explicit
  // lower-order corrections; must coincide with t().
  SchurElement t_standard_form() const;

  // Bar involution of every basis vector of T(n) against the closed-form
  // tables (one table per orbit pattern).
  CorpusReport run_bar_corpus() const;
  // Action of e_a, f_a, t on basis vectors against the closed-form
  // tables, including the annihilation rules.
  CorpusReport run_action_corpus() const;
  // Multiplication relations between the eta basis and words in the
  // generators after specializing q = 1. Only available for n = 2.
  CorpusReport run_relation_corpus() const;

  // Rank of the span of all words in {e_a, f_a, t} (including the empty
  // word) inside End(T(n)) after evaluating at the sample point.
  std::size_t spanned_dimension(const mpq_class& q) const;

 private:
  // Weight index of the zero-sum triple (a, b, c).
  int vi(long a, long b, long c) const;
  // Weight index of (a, b, c) translated by the group element tau.
  int vt(long a, long b, long c, int tau) const;
  // Class index of the orbit whose antidominant triple is (a, b, -a-b),
  // taking the pair unordered.
  int cls(int a, int b) const;
  // Index of the triple (class of (a1,b1), g, class of (a2,b2)).
  int xi_idx(int a1, int b1, int g, int a2, int b2) const;

  SchurElement build_e(int a) const;
  SchurElement build_f(int a) const;
  SchurElement build_t() const;

  int n_ = 0;
  std::unique_ptr<SchurContext> ctx_;
  std::vector<SchurElement> e_, f_;
  SchurElement t_;
};

}  // namespace qschur

#endif  // QSCHUR_G2SUITE_HPP
