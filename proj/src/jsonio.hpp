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

#ifndef QSCHUR_JSONIO_HPP
#define QSCHUR_JSONIO_HPP

#include <map>
#include <string>
#include <vector>

#include "g2suite.hpp"
#include "json.hpp"
#include "schur.hpp"

namespace qschur {

using ordered_json = nlohmann::ordered_json;

// Laurent polynomials serialize as {"exponent": "coefficient"} with the
// exponents ascending and coefficients in decimal, so output is stable
// and arbitrary-precision safe.
ordered_json laurent_json(const Laurent& p);
Laurent laurent_from_json(const ordered_json& j);

ordered_json weight_json(const ShiftedWeight& w);
ShiftedWeight weight_from_json(const ordered_json& j);
std::vector<ShiftedWeight> seeds_from_json(const ordered_json& j, int rank);

// Basis-element carriers: arrays of [index-or-word, coefficient] pairs
// in ascending index order.
ordered_json hecke_json(const WeylGroup& W, const HeckeElement& h);
ordered_json telement_json(const TElement& v);
// Sparse matrix as an array of [row, col, coefficient] triples in
// row-major order.
ordered_json schur_json(const SchurElement& s);
ordered_json coords_json(const std::map<int, Laurent>& coords);

ordered_json corpus_report_json(const CorpusReport& r);
ordered_json duality_report_json(const DualityReport& r);
ordered_json positivity_report_json(const PositivityReport& r);
ordered_json bar_compat_report_json(const BarCompatReport& r);

ordered_json info_json(const SchurContext& ctx, const std::string& type_label);
// Complete state dump: weights, orbit decomposition, triple census, and
// all canonical basis tables. Feeding the "weights" array back through
// a new session reproduces this dump verbatim.
ordered_json dump_json(const SchurContext& ctx, const std::string& type_label);

}  // namespace qschur

#endif  // QSCHUR_JSONIO_HPP
