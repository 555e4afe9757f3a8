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

#include "jsonio.hpp"

#include <cstdint>
#include <stdexcept>

namespace qschur {

ordered_json laurent_json(const Laurent& p) {
  ordered_json j = ordered_json::object();
  for (const auto& [e, c] : p.terms()) {
    j[std::to_string(e)] = c.get_str();
  }
  return j;
}

Laurent laurent_from_json(const ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("laurent_from_json: object");
  Laurent p;
  for (const auto& [key, val] : j.items()) {
    const std::int64_t e = std::stoll(key);
    p += Laurent::monomial(e, mpz_class(val.get<std::string>()));
  }
  return p;
}

ordered_json weight_json(const ShiftedWeight& w) {
  ordered_json j = ordered_json::array();
  for (auto v : w.m) j.push_back(v);
  return j;
}

ShiftedWeight weight_from_json(const ordered_json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight_from_json: array");
  std::vector<std::int64_t> m;
  for (const auto& v : j) m.push_back(v.get<std::int64_t>());
  return ShiftedWeight(std::move(m));
}

std::vector<ShiftedWeight> seeds_from_json(const ordered_json& j, int rank) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("seeds: expected a nonempty JSON array");
  }
  std::vector<ShiftedWeight> out;
  for (const auto& item : j) {
    ShiftedWeight w = weight_from_json(item);
    if (static_cast<int>(w.m.size()) != rank) {
      throw std::invalid_argument("seeds: weight rank mismatch");
    }
    out.push_back(std::move(w));
  }
  return out;
}

ordered_json hecke_json(const WeylGroup& W, const HeckeElement& h) {
  ordered_json j = ordered_json::array();
  for (const auto& [w, c] : h.terms()) {
    j.push_back(ordered_json{
        {"w", w}, {"word", W.word_str(w)}, {"c", laurent_json(c)}});
  }
  return j;
}

ordered_json telement_json(const TElement& v) {
  ordered_json j = ordered_json::array();
  for (const auto& [i, c] : v.terms()) {
    j.push_back(ordered_json::array({i, laurent_json(c)}));
  }
  return j;
}

ordered_json schur_json(const SchurElement& s) {
  ordered_json j = ordered_json::array();
  const int n = static_cast<int>(s.dim());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (!s.entry(r, c).is_zero()) {
        j.push_back(ordered_json::array({r, c, laurent_json(s.entry(r, c))}));
      }
    }
  }
  return j;
}

ordered_json coords_json(const std::map<int, Laurent>& coords) {
  ordered_json j = ordered_json::array();
  for (const auto& [x, c] : coords) {
    j.push_back(ordered_json::array({x, laurent_json(c)}));
  }
  return j;
}

ordered_json corpus_report_json(const CorpusReport& r) {
  return ordered_json{{"families", r.families},
                      {"checked", r.checked},
                      {"mismatches", r.mismatches},
                      {"failures", r.failures},
                      {"notes", r.notes},
                      {"pass", r.pass}};
}

ordered_json duality_report_json(const DualityReport& r) {
  ordered_json samples = ordered_json::array();
  for (const auto& s : r.samples) {
    samples.push_back(ordered_json{{"q", s.q.get_str()},
                                   {"commutes", s.commutes},
                                   {"hecke_rank", s.hecke_rank},
                                   {"centralizer_dim", s.centralizer_dim},
                                   {"equals_span", s.equals_span},
                                   {"faithful", s.faithful},
                                   {"ok", s.ok}});
  }
  return ordered_json{{"has_regular", r.has_regular},
                      {"refused", r.refused},
                      {"message", r.message},
                      {"samples", samples},
                      {"pass", r.pass}};
}

ordered_json positivity_report_json(const PositivityReport& r) {
  return ordered_json{{"products_checked", r.products_checked},
                      {"actions_checked", r.actions_checked},
                      {"violations", r.violations},
                      {"failures", r.failures},
                      {"pass", r.pass}};
}

ordered_json bar_compat_report_json(const BarCompatReport& r) {
  return ordered_json{
      {"checked", r.checked}, {"mismatches", r.mismatches}, {"pass", r.pass}};
}

namespace {

ordered_json simple_set_json(std::uint32_t J, int rank) {
  ordered_json j = ordered_json::array();
  for (int k = 0; k < rank; ++k) {
    if (J & (1u << k)) j.push_back(k + 1);
  }
  return j;
}

ordered_json classes_json(const SchurContext& ctx) {
  const WeightSet& ws = ctx.weights();
  ordered_json classes = ordered_json::array();
  for (int c = 0; c < static_cast<int>(ws.class_count()); ++c) {
    const LinkageClass& lc = ws.linkage_class(c);
    classes.push_back(
        ordered_json{{"antidominant", weight_json(lc.antidom)},
                     {"J", simple_set_json(lc.J, ctx.group().rank())},
                     {"size", lc.members.size()},
                     {"members", lc.members}});
  }
  return classes;
}

}  // namespace

ordered_json info_json(const SchurContext& ctx, const std::string& type_label) {
  const WeightSet& ws = ctx.weights();
  return ordered_json{{"type", type_label},
                      {"rank", ctx.group().rank()},
                      {"group_order", ctx.group().size()},
                      {"weight_count", ws.size()},
                      {"class_count", ws.class_count()},
                      {"classes", classes_json(ctx)},
                      {"xi_count", ctx.dim()},
                      {"has_regular_class", ws.has_regular_class()}};
}

ordered_json dump_json(const SchurContext& ctx, const std::string& type_label) {
  const WeightSet& ws = ctx.weights();
  const WeylGroup& W = ctx.group();
  ordered_json j = ordered_json{{"format", "qschur-dump"},
                                {"version", 1},
                                {"type", type_label},
                                {"rank", W.rank()},
                                {"group_order", W.size()}};

  ordered_json weights = ordered_json::array();
  for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
    weights.push_back(weight_json(ws.weight(i)));
  }
  j["weights"] = std::move(weights);
  j["classes"] = classes_json(ctx);

  ordered_json xi = ordered_json::array();
  for (int x = 0; x < static_cast<int>(ctx.dim()); ++x) {
    const XiTriple& tr = ctx.xi().triple(x);
    xi.push_back(ordered_json{{"gamma", tr.gamma},
                              {"g", W.word_str(tr.g)},
                              {"nu", tr.nu},
                              {"gplus", W.word_str(ctx.xi().gplus(x))},
                              {"d_exponent", ctx.xi().d_exponent(x)},
                              {"orbit_dim", ctx.xi().orbit_dim(x)}});
  }
  j["xi"] = std::move(xi);

  ordered_json hk = ordered_json::array();
  for (int w = 0; w < static_cast<int>(W.size()); ++w) {
    hk.push_back(ordered_json{{"w", w},
                              {"word", W.word_str(w)},
                              {"coeffs", hecke_json(W, ctx.hecke().kl_elt(w))}});
  }
  j["hecke_cbasis"] = std::move(hk);

  ordered_json tc = ordered_json::array();
  ordered_json tb = ordered_json::array();
  for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
    tc.push_back(telement_json(ctx.tmodule().canonical(i)));
    tb.push_back(telement_json(ctx.tmodule().bar(TElement::basis(i))));
  }
  j["tmodule_cbasis"] = std::move(tc);
  j["tmodule_bar"] = std::move(tb);

  ordered_json sc = ordered_json::array();
  for (int x = 0; x < static_cast<int>(ctx.dim()); ++x) {
    sc.push_back(
        ordered_json{{"xi", x},
                     {"matrix", schur_json(ctx.canonical(x))},
                     {"std_coords", coords_json(ctx.canonical_std_coords(x))}});
  }
  j["schur_cbasis"] = std::move(sc);
  return j;
}

}  // namespace qschur
