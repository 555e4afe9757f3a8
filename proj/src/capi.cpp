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

#include "qschur/qschur.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "g2suite.hpp"
#include "jsonio.hpp"
#include "schur.hpp"

using namespace qschur;

struct qs_session {
  std::string type;
  std::unique_ptr<SchurContext> ctx;
  std::string last_error;
};

namespace {

constexpr long kDefaultCap = 2000;

std::string& global_error() {
  static std::string err;
  return err;
}

void set_error(qs_session* s, const std::string& msg) {
  if (s) {
    s->last_error = msg;
  } else {
    global_error() = msg;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

int emit(const ordered_json& j, char** out_json) {
  *out_json = dup_string(j.dump(2));
  return *out_json ? QS_OK : QS_ERR_INTERNAL;
}

// Run fn, translating exceptions into status codes and the session (or
// global) error slot.
template <typename F>
int guarded(qs_session* s, F&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    set_error(s, e.what());
    return QS_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(s, e.what());
    return QS_ERR_INTERNAL;
  }
}

// Order of the Weyl group of the given type, for the cap check before
// any enumeration starts.
unsigned long long group_order(char family, int rank) {
  auto factorial = [](int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
  };
  switch (family) {
    case 'A':
      return factorial(rank + 1);
    case 'B':
    case 'C':
      return (1ull << rank) * factorial(rank);
    case 'D':
      return (1ull << (rank - 1)) * factorial(rank);
    case 'E':
      return rank == 6 ? 51840ull : rank == 7 ? 2903040ull : 696729600ull;
    case 'F':
      return 1152ull;
    case 'G':
      return 12ull;
    default:
      return 0ull;
  }
}

std::vector<ShiftedWeight> resolve_seeds(const CartanDatum& cd,
                                         const std::string& spec) {
  if (spec.rfind("g2:n=", 0) == 0) {
    if (cd.family != 'G') {
      throw std::invalid_argument("weights spec g2:n=N requires type G2");
    }
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(spec.substr(5), &used);
      if (used != spec.size() - 5) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed weights spec: " + spec);
    }
    if (n < 1) throw std::invalid_argument("g2:n=N needs n >= 1");
    return g2_xbar_seeds(n);
  }
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open seed file: " + path);
    ordered_json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw std::invalid_argument("seed file is not valid JSON: " +
                                  std::string(e.what()));
    }
    return seeds_from_json(j, cd.rank);
  }
  if (!spec.empty() && spec.front() == '[') {
    ordered_json j;
    try {
      j = ordered_json::parse(spec);
    } catch (const std::exception& e) {
      throw std::invalid_argument("inline seeds are not valid JSON: " +
                                  std::string(e.what()));
    }
    return seeds_from_json(j, cd.rank);
  }
  throw std::invalid_argument(
      "weights spec must be g2:n=N, file:PATH, or an inline JSON array");
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: " + text);
  }
  q.canonicalize();
  if (q == 0) throw std::invalid_argument("sample point q must be nonzero");
  return q;
}

ordered_json xi_header_json(const SchurContext& ctx, int x) {
  const XiTriple& tr = ctx.xi().triple(x);
  return ordered_json{{"xi", x},
                      {"gamma", tr.gamma},
                      {"g", ctx.group().word_str(tr.g)},
                      {"nu", tr.nu}};
}

int check_xi_range(qs_session* s, long xi) {
  if (xi >= static_cast<long>(s->ctx->dim())) {
    set_error(s, "triple index out of range");
    return QS_ERR_ARGUMENT;
  }
  return QS_OK;
}

const G2Suite& cached_g2_suite(int n) {
  // The corpus entry points are stateless from the caller's view; keep
  // the most recent suite alive so repeated CLI verify calls with the
  // same n do not rebuild the context.
  static std::unique_ptr<G2Suite> suite;
  static int suite_n = 0;
  if (!suite || suite_n != n) {
    suite = std::make_unique<G2Suite>(n);
    suite_n = n;
  }
  return *suite;
}

}  // namespace

extern "C" {

const char* qs_version(void) { return "1.0.0"; }

int qs_session_new(const char* type_label, const char* weights_spec,
                   long cap, qs_session** out) {
  if (!out) return QS_ERR_ARGUMENT;
  *out = nullptr;
  return guarded(nullptr, [&]() -> int {
    if (!type_label || !weights_spec) {
      throw std::invalid_argument("type_label and weights_spec are required");
    }
    auto cd = CartanDatum::parse(type_label);
    if (!cd) {
      set_error(nullptr, std::string("unknown Cartan type: ") + type_label);
      return QS_ERR_UNSUPPORTED;
    }
    const long limit = cap > 0 ? cap : kDefaultCap;
    const unsigned long long order = group_order(cd->family, cd->rank);
    if (order == 0 ||
        order > static_cast<unsigned long long>(limit)) {
      std::ostringstream msg;
      msg << "group order " << order << " exceeds the session cap " << limit;
      set_error(nullptr, msg.str());
      return QS_ERR_UNSUPPORTED;
    }
    auto seeds = resolve_seeds(*cd, weights_spec);
    auto W = WeylGroup::generate(*cd);
    auto session = std::make_unique<qs_session>();
    session->type = cd->label();
    session->ctx = std::make_unique<SchurContext>(
        WeightSet::close_under_W(std::move(W), std::move(seeds)));
    *out = session.release();
    return QS_OK;
  });
}

void qs_session_free(qs_session* s) { delete s; }

const char* qs_last_error(const qs_session* s) {
  return s ? s->last_error.c_str() : global_error().c_str();
}

int qs_info_json(qs_session* s, char** out_json) {
  if (!s || !out_json) return QS_ERR_ARGUMENT;
  return guarded(s, [&] { return emit(info_json(*s->ctx, s->type), out_json); });
}

int qs_hecke_cbasis_json(qs_session* s, char** out_json) {
  if (!s || !out_json) return QS_ERR_ARGUMENT;
  return guarded(s, [&] {
    const WeylGroup& W = s->ctx->group();
    ordered_json j = ordered_json::array();
    for (int w = 0; w < static_cast<int>(W.size()); ++w) {
      j.push_back(ordered_json{{"w", w},
                               {"word", W.word_str(w)},
                               {"coeffs", hecke_json(W, s->ctx->hecke().kl_elt(w))}});
    }
    return emit(j, out_json);
  });
}

int qs_tmodule_cbasis_json(qs_session* s, char** out_json) {
  if (!s || !out_json) return QS_ERR_ARGUMENT;
  return guarded(s, [&] {
    ordered_json j = ordered_json::array();
    for (int i = 0; i < static_cast<int>(s->ctx->weights().size()); ++i) {
      j.push_back(ordered_json{
          {"i", i},
          {"weight", weight_json(s->ctx->weights().weight(i))},
          {"coeffs", telement_json(s->ctx->tmodule().canonical(i))}});
    }
    return emit(j, out_json);
  });
}

int qs_tmodule_bar_json(qs_session* s, char** out_json) {
  if (!s || !out_json) return QS_ERR_ARGUMENT;
  return guarded(s, [&] {
    ordered_json j = ordered_json::array();
    for (int i = 0; i < static_cast<int>(s->ctx->weights().size()); ++i) {
      j.push_back(ordered_json{
          {"i", i},
          {"weight", weight_json(s->ctx->weights().weight(i))},
          {"coeffs",
           telement_json(s->ctx->tmodule().bar(TElement::basis(i)))}});
    }
    return emit(j, out_json);
  });
}

int qs_schur_cbasis_json(qs_session* s, long xi, char** out_json) {
  if (!s || !out_json) return QS_ERR_ARGUMENT;
  return guarded(s, [&]() -> int {
    if (int rc = check_xi_range(s, xi); rc != QS_OK) return rc;
    auto entry = [&](int x) {
      ordered_json j = xi_header_json(*s->ctx, x);
      j["matrix"] = schur_json(s->ctx->canonical(x));
      j["std_coords"] = coords_json(s->ctx->canonical_std_coords(x));
      return j;
    };
    if (xi >= 0) return emit(entry(static_cast<int>(xi)), out_json);
    ordered_json j = ordered_json::array();
    for (int x = 0; x < static_cast<int>(s->ctx->dim()); ++x) {
      j.push_back(entry(x));
    }
    return emit(j, out_json);
  });
}

int qs_schur_compose_json(qs_session* s, long x, long y, char** out_json) {
  if (!s || !out_json) return QS_ERR_ARGUMENT;
  return guarded(s, [&]() -> int {
    if (x < 0 || y < 0) {
      set_error(s, "triple index out of range");
      return QS_ERR_ARGUMENT;
    }
    if (int rc = check_xi_range(s, x); rc != QS_OK) return rc;
    if (int rc = check_xi_range(s, y); rc != QS_OK) return rc;
    const SchurElement prod = s->ctx->compose(
        s->ctx->canonical(static_cast<int>(x)),
        s->ctx->canonical(static_cast<int>(y)));
    ordered_json j{{"x", x},
                   {"y", y},
                   {"matrix", schur_json(prod)},
                   {"canonical_coords",
                    coords_json(s->ctx->coords_canonical(prod))}};
    return emit(j, out_json);
  });
}

int qs_schur_coords_json(qs_session* s, long xi, char** out_json) {
  if (!s || !out_json) return QS_ERR_ARGUMENT;
  return guarded(s, [&]() -> int {
    if (int rc = check_xi_range(s, xi); rc != QS_OK) return rc;
    auto entry = [&](int x) {
      ordered_json j = xi_header_json(*s->ctx, x);
      j["std_coords"] = coords_json(s->ctx->canonical_std_coords(x));
      return j;
    };
    if (xi >= 0) return emit(entry(static_cast<int>(xi)), out_json);
    ordered_json j = ordered_json::array();
    for (int x = 0; x < static_cast<int>(s->ctx->dim()); ++x) {
      j.push_back(entry(x));
    }
    return emit(j, out_json);
  });
}

int qs_verify_json(qs_session* s, const char* suite,
                   const char* options_json, char** out_json, int* out_pass) {
  if (!s || !suite || !out_json || !out_pass) return QS_ERR_ARGUMENT;
  *out_pass = 0;
  return guarded(s, [&]() -> int {
    ordered_json opts = ordered_json::object();
    if (options_json && *options_json) {
      try {
        opts = ordered_json::parse(options_json);
      } catch (const std::exception& e) {
        throw std::invalid_argument("options are not valid JSON: " +
                                    std::string(e.what()));
      }
    }
    const std::string name = suite;
    if (name == "duality") {
      std::vector<mpq_class> qs;
      if (opts.contains("q_samples")) {
        for (const auto& v : opts.at("q_samples")) {
          qs.push_back(parse_rational(v.get<std::string>()));
        }
      } else {
        qs = {mpq_class(1), mpq_class(2), mpq_class(3, 2), mpq_class(5, 2)};
      }
      const bool require_regular =
          opts.value("require_regular", true);
      const DualityReport rep = s->ctx->verify_duality(qs, require_regular);
      *out_pass = rep.pass ? 1 : 0;
      return emit(duality_report_json(rep), out_json);
    }
    if (name == "positivity") {
      const PositivityReport rep = s->ctx->verify_positivity();
      *out_pass = rep.pass ? 1 : 0;
      return emit(positivity_report_json(rep), out_json);
    }
    if (name == "bar") {
      const int samples = opts.value("samples", 1000);
      const std::uint64_t seed = opts.value("seed", 20260819ull);
      if (samples < 1) throw std::invalid_argument("samples must be >= 1");
      const BarCompatReport rep = s->ctx->verify_bar_compat(samples, seed);
      *out_pass = rep.pass ? 1 : 0;
      return emit(bar_compat_report_json(rep), out_json);
    }
    throw std::invalid_argument("unknown suite: " + name);
  });
}

int qs_dump_json(qs_session* s, char** out_json) {
  if (!s || !out_json) return QS_ERR_ARGUMENT;
  return guarded(s, [&] { return emit(dump_json(*s->ctx, s->type), out_json); });
}

int qs_g2_corpus_json(const char* suite, int n, char** out_json,
                      int* out_pass) {
  if (!suite || !out_json || !out_pass) return QS_ERR_ARGUMENT;
  *out_pass = 0;
  return guarded(nullptr, [&]() -> int {
    const std::string name = suite;
    const G2Suite& g2 = cached_g2_suite(n);
    CorpusReport rep;
    if (name == "A" || name == "bar") {
      rep = g2.run_bar_corpus();
    } else if (name == "B" || name == "action") {
      rep = g2.run_action_corpus();
    } else if (name == "C" || name == "relation") {
      rep = g2.run_relation_corpus();
    } else {
      throw std::invalid_argument("unknown corpus suite: " + name);
    }
    *out_pass = rep.pass ? 1 : 0;
    return emit(corpus_report_json(rep), out_json);
  });
}

int qs_g2_spanned_dimension(int n, const char* q_value, long* out_dim) {
  if (!q_value || !out_dim) return QS_ERR_ARGUMENT;
  *out_dim = 0;
  return guarded(nullptr, [&]() -> int {
    const mpq_class q = parse_rational(q_value);
    *out_dim = static_cast<long>(cached_g2_suite(n).spanned_dimension(q));
    return QS_OK;
  });
}

void qs_string_free(char* s) { std::free(s); }

}  // extern "C"
