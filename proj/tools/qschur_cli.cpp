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

  Command-line front end for the qschur shared library.  Builds weight
  sets, prints bases and structure constants, runs verification suites,
  and emits JSON or aligned text.  Exit codes: 0 when all requested
  checks pass, 1 on a verification failure (with a machine-readable
  report on stderr), 2 on argument or usage errors.
*/

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qschur/qschur.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string type = "G2";
  std::string weights;
  std::string format = "text";
  std::string q_samples;
  std::string suite;
  int samples = 1000;
  long seed = 20260819;
  int jobs = 1;
  long cap = 0;
  int n = 2;
  long xi = -1;
  long compose_x = 0;
  long compose_y = 0;
  bool require_regular = true;
  bool dump_all = false;
};

struct SessionDeleter {
  void operator()(qs_session* s) const { qs_session_free(s); }
};
using SessionPtr = std::unique_ptr<qs_session, SessionDeleter>;

struct StringDeleter {
  void operator()(char* p) const { qs_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(kExitUsage);
}

SessionPtr open_session(const Options& opt) {
  if (opt.weights.empty()) {
    die_usage("a weight-set spec is required; pass --weights g2:n=N, "
              "--weights file:PATH, or an inline JSON array");
  }
  qs_session* raw = nullptr;
  const int rc =
      qs_session_new(opt.type.c_str(), opt.weights.c_str(), opt.cap, &raw);
  if (rc != QS_OK) die_usage(qs_last_error(nullptr));
  return SessionPtr(raw);
}

json fetch(qs_session* s, int (*fn)(qs_session*, char**)) {
  char* out = nullptr;
  if (fn(s, &out) != QS_OK) die_usage(qs_last_error(s));
  OwnedString owned(out);
  return json::parse(owned.get());
}

// Renders a {"exp": "coeff"} map as a readable Laurent polynomial.
std::string poly_str(const json& p) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& [exp, coeff] : p.items()) {
    std::string c = coeff.get<std::string>();
    const bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    std::string qpart;
    if (exp == "1") {
      qpart = "q";
    } else if (exp != "0") {
      qpart = "q^" + exp;
    }
    std::string term;
    if (qpart.empty()) {
      term = c;
    } else if (c == "1") {
      term = qpart;
    } else {
      term = c + "*" + qpart;
    }
    if (s.empty()) {
      s = negative ? "-" + term : term;
    } else {
      s += (negative ? " - " : " + ") + term;
    }
  }
  return s;
}

std::string weight_str(const json& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w.at(i).dump();
  }
  return s + ")";
}

std::string coords_str(const json& coords, const std::string& symbol) {
  if (coords.empty()) return "0";
  std::string s;
  for (const auto& pair : coords) {
    if (!s.empty()) s += "  +  ";
    s += "(" + poly_str(pair.at(1)) + ") " + symbol + "[" +
         pair.at(0).dump() + "]";
  }
  return s;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_info_text(const json& j) {
  std::cout << "type:          " << j.at("type").get<std::string>() << "\n"
            << "rank:          " << j.at("rank") << "\n"
            << "group order:   " << j.at("group_order") << "\n"
            << "weights:       " << j.at("weight_count") << "\n"
            << "classes:       " << j.at("class_count") << "\n"
            << "triples:       " << j.at("xi_count") << "\n"
            << "regular class: "
            << (j.at("has_regular_class").get<bool>() ? "yes" : "no") << "\n";
  std::cout << "\nclass  antidominant        J        size\n";
  int k = 0;
  for (const auto& c : j.at("classes")) {
    std::ostringstream row;
    row << k++;
    std::string line = row.str();
    line.resize(7, ' ');
    std::string anti = weight_str(c.at("antidominant"));
    anti.resize(anti.size() < 20 ? 20 : anti.size(), ' ');
    std::string jset = c.at("J").empty() ? "{}" : c.at("J").dump();
    jset.resize(jset.size() < 9 ? 9 : jset.size(), ' ');
    std::cout << line << anti << jset << c.at("size") << "\n";
  }
}

int cmd_info(const Options& opt) {
  SessionPtr s = open_session(opt);
  const json j = fetch(s.get(), qs_info_json);
  if (opt.format == "json") {
    print_json(j);
  } else {
    print_info_text(j);
  }
  return kExitPass;
}

int cmd_hecke_cbasis(const Options& opt) {
  SessionPtr s = open_session(opt);
  const json j = fetch(s.get(), qs_hecke_cbasis_json);
  if (opt.format == "json") {
    print_json(j);
    return kExitPass;
  }
  for (const auto& row : j) {
    std::cout << "C[" << row.at("w") << "]  "
              << row.at("word").get<std::string>() << ":  ";
    std::string line;
    for (const auto& term : row.at("coeffs")) {
      if (!line.empty()) line += "  +  ";
      line += "(" + poly_str(term.at("c")) + ") T[" +
              term.at("word").get<std::string>() + "]";
    }
    std::cout << (line.empty() ? "0" : line) << "\n";
  }
  return kExitPass;
}

int cmd_tmodule(const Options& opt, bool canonical) {
  SessionPtr s = open_session(opt);
  const json j =
      fetch(s.get(), canonical ? qs_tmodule_cbasis_json : qs_tmodule_bar_json);
  if (opt.format == "json") {
    print_json(j);
    return kExitPass;
  }
  const char* lhs = canonical ? "c" : "bar v";
  for (const auto& row : j) {
    std::cout << lhs << "[" << row.at("i") << "]  "
              << weight_str(row.at("weight")) << ":  "
              << coords_str(row.at("coeffs"), "v") << "\n";
  }
  return kExitPass;
}

int cmd_schur_cbasis(const Options& opt, bool matrices) {
  SessionPtr s = open_session(opt);
  char* out = nullptr;
  const int rc = matrices ? qs_schur_cbasis_json(s.get(), opt.xi, &out)
                          : qs_schur_coords_json(s.get(), opt.xi, &out);
  if (rc != QS_OK) die_usage(qs_last_error(s.get()));
  OwnedString owned(out);
  const json j = json::parse(owned.get());
  if (opt.format == "json") {
    print_json(j);
    return kExitPass;
  }
  auto print_one = [&](const json& row) {
    std::cout << "C[" << row.at("xi") << "]  gamma=" << row.at("gamma")
              << " g=" << row.at("g").get<std::string>()
              << " nu=" << row.at("nu") << ":\n";
    std::cout << "  std coords: " << coords_str(row.at("std_coords"), "phi")
              << "\n";
    if (matrices) {
      for (const auto& ent : row.at("matrix")) {
        std::cout << "  [" << ent.at(0) << "," << ent.at(1) << "] "
                  << poly_str(ent.at(2)) << "\n";
      }
    }
  };
  if (j.is_array()) {
    for (const auto& row : j) print_one(row);
  } else {
    print_one(j);
  }
  return kExitPass;
}

int cmd_schur_compose(const Options& opt) {
  SessionPtr s = open_session(opt);
  char* out = nullptr;
  if (qs_schur_compose_json(s.get(), opt.compose_x, opt.compose_y, &out) !=
      QS_OK) {
    die_usage(qs_last_error(s.get()));
  }
  OwnedString owned(out);
  const json j = json::parse(owned.get());
  if (opt.format == "json") {
    print_json(j);
    return kExitPass;
  }
  std::cout << "C[" << j.at("x") << "] * C[" << j.at("y") << "] = "
            << coords_str(j.at("canonical_coords"), "C") << "\n";
  return kExitPass;
}

json verify_options(const Options& opt) {
  json o = json::object();
  if (!opt.q_samples.empty()) {
    json arr = json::array();
    std::stringstream ss(opt.q_samples);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) die_usage("empty entry in --q-samples");
      arr.push_back(tok);
    }
    if (arr.empty()) die_usage("--q-samples needs at least one value");
    o["q_samples"] = arr;
  }
  o["require_regular"] = opt.require_regular;
  o["samples"] = opt.samples;
  o["seed"] = opt.seed;
  return o;
}

int finish_verify(const json& report, bool pass, const std::string& format) {
  if (format == "json") {
    print_json(report);
  } else {
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
  }
  if (!pass) {
    std::cerr << report.dump() << "\n";
    return kExitVerifyFail;
  }
  return kExitPass;
}

int cmd_schur_verify(const Options& opt) {
  SessionPtr s = open_session(opt);
  const std::string options = verify_options(opt).dump();
  char* out = nullptr;
  int pass = 0;
  if (qs_verify_json(s.get(), opt.suite.c_str(), options.c_str(), &out,
                     &pass) != QS_OK) {
    die_usage(qs_last_error(s.get()));
  }
  OwnedString owned(out);
  json report = json::parse(owned.get());
  if (opt.format != "json") {
    std::cout << "suite " << opt.suite << ": ";
  }
  return finish_verify(report, pass == 1, opt.format);
}

int cmd_g2_verify(const Options& opt) {
  char* out = nullptr;
  int pass = 0;
  if (qs_g2_corpus_json(opt.suite.c_str(), opt.n, &out, &pass) != QS_OK) {
    die_usage(qs_last_error(nullptr));
  }
  OwnedString owned(out);
  json report = json::parse(owned.get());

  // Suite C additionally checks that words in the generators span the
  // whole algebra at several sample points.
  if (pass == 1 && (opt.suite == "C" || opt.suite == "relation")) {
    Options info_opt = opt;
    info_opt.type = "G2";
    info_opt.weights = "g2:n=" + std::to_string(opt.n);
    SessionPtr s = open_session(info_opt);
    const long expected =
        fetch(s.get(), qs_info_json).at("xi_count").get<long>();
    std::vector<std::string> points = {"1", "2", "3/2", "5/2"};
    if (!opt.q_samples.empty()) {
      points.clear();
      std::stringstream ss(opt.q_samples);
      std::string tok;
      while (std::getline(ss, tok, ',')) points.push_back(tok);
    }
    json spans = json::array();
    for (const std::string& point : points) {
      long dim = 0;
      if (qs_g2_spanned_dimension(opt.n, point.c_str(), &dim) != QS_OK) {
        die_usage(qs_last_error(nullptr));
      }
      spans.push_back(json{{"q", point}, {"dim", dim}});
      if (dim != expected) pass = 0;
    }
    report["spanned"] = spans;
    report["xi_count"] = expected;
    report["pass"] = pass == 1;
  }

  if (opt.format != "json") {
    std::cout << "suite " << opt.suite << " (n=" << opt.n << "): "
              << report.at("checked") << " checked, "
              << report.at("mismatches") << " mismatches: ";
  }
  return finish_verify(report, pass == 1, opt.format);
}

int cmd_dump(const Options& opt) {
  SessionPtr s = open_session(opt);
  print_json(fetch(s.get(), qs_dump_json));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-Schur algebra toolkit"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opt;
  app.add_option("--type", opt.type, "Cartan type label, e.g. G2, B2, A3");
  app.add_option("--weights", opt.weights,
                 "weight-set spec: g2:n=N, file:PATH, or inline JSON array");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--q-samples", opt.q_samples,
                 "comma-separated rational sample points, e.g. 1,2,3/2");
  app.add_option("--samples", opt.samples, "random triples for the bar suite");
  app.add_option("--seed", opt.seed, "random seed for the bar suite");
  app.add_option("--jobs", opt.jobs, "worker count (accepted, runs serial)");
  app.add_option("--cap", opt.cap, "largest admissible Weyl group order");
  app.add_option("--n", opt.n, "weight-set size parameter for g2 suites");

  auto* info = app.add_subcommand("info", "group and weight-set census");

  auto* hecke = app.add_subcommand("hecke", "Hecke algebra tables");
  hecke->require_subcommand(1);
  auto* hecke_cbasis =
      hecke->add_subcommand("cbasis", "canonical basis of the Hecke algebra");

  auto* tmodule = app.add_subcommand("tmodule", "module T tables");
  tmodule->require_subcommand(1);
  auto* tmodule_cbasis =
      tmodule->add_subcommand("cbasis", "canonical basis of T");
  auto* tmodule_bar =
      tmodule->add_subcommand("bar", "bar involution on the standard basis");

  auto* schur = app.add_subcommand("schur", "q-Schur algebra tables");
  schur->require_subcommand(1);
  auto* schur_cbasis =
      schur->add_subcommand("cbasis", "canonical basis elements");
  schur_cbasis->add_option("--xi", opt.xi,
                           "single triple index (default: all)");
  auto* schur_coords = schur->add_subcommand(
      "coords", "standard-basis coordinates of canonical elements");
  schur_coords->add_option("--xi", opt.xi,
                           "single triple index (default: all)");
  auto* schur_compose =
      schur->add_subcommand("compose", "product of two canonical elements");
  schur_compose->add_option("x", opt.compose_x, "first triple index")
      ->required();
  schur_compose->add_option("y", opt.compose_y, "second triple index")
      ->required();
  auto* schur_verify =
      schur->add_subcommand("verify", "verification suites on the session");
  schur_verify
      ->add_option("--suite", opt.suite, "duality, positivity, or bar")
      ->required()
      ->check(CLI::IsMember({"duality", "positivity", "bar"}));
  bool force_diagnostics = false;
  schur_verify->add_flag("--force", force_diagnostics,
                         "run duality diagnostics even without a regular "
                         "class");

  auto* g2 = app.add_subcommand("g2", "type G2 corpus suites");
  g2->require_subcommand(1);
  auto* g2_verify = g2->add_subcommand("verify", "run a corpus suite");
  g2_verify->add_option("--suite", opt.suite, "A (bar), B (action), C (relation)")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C", "bar", "action", "relation"}));

  auto* dump = app.add_subcommand("dump", "full JSON dump of every table");
  dump->add_flag("--all", opt.dump_all, "emit every table (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  opt.require_regular = !force_diagnostics;

  try {
    if (info->parsed()) return cmd_info(opt);
    if (hecke_cbasis->parsed()) return cmd_hecke_cbasis(opt);
    if (tmodule_cbasis->parsed()) return cmd_tmodule(opt, true);
    if (tmodule_bar->parsed()) return cmd_tmodule(opt, false);
    if (schur_cbasis->parsed()) return cmd_schur_cbasis(opt, true);
    if (schur_coords->parsed()) return cmd_schur_cbasis(opt, false);
    if (schur_compose->parsed()) return cmd_schur_compose(opt);
    if (schur_verify->parsed()) return cmd_schur_verify(opt);
    if (g2_verify->parsed()) return cmd_g2_verify(opt);
    if (dump->parsed()) return cmd_dump(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}
