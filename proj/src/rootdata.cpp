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

#include "rootdata.hpp"

#include <gmpxx.h>

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qschur {

namespace {

std::vector<std::vector<int>> path_graph_cartan(int d) {
  std::vector<std::vector<int>> a(d, std::vector<int>(d, 0));
  for (int j = 0; j < d; ++j) {
    a[j][j] = 2;
    if (j + 1 < d) {
      a[j][j + 1] = -1;
      a[j + 1][j] = -1;
    }
  }
  return a;
}

}  // namespace

CartanDatum CartanDatum::make(char family, int rank) {
  CartanDatum cd;
  cd.family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  cd.rank = rank;
  const int d = rank;
  auto bad = [&](const char* why) {
    throw std::invalid_argument(std::string("bad Cartan datum ") +
                                cd.label() + ": " + why);
  };
  switch (cd.family) {
    case 'A':
      if (d < 1) bad("rank must be >= 1");
      cd.cartan = path_graph_cartan(d);
      break;
    case 'B':
      // Last simple root short: its coroot pairs to -2 against alpha_{d-1}.
      if (d < 2) bad("rank must be >= 2");
      cd.cartan = path_graph_cartan(d);
      cd.cartan[d - 1][d - 2] = -2;
      break;
    case 'C':
      if (d < 2) bad("rank must be >= 2");
      cd.cartan = path_graph_cartan(d);
      cd.cartan[d - 2][d - 1] = -2;
      break;
    case 'D':
      if (d < 3) bad("rank must be >= 3");
      cd.cartan = path_graph_cartan(d);
      cd.cartan[d - 1][d - 2] = 0;
      cd.cartan[d - 2][d - 1] = 0;
      cd.cartan[d - 1][d - 3] = -1;
      cd.cartan[d - 3][d - 1] = -1;
      break;
    case 'E': {
      if (d < 6 || d > 8) bad("rank must be 6, 7 or 8");
      // Bourbaki: chain 1-3-4-5-...-d with node 2 attached to node 4.
      cd.cartan.assign(d, std::vector<int>(d, 0));
      for (int j = 0; j < d; ++j) cd.cartan[j][j] = 2;
      auto join = [&](int x, int y) {
        cd.cartan[x - 1][y - 1] = -1;
        cd.cartan[y - 1][x - 1] = -1;
      };
      join(1, 3);
      join(2, 4);
      for (int j = 3; j < d; ++j) join(j, j + 1);
      break;
    }
    case 'F':
      if (d != 4) bad("rank must be 4");
      cd.cartan = path_graph_cartan(4);
      cd.cartan[2][1] = -2;  // alpha_2 long against short coroot alpha_3-vee
      break;
    case 'G':
      if (d != 2) bad("rank must be 2");
      // First simple root short; the long root pairs to -3 against its coroot.
      cd.cartan = {{2, -3}, {-1, 2}};
      break;
    default:
      bad("unknown family");
  }
  return cd;
}

std::optional<CartanDatum> CartanDatum::parse(std::string_view label) {
  if (label.size() < 2) return std::nullopt;
  char fam = label[0];
  int rank = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) return std::nullopt;
    rank = rank * 10 + (label[i] - '0');
  }
  try {
    return make(fam, rank);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string ShiftedWeight::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ",";
    os << m[i];
  }
  os << ")";
  return os.str();
}

ShiftedWeight reflect(const CartanDatum& cd, const ShiftedWeight& w, int k) {
  ShiftedWeight out = w;
  const std::int64_t mk = w.m[static_cast<std::size_t>(k)];
  if (mk == 0) return out;
  for (int j = 0; j < cd.rank; ++j)
    out.m[static_cast<std::size_t>(j)] -= mk * cd.cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  return out;
}

bool antidominant(const ShiftedWeight& w) {
  for (auto v : w.m)
    if (v > 0) return false;
  return true;
}

DescentSign descent_sign(const ShiftedWeight& w, int k) {
  const std::int64_t mk = w.m[static_cast<std::size_t>(k)];
  if (mk == 0) return DescentSign::Fixed;
  return mk < 0 ? DescentSign::Up : DescentSign::Down;
}

std::optional<int> dominance_compare(const CartanDatum& cd,
                                     const ShiftedWeight& a,
                                     const ShiftedWeight& b) {
  const int d = cd.rank;
  if (static_cast<int>(a.m.size()) != d || static_cast<int>(b.m.size()) != d)
    throw std::invalid_argument("weight rank mismatch");
  // Solve cartan * c = b - a exactly; b >= a iff c is integral and c >= 0.
  std::vector<std::vector<mpq_class>> aug(
      static_cast<std::size_t>(d), std::vector<mpq_class>(static_cast<std::size_t>(d) + 1));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) aug[j][k] = cd.cartan[j][k];
    aug[j][static_cast<std::size_t>(d)] = mpq_class(b.m[static_cast<std::size_t>(j)] - a.m[static_cast<std::size_t>(j)]);
  }
  // Gaussian elimination; the Cartan matrix is invertible for finite types.
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (aug[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("singular Cartan matrix");
    std::swap(aug[static_cast<std::size_t>(col)], aug[static_cast<std::size_t>(piv)]);
    const mpq_class inv = mpq_class(1) / aug[col][col];
    for (int k = col; k <= d; ++k) aug[col][k] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const mpq_class f = aug[r][col];
      for (int k = col; k <= d; ++k) aug[r][k] -= f * aug[col][k];
    }
  }
  bool any_pos = false, any_neg = false;
  for (int j = 0; j < d; ++j) {
    mpq_class c = aug[j][static_cast<std::size_t>(d)];
    c.canonicalize();
    if (c.get_den() != 1) return std::nullopt;
    if (c > 0) any_pos = true;
    if (c < 0) any_neg = true;
  }
  if (any_pos && any_neg) return std::nullopt;
  if (!any_pos && !any_neg) return 0;
  return any_pos ? -1 : 1;  // b - a positive means a < b
}

std::string G2Delta::str() const {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

ShiftedWeight g2_pairings(const G2Delta& d) {
  if (d.a + d.b + d.c != 0)
    throw std::invalid_argument("G2 delta coordinates must sum to zero");
  return ShiftedWeight({d.a - d.b, -d.a});
}

G2Delta g2_delta(const ShiftedWeight& w) {
  if (w.m.size() != 2) throw std::invalid_argument("expected rank-2 weight");
  G2Delta d;
  d.a = -w.m[1];
  d.b = -w.m[0] - w.m[1];
  d.c = w.m[0] + 2 * w.m[1];
  return d;
}

std::optional<ShiftedWeight> parse_weight(const CartanDatum& cd,
                                          std::string_view text) {
  std::vector<std::int64_t> vals;
  std::string cur;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == ' ') continue;
    if (ch == ',') {
      if (cur.empty()) return std::nullopt;
      vals.push_back(std::stoll(cur));
      cur.clear();
      continue;
    }
    if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch)))
      cur.push_back(ch);
    else
      return std::nullopt;
  }
  if (!cur.empty()) vals.push_back(std::stoll(cur));
  if (cd.family == 'G' && vals.size() == 3) {
    if (vals[0] + vals[1] + vals[2] != 0) return std::nullopt;
    return g2_pairings(G2Delta{vals[0], vals[1], vals[2]});
  }
  if (static_cast<int>(vals.size()) != cd.rank) return std::nullopt;
  return ShiftedWeight(std::move(vals));
}

std::string weight_str(const CartanDatum& cd, const ShiftedWeight& w) {
  if (cd.family == 'G') return g2_delta(w).str();
  return w.str();
}

}  // namespace qschur
