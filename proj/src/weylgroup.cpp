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

#include "weylgroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qschur {

std::shared_ptr<const WeylGroup> WeylGroup::generate(const CartanDatum& cd,
                                                     std::size_t cap) {
  auto g = std::shared_ptr<WeylGroup>(new WeylGroup());
  g->cd_ = cd;
  const int d = cd.rank;

  // Orbit of a regular antidominant tracking weight; the interior point
  // (-1,...,-1) has trivial stabilizer, so the orbit map w -> tracking*w
  // is a bijection onto the group.
  ShiftedWeight tracking(std::vector<std::int64_t>(static_cast<std::size_t>(d), -1));
  std::map<ShiftedWeight, int> index;
  std::vector<ShiftedWeight> weights{tracking};
  index.emplace(tracking, 0);
  g->length_.push_back(0);
  g->rmul_.emplace_back(static_cast<std::size_t>(d), -1);
  g->lmul_.emplace_back(static_cast<std::size_t>(d), -1);

  for (std::size_t head = 0; head < weights.size(); ++head) {
    for (int k = 0; k < d; ++k) {
      if (g->rmul_[head][static_cast<std::size_t>(k)] >= 0) continue;
      ShiftedWeight img = reflect(cd, weights[head], k);
      auto it = index.find(img);
      int child;
      if (it == index.end()) {
        child = static_cast<int>(weights.size());
        if (weights.size() + 1 > cap)
          throw std::length_error("Weyl group order exceeds cap " +
                                  std::to_string(cap));
        weights.push_back(img);
        index.emplace(std::move(img), child);
        g->length_.push_back(g->length_[head] + 1);
        g->rmul_.emplace_back(static_cast<std::size_t>(d), -1);
        g->lmul_.emplace_back(static_cast<std::size_t>(d), -1);
      } else {
        child = it->second;
      }
      g->rmul_[head][static_cast<std::size_t>(k)] = child;
      g->rmul_[static_cast<std::size_t>(child)][static_cast<std::size_t>(k)] = static_cast<int>(head);
    }
  }

  const std::size_t n = weights.size();
  // Left multiplication: s_j (w s_k) = (s_j w) s_k, so rows fill in BFS
  // (length) order from lmul[e][j] = s_j.
  for (int j = 0; j < d; ++j) g->lmul_[0][static_cast<std::size_t>(j)] = g->rmul_[0][static_cast<std::size_t>(j)];
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return g->length_[static_cast<std::size_t>(x)] < g->length_[static_cast<std::size_t>(y)];
  });
  for (int w : order) {
    if (w == 0) continue;
    // Pick any k with w s_k shorter; then w = (w s_k) s_k.
    int k = -1;
    for (int c = 0; c < d; ++c)
      if (g->length_[static_cast<std::size_t>(g->rmul(w, c))] < g->length_[static_cast<std::size_t>(w)]) {
        k = c;
        break;
      }
    const int parent = g->rmul(w, k);
    for (int j = 0; j < d; ++j)
      g->lmul_[static_cast<std::size_t>(w)][static_cast<std::size_t>(j)] =
          g->rmul(g->lmul(j, parent), k);
  }

  g->rdesc_.assign(n, 0);
  g->ldesc_.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    for (int k = 0; k < d; ++k) {
      if (g->length_[static_cast<std::size_t>(g->rmul(static_cast<int>(w), k))] < g->length_[w])
        g->rdesc_[w] |= 1u << k;
      if (g->length_[static_cast<std::size_t>(g->lmul(k, static_cast<int>(w)))] < g->length_[w])
        g->ldesc_[w] |= 1u << k;
    }
  }

  // ShortLex-least reduced word: greedily peel the smallest left descent.
  g->word_.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    std::vector<int> out;
    int cur = static_cast<int>(w);
    while (cur != 0) {
      int k = 0;
      while (!(g->ldesc_[static_cast<std::size_t>(cur)] >> k & 1u)) ++k;
      out.push_back(k);
      cur = g->lmul(k, cur);
    }
    g->word_[w] = std::move(out);
  }

  g->inv_.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    int cur = 0;  // w^{-1} reverses the reduced word
    const auto& wd = g->word_[w];
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) cur = g->rmul(cur, *it);
    g->inv_[w] = cur;
  }

  unsigned maxlen = 0;
  for (std::size_t w = 0; w < n; ++w)
    if (g->length_[w] > maxlen) {
      maxlen = g->length_[w];
      g->longest_ = static_cast<int>(w);
    }
  return g;
}

int WeylGroup::mul(int x, int y) const {
  int cur = x;
  for (int k : word(y)) cur = rmul(cur, k);
  return cur;
}

std::string WeylGroup::word_str(int w) const {
  const auto& wd = word(w);
  if (wd.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < wd.size(); ++i) {
    if (i) os << "*";
    os << "s" << wd[i] + 1;
  }
  return os.str();
}

std::optional<int> WeylGroup::parse_word(std::string_view text) const {
  if (text == "e" || text == "1" || text.empty()) return identity();
  int cur = identity();
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '*' || text[i] == ' ' || text[i] == '.') {
      ++i;
      continue;
    }
    if (text[i] != 's') return std::nullopt;
    ++i;
    int k = 0;
    bool got = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      k = k * 10 + (text[i] - '0');
      ++i;
      got = true;
    }
    if (!got || k < 1 || k > rank()) return std::nullopt;
    cur = rmul(cur, k - 1);
  }
  return cur;
}

bool WeylGroup::shortlex_less(int x, int y) const {
  if (length(x) != length(y)) return length(x) < length(y);
  return word(x) < word(y);
}

void WeylGroup::ensure_bruhat() const {
  if (!bruhat_.empty()) return;
  const std::size_t n = size();
  if (n > 20000)
    throw std::length_error("Bruhat table unsupported at this group order");
  bruhat_.assign(n * n, false);
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return length(a) < length(b);
  });
  // Lifting property: for s a right descent of y, x <= y iff
  // (xs < x ? xs <= ys : x <= ys).
  for (int y : order) {
    auto row = bruhat_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(y) * n);
    if (y == 0) {
      row[0] = true;
      continue;
    }
    int k = 0;
    while (!(rdesc(y) >> k & 1u)) ++k;
    const int ys = rmul(y, k);
    auto prev = bruhat_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(ys) * n);
    for (std::size_t x = 0; x < n; ++x) {
      const int xs = rmul(static_cast<int>(x), k);
      const bool xdown = length(xs) < length(static_cast<int>(x));
      row[static_cast<std::ptrdiff_t>(x)] =
          xdown ? prev[static_cast<std::ptrdiff_t>(xs)] : prev[static_cast<std::ptrdiff_t>(x)];
    }
    row[static_cast<std::ptrdiff_t>(y)] = true;
  }
}

bool WeylGroup::bruhat_leq(int x, int y) const {
  if (x == y) return true;
  if (length(x) >= length(y)) return false;
  ensure_bruhat();
  return bruhat_[static_cast<std::size_t>(y) * size() + static_cast<std::size_t>(x)];
}

std::vector<std::pair<int, int>> WeylGroup::bruhat_covers() const {
  // The order is graded by length, so covers are exactly the comparable
  // pairs one length apart.
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (length(y) == length(x) + 1 && bruhat_leq(x, y)) out.emplace_back(x, y);
  return out;
}

ShiftedWeight WeylGroup::act(const ShiftedWeight& i, int w) const {
  ShiftedWeight cur = i;
  for (int k : word(w)) cur = reflect(cd_, cur, k);
  return cur;
}

std::vector<int> WeylGroup::parabolic_elements(std::uint32_t J) const {
  std::vector<int> members{identity()};
  std::vector<bool> seen(size(), false);
  seen[0] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (int k = 0; k < rank(); ++k) {
      if (!(J >> k & 1u)) continue;
      const int nxt = rmul(members[head], k);
      if (!seen[static_cast<std::size_t>(nxt)]) {
        seen[static_cast<std::size_t>(nxt)] = true;
        members.push_back(nxt);
      }
    }
  }
  std::sort(members.begin(), members.end(),
            [&](int a, int b) { return shortlex_less(a, b); });
  return members;
}

int WeylGroup::parabolic_longest(std::uint32_t J) const {
  int best = identity();
  for (int w : parabolic_elements(J))
    if (length(w) > length(best)) best = w;
  return best;
}

std::vector<int> WeylGroup::min_coset_reps(std::uint32_t J) const {
  std::vector<int> reps;
  for (std::size_t w = 0; w < size(); ++w)
    if ((ldesc_[w] & J) == 0) reps.push_back(static_cast<int>(w));
  std::sort(reps.begin(), reps.end(),
            [&](int a, int b) { return shortlex_less(a, b); });
  return reps;
}

std::vector<int> WeylGroup::double_coset_min_reps(std::uint32_t J1,
                                                  std::uint32_t J2) const {
  std::vector<int> reps;
  for (std::size_t w = 0; w < size(); ++w)
    if ((ldesc_[w] & J1) == 0 && (rdesc_[w] & J2) == 0)
      reps.push_back(static_cast<int>(w));
  std::sort(reps.begin(), reps.end(),
            [&](int a, int b) { return shortlex_less(a, b); });
  return reps;
}

WeylGroup::DoubleCoset WeylGroup::double_coset(std::uint32_t J1, int g,
                                               std::uint32_t J2) const {
  std::vector<int> members{g};
  std::vector<bool> seen(size(), false);
  seen[static_cast<std::size_t>(g)] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const int w = members[head];
    for (int k = 0; k < rank(); ++k) {
      int imgs[2] = {-1, -1};
      if (J1 >> k & 1u) imgs[0] = lmul(k, w);
      if (J2 >> k & 1u) imgs[1] = rmul(w, k);
      for (int img : imgs) {
        if (img >= 0 && !seen[static_cast<std::size_t>(img)]) {
          seen[static_cast<std::size_t>(img)] = true;
          members.push_back(img);
        }
      }
    }
  }
  std::sort(members.begin(), members.end(),
            [&](int a, int b) { return shortlex_less(a, b); });
  DoubleCoset dc;
  dc.elements = members;
  dc.gmin = members.front();
  dc.gplus = members.back();
  // Minimal and maximal elements of a double coset are unique; anything
  // else indicates corrupted tables.
  if (members.size() > 1) {
    if (length(members[1]) == length(dc.gmin) ||
        length(members[members.size() - 2]) == length(dc.gplus))
      throw std::logic_error("double coset without unique extremes");
  }
  return dc;
}

}  // namespace qschur
