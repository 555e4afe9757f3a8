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

#include "weightsets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qschur {

ShiftedWeight antidominant_rep(const CartanDatum& cd, ShiftedWeight w) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int k = 0; k < cd.rank; ++k) {
      if (w.m[static_cast<std::size_t>(k)] > 0) {
        w = reflect(cd, w, k);
        moved = true;
        break;
      }
    }
  }
  return w;
}

WeightSet WeightSet::close_under_W(std::shared_ptr<const WeylGroup> W,
                                   const std::vector<ShiftedWeight>& seeds) {
  const CartanDatum& cd = W->datum();
  const int d = cd.rank;
  for (const auto& s : seeds)
    if (static_cast<int>(s.m.size()) != d)
      throw std::invalid_argument("close_under_W: seed rank mismatch");

  // Closure under all simple reflections, collected per antidominant
  // representative.
  std::set<ShiftedWeight> closure;
  std::vector<ShiftedWeight> queue;
  for (const auto& s : seeds)
    if (closure.insert(s).second) queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int k = 0; k < d; ++k) {
      ShiftedWeight img = reflect(cd, queue[head], k);
      if (closure.insert(img).second) queue.push_back(std::move(img));
    }
  }

  std::set<ShiftedWeight> antidoms;
  for (const auto& w : closure) antidoms.insert(antidominant_rep(cd, w));

  WeightSet ws;
  ws.W_ = W;
  for (const auto& lo : antidoms) {
    LinkageClass cls;
    cls.antidom = lo;
    for (int k = 0; k < d; ++k)
      if (lo.m[static_cast<std::size_t>(k)] == 0) cls.J |= 1u << k;
    cls.w0J = W->parabolic_longest(cls.J);
    cls.coset_reps = W->min_coset_reps(cls.J);
    for (int rep : cls.coset_reps) {
      const ShiftedWeight img = W->act(lo, rep);
      const int idx = static_cast<int>(ws.weights_.size());
      if (!ws.index_.emplace(img, idx).second)
        throw std::logic_error("close_under_W: orbit enumeration collided");
      ws.weights_.push_back(img);
      cls.members.push_back(idx);
      ws.class_of_.push_back(static_cast<int>(ws.classes_.size()));
      ws.pos_of_.push_back(static_cast<int>(cls.members.size()) - 1);
    }
    ws.classes_.push_back(std::move(cls));
  }
  if (ws.weights_.size() != closure.size())
    throw std::logic_error("close_under_W: orbit enumeration incomplete");

  ws.act_.resize(ws.weights_.size());
  for (std::size_t i = 0; i < ws.weights_.size(); ++i) {
    ws.act_[i].resize(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
      const ShiftedWeight img = reflect(cd, ws.weights_[i], k);
      ws.act_[i][static_cast<std::size_t>(k)] = ws.index_.at(img);
    }
  }
  return ws;
}

std::optional<int> WeightSet::index_of(const ShiftedWeight& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int WeightSet::act(int i, int w) const {
  int cur = i;
  for (int k : W_->word(w)) cur = act_gen(cur, k);
  return cur;
}

bool WeightSet::has_regular_class() const {
  for (const auto& cls : classes_)
    if (cls.J == 0) return true;
  return false;
}

std::vector<ShiftedWeight> g2_xbar_seeds(int n) {
  if (n < 0) throw std::invalid_argument("g2_xbar_seeds: negative n");
  std::vector<ShiftedWeight> seeds;
  for (long a = 0; a <= n; ++a)
    for (long b = a; b <= n; ++b)
      seeds.push_back(g2_pairings(G2Delta{a, b, -a - b}));
  return seeds;
}

XiSet::XiSet(const WeightSet& ws) : ws_(&ws) {
  const WeylGroup& W = ws.group();
  const int nc = static_cast<int>(ws.class_count());
  for (int gamma = 0; gamma < nc; ++gamma) {
    const std::uint32_t Jg = ws.linkage_class(gamma).J;
    for (int nu = 0; nu < nc; ++nu) {
      const std::uint32_t Jn = ws.linkage_class(nu).J;
      std::vector<int>& blk = blocks_[{gamma, nu}];
      for (int g : W.double_coset_min_reps(Jg, Jn)) {
        const int x = static_cast<int>(triples_.size());
        triples_.push_back(XiTriple{gamma, g, nu});
        cosets_.push_back(W.double_coset(Jg, g, Jn));
        std::vector<int> rows;
        for (int w : cosets_.back().elements)
          if ((W.ldesc(w) & Jg) == 0) rows.push_back(w);
        row_reps_.push_back(std::move(rows));
        index_.emplace(std::make_tuple(gamma, g, nu), x);
        blk.push_back(x);
      }
    }
  }
}

std::optional<int> XiSet::index_of(int gamma, int g, int nu) const {
  auto it = index_.find(std::make_tuple(gamma, g, nu));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::pair<int, int> XiSet::pair_of(int x) const {
  const XiTriple& t = triples_[static_cast<std::size_t>(x)];
  const int i = ws_->act(ws_->antidom_index(t.gamma), t.g);
  return {i, ws_->antidom_index(t.nu)};
}

std::optional<int> XiSet::xi_of_pair(int i, int j) const {
  const int nu = ws_->class_of(j);
  if (j != ws_->antidom_index(nu)) return std::nullopt;
  const int gamma = ws_->class_of(i);
  const int w =
      ws_->linkage_class(gamma).coset_reps[static_cast<std::size_t>(ws_->pos_in_class(i))];
  const auto dc = ws_->group().double_coset(ws_->linkage_class(gamma).J, w,
                                            ws_->linkage_class(nu).J);
  return index_of(gamma, dc.gmin, nu);
}

bool XiSet::in_transversal(int i, int j) const {
  if (!antidominant(ws_->weight(j))) return false;
  const std::uint32_t Jn = ws_->linkage_class(ws_->class_of(j)).J;
  for (int k = 0; k < ws_->group().rank(); ++k)
    if ((Jn >> k & 1u) && descent_sign(ws_->weight(i), k) == DescentSign::Down)
      return false;
  return true;
}

long XiSet::d_exponent(int x) const {
  const XiTriple& t = triples_[static_cast<std::size_t>(x)];
  const WeylGroup& W = ws_->group();
  return static_cast<long>(W.length(gplus(x))) -
         static_cast<long>(W.length(ws_->linkage_class(t.nu).w0J));
}

long XiSet::orbit_dim(int x) const {
  const XiTriple& t = triples_[static_cast<std::size_t>(x)];
  const WeylGroup& W = ws_->group();
  return static_cast<long>(W.length(gplus(x))) +
         static_cast<long>(W.length(W.longest())) -
         static_cast<long>(W.length(ws_->linkage_class(t.gamma).w0J)) -
         static_cast<long>(W.length(ws_->linkage_class(t.nu).w0J));
}

int XiSet::diagonal(int c) const {
  const auto x = index_of(c, ws_->group().identity(), c);
  if (!x) throw std::logic_error("diagonal: missing identity triple");
  return *x;
}

const std::vector<int>& XiSet::block(int gamma, int nu) const {
  return blocks_.at({gamma, nu});
}

}  // namespace qschur
