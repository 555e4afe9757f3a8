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

#include "schur.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qschur {

bool SchurElement::is_zero() const {
  for (const auto& v : a_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

SchurElement& SchurElement::operator+=(const SchurElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("SchurElement: dim mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

SchurElement& SchurElement::operator-=(const SchurElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("SchurElement: dim mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

SchurElement& SchurElement::operator*=(const Laurent& c) {
  for (auto& v : a_) v *= c;
  return *this;
}

SchurElement SchurElement::operator+(const SchurElement& o) const {
  SchurElement r = *this;
  r += o;
  return r;
}

SchurElement SchurElement::operator-(const SchurElement& o) const {
  SchurElement r = *this;
  r -= o;
  return r;
}

SchurElement SchurElement::operator*(const Laurent& c) const {
  SchurElement r = *this;
  r *= c;
  return r;
}

SchurElement SchurElement::mul(const SchurElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("SchurElement::mul: dim");
  SchurElement out(n_);
  const int n = static_cast<int>(n_);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Laurent& x = entry(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const Laurent& y = o.entry(k, j);
        if (y.is_zero()) continue;
        out.add_entry(i, j, x * y);
      }
    }
  }
  return out;
}

SchurContext::SchurContext(WeightSet ws)
    : W_(ws.group_ptr()),
      ws_(std::move(ws)),
      H_(W_),
      xi_(ws_),
      T_(ws_, H_),
      eta_(xi_.size()),
      std_(xi_.size()),
      can_(xi_.size()),
      can_coords_(xi_.size()) {}

const SchurElement& SchurContext::eta(int x) const {
  auto& slot = eta_[static_cast<std::size_t>(x)];
  if (slot) return *slot;
  const XiTriple& t = xi_.triple(x);
  const LinkageClass& cn = ws_.linkage_class(t.nu);
  const long lg = static_cast<long>(W_->length(t.g));
  TElement col0;
  for (int w : xi_.row_reps(x)) {
    const int i = ws_.act(ws_.antidom_index(t.gamma), w);
    col0.add_term(i, Laurent::q_power(lg - static_cast<long>(W_->length(w))));
  }
  auto S = std::make_unique<SchurElement>(ws_.size());
  for (std::size_t pos = 0; pos < cn.coset_reps.size(); ++pos) {
    const TElement col = T_.act_w(col0, cn.coset_reps[pos]);
    const int j = cn.members[pos];
    for (const auto& [i, c] : col.terms()) S->set_entry(i, j, c);
  }
  slot = std::move(S);
  return *slot;
}

SchurElement SchurContext::phi(int x) const {
  const XiTriple& t = xi_.triple(x);
  const long e = static_cast<long>(W_->length(ws_.linkage_class(t.nu).w0J)) -
                 static_cast<long>(W_->length(ws_.linkage_class(t.gamma).w0J)) -
                 static_cast<long>(W_->length(t.g));
  return eta(x) * Laurent::q_power(e);
}

const SchurElement& SchurContext::std_elt(int x) const {
  auto& slot = std_[static_cast<std::size_t>(x)];
  if (slot) return *slot;
  const XiTriple& t = xi_.triple(x);
  const long e = static_cast<long>(W_->length(xi_.gplus(x))) -
                 static_cast<long>(W_->length(ws_.linkage_class(t.gamma).w0J)) -
                 static_cast<long>(W_->length(t.g));
  slot = std::make_unique<SchurElement>(eta(x) * Laurent::q_power(e));
  return *slot;
}

const SchurElement& SchurContext::canonical(int x) const {
  auto& slot = can_[static_cast<std::size_t>(x)];
  if (slot) return *slot;
  const XiTriple& t = xi_.triple(x);
  auto S = std::make_unique<SchurElement>(std_elt(x));
  auto coords = std::make_unique<std::map<int, Laurent>>();
  (*coords)[x] = Laurent::one();
  for (int y : xi_.block(t.gamma, t.nu)) {
    if (y == x) continue;
    const XiTriple& ty = xi_.triple(y);
    if (ty.g == t.g || !W_->bruhat_leq(ty.g, t.g)) continue;
    const Laurent p = H_.kl_p(xi_.gplus(y), xi_.gplus(x));
    if (p.is_zero()) continue;
    *S += std_elt(y) * p;
    (*coords)[y] = p;
  }
  can_coords_[static_cast<std::size_t>(x)] = std::move(coords);
  slot = std::move(S);
  return *slot;
}

const std::map<int, Laurent>& SchurContext::canonical_std_coords(int x) const {
  canonical(x);
  return *can_coords_[static_cast<std::size_t>(x)];
}

SchurElement SchurContext::phi_direct(int x) const {
  const XiTriple& t = xi_.triple(x);
  const LinkageClass& cn = ws_.linkage_class(t.nu);
  HeckeElement h = H_.subset_sum(xi_.coset(x).elements);
  h *= Laurent::q_power(static_cast<long>(W_->length(cn.w0J)));
  const TElement col0 = T_.omega_inv(t.gamma, h);
  SchurElement S(ws_.size());
  for (std::size_t pos = 0; pos < cn.coset_reps.size(); ++pos) {
    const TElement col = T_.act_w(col0, cn.coset_reps[pos]);
    const int j = cn.members[pos];
    for (const auto& [i, c] : col.terms()) S.set_entry(i, j, c);
  }
  return S;
}

TElement SchurContext::apply(const SchurElement& S, const TElement& v) const {
  TElement out;
  const int n = static_cast<int>(ws_.size());
  for (const auto& [j, c] : v.terms()) {
    for (int i = 0; i < n; ++i) {
      const Laurent& e = S.entry(i, j);
      if (!e.is_zero()) out.add_term(i, e * c);
    }
  }
  return out;
}

SchurElement SchurContext::bar(const SchurElement& S) const {
  SchurElement out(ws_.size());
  const int n = static_cast<int>(ws_.size());
  for (std::size_t c = 0; c < ws_.class_count(); ++c) {
    const LinkageClass& cls = ws_.linkage_class(static_cast<int>(c));
    TElement col0;
    const int j0 = cls.members.front();
    for (int i = 0; i < n; ++i) {
      const Laurent& e = S.entry(i, j0);
      if (!e.is_zero()) col0.add_term(i, e);
    }
    col0 = T_.bar(col0);
    for (std::size_t pos = 0; pos < cls.coset_reps.size(); ++pos) {
      const TElement col = T_.act_w(col0, cls.coset_reps[pos]);
      const int j = cls.members[pos];
      for (const auto& [i, cv] : col.terms()) out.set_entry(i, j, cv);
    }
  }
  return out;
}

bool SchurContext::is_member(const SchurElement& S) const {
  const int n = static_cast<int>(ws_.size());
  const int d = W_->rank();
  const Laurent qinv = Laurent::q_power(-1);
  const Laurent drop = Laurent::q_power(-1) - Laurent::q_power(1);
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < n; ++i) {
      const DescentSign si = descent_sign(ws_.weight(i), k);
      const int ik = ws_.act_gen(i, k);
      for (int j = 0; j < n; ++j) {
        const DescentSign sj = descent_sign(ws_.weight(j), k);
        const int jk = ws_.act_gen(j, k);
        const Laurent& c = S.entry(i, j);
        if (si == DescentSign::Down && sj == DescentSign::Fixed) {
          if (c != qinv * S.entry(ik, j)) return false;
        } else if (si == DescentSign::Fixed && sj == DescentSign::Down) {
          if (c != qinv * S.entry(i, jk)) return false;
        } else if (si == DescentSign::Up && sj == DescentSign::Down) {
          if (c != S.entry(ik, jk)) return false;
        } else if (si == DescentSign::Down && sj == DescentSign::Down) {
          if (c != S.entry(ik, jk) + drop * S.entry(i, jk)) return false;
        }
      }
    }
  }
  return true;
}

std::map<int, Laurent> SchurContext::coords_std(const SchurElement& S) const {
  std::map<int, Laurent> out;
  for (int x = 0; x < static_cast<int>(xi_.size()); ++x) {
    const auto [i, j] = xi_.pair_of(x);
    const Laurent& e = S.entry(i, j);
    if (e.is_zero()) continue;
    const XiTriple& t = xi_.triple(x);
    const long back =
        static_cast<long>(W_->length(ws_.linkage_class(t.gamma).w0J)) +
        static_cast<long>(W_->length(t.g)) -
        static_cast<long>(W_->length(xi_.gplus(x)));
    out[x] = e * Laurent::q_power(back);
  }
  SchurElement acc(ws_.size());
  for (const auto& [x, c] : out) acc += std_elt(x) * c;
  if (acc != S) {
    throw std::invalid_argument(
        "coords_std: element is outside the standard basis span");
  }
  return out;
}

std::map<int, Laurent> SchurContext::coords_canonical(
    const SchurElement& S) const {
  std::map<int, Laurent> c = coords_std(S);
  std::vector<int> order;
  order.reserve(xi_.size());
  for (int x = 0; x < static_cast<int>(xi_.size()); ++x) order.push_back(x);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return W_->length(xi_.triple(a).g) > W_->length(xi_.triple(b).g);
  });
  std::map<int, Laurent> out;
  for (int x : order) {
    auto it = c.find(x);
    if (it == c.end() || it->second.is_zero()) continue;
    const Laurent a = it->second;
    out[x] = a;
    for (const auto& [y, p] : canonical_std_coords(x)) {
      auto jt = c.find(y);
      Laurent v = (jt == c.end()) ? Laurent::zero() : jt->second;
      v -= a * p;
      if (v.is_zero()) {
        if (jt != c.end()) c.erase(jt);
      } else {
        c[y] = v;
      }
    }
  }
  if (!c.empty()) {
    throw std::logic_error("coords_canonical: elimination left a remainder");
  }
  return out;
}

RatMat SchurContext::eval(const SchurElement& S, const mpq_class& q) const {
  const std::size_t n = ws_.size();
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Laurent& e = S.entry(static_cast<int>(i), static_cast<int>(j));
      if (!e.is_zero()) m.at(i, j) = e.eval(q);
    }
  }
  return m;
}

DualitySample SchurContext::duality_sample(const mpq_class& q) const {
  DualitySample s;
  s.q = q;
  const std::size_t N = ws_.size();
  const std::size_t nW = W_->size();
  const int d = W_->rank();

  // Right multiplication matrices for the generators, then for every
  // group element along reduced words.
  std::vector<RatMat> A(static_cast<std::size_t>(d), RatMat(N, N));
  for (int k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < N; ++i) {
      const TElement img = T_.act_gen(TElement::basis(static_cast<int>(i)), k);
      for (const auto& [r, c] : img.terms()) {
        A[static_cast<std::size_t>(k)].at(static_cast<std::size_t>(r), i) =
            c.eval(q);
      }
    }
  }
  std::vector<int> byLen;
  byLen.reserve(nW);
  for (std::size_t w = 0; w < nW; ++w) byLen.push_back(static_cast<int>(w));
  std::sort(byLen.begin(), byLen.end(), [&](int a, int b) {
    return W_->length(a) < W_->length(b);
  });
  std::vector<RatMat> R(nW);
  R[0] = RatMat::identity(N);
  for (int w : byLen) {
    if (w == 0) continue;
    int k = 0;
    while (!((W_->rdesc(w) >> k) & 1u)) ++k;
    R[static_cast<std::size_t>(w)] =
        A[static_cast<std::size_t>(k)].mul(R[static_cast<std::size_t>(
            W_->rmul(w, k))]);
  }

  // Standard basis matrices at the sample point, and the commutation
  // check against every generator.
  s.commutes = true;
  std::vector<RatMat> G;
  G.reserve(xi_.size());
  for (int x = 0; x < static_cast<int>(xi_.size()); ++x) {
    G.push_back(eval(std_elt(x), q));
    for (int k = 0; k < d; ++k) {
      const RatMat& Ak = A[static_cast<std::size_t>(k)];
      if (Ak.mul(G.back()) != G.back().mul(Ak)) s.commutes = false;
    }
  }

  EchelonBasis hr(N * N);
  for (std::size_t w = 0; w < nW; ++w) hr.add(R[w].flat());
  s.hecke_rank = hr.rank();

  // The centralizer of the algebra image is block diagonal with respect
  // to the linkage classes (it commutes with the class projectors, which
  // are standard basis elements), so the unknowns are the block entries.
  const std::size_t nc = ws_.class_count();
  std::vector<std::size_t> off(nc + 1, 0);
  for (std::size_t c = 0; c < nc; ++c) {
    const std::size_t m =
        ws_.linkage_class(static_cast<int>(c)).members.size();
    off[c + 1] = off[c] + m * m;
  }
  const std::size_t U = off[nc];

  EchelonBasis cons(U);
  bool squeezed = false;
  for (int x = 0; x < static_cast<int>(xi_.size()) && !squeezed; ++x) {
    const XiTriple& t = xi_.triple(x);
    const auto& mg = ws_.linkage_class(t.gamma).members;
    const auto& mn = ws_.linkage_class(t.nu).members;
    const std::size_t ng = mg.size();
    const std::size_t nn = mn.size();
    const RatMat& Gx = G[static_cast<std::size_t>(x)];
    for (std::size_t a = 0; a < ng; ++a) {
      for (std::size_t b = 0; b < nn; ++b) {
        std::vector<mpq_class> row(U);
        for (std::size_t c = 0; c < ng; ++c) {
          const mpq_class& g = Gx.at(static_cast<std::size_t>(mg[c]),
                                     static_cast<std::size_t>(mn[b]));
          if (g != 0) row[off[static_cast<std::size_t>(t.gamma)] + a * ng + c] += g;
        }
        for (std::size_t c = 0; c < nn; ++c) {
          const mpq_class& g = Gx.at(static_cast<std::size_t>(mg[a]),
                                     static_cast<std::size_t>(mn[c]));
          if (g != 0) row[off[static_cast<std::size_t>(t.nu)] + c * nn + b] -= g;
        }
        cons.add(std::move(row));
      }
    }
    // The span of the action matrices sits inside the centralizer (the
    // commutation check above witnesses this at the sample point), so
    // once the candidate dimension falls to the span's rank the two
    // spaces coincide and the remaining constraints are redundant.
    if (s.commutes && U - cons.rank() == s.hecke_rank) squeezed = true;
  }
  s.centralizer_dim = U - cons.rank();
  s.equals_span = s.commutes && s.centralizer_dim == s.hecke_rank;
  s.faithful = s.hecke_rank == nW;
  s.ok = s.commutes && s.equals_span && s.faithful && s.centralizer_dim == nW;
  return s;
}

DualityReport SchurContext::verify_duality(const std::vector<mpq_class>& qs,
                                           bool require_regular) const {
  DualityReport rep;
  rep.has_regular = ws_.has_regular_class();
  if (!rep.has_regular && require_regular) {
    rep.refused = true;
    rep.pass = false;
    rep.message =
        "refused: the weight set has no regular orbit, so the double "
        "centralizer property is not guaranteed; rerun without the "
        "regularity requirement to measure the dimensions anyway";
    return rep;
  }
  rep.pass = !qs.empty();
  for (const auto& q : qs) {
    rep.samples.push_back(duality_sample(q));
    if (!rep.samples.back().ok) rep.pass = false;
  }
  return rep;
}

PositivityReport SchurContext::verify_positivity() const {
  PositivityReport rep;
  const int nx = static_cast<int>(xi_.size());
  auto note = [&rep](const std::string& what) {
    ++rep.violations;
    if (rep.failures.size() < 8) rep.failures.push_back(what);
  };
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < nx; ++y) {
      const SchurElement prod = compose(canonical(x), canonical(y));
      ++rep.products_checked;
      for (const auto& [z, c] : coords_canonical(prod)) {
        if (!c.in_Nqq()) {
          std::ostringstream os;
          os << "product " << x << "*" << y << " at " << z << ": " << c.str();
          note(os.str());
        }
      }
    }
  }
  const int n = static_cast<int>(ws_.size());
  for (int x = 0; x < nx; ++x) {
    for (int i = 0; i < n; ++i) {
      const TElement img = apply(canonical(x), T_.canonical(i));
      ++rep.actions_checked;
      for (const auto& [j, c] : T_.canonical_coords(img)) {
        if (!c.in_Nqq()) {
          std::ostringstream os;
          os << "action " << x << " on " << i << " at " << j << ": "
             << c.str();
          note(os.str());
        }
      }
    }
  }
  rep.pass = rep.violations == 0;
  return rep;
}

BarCompatReport SchurContext::verify_bar_compat(int samples,
                                                std::uint64_t seed) const {
  BarCompatReport rep;
  std::mt19937_64 rng(seed);
  const int n = static_cast<int>(ws_.size());
  const int nx = static_cast<int>(xi_.size());
  const int nW = static_cast<int>(W_->size());
  auto rnd_int = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                     hi - lo + 1));
  };
  auto rnd_laurent = [&]() {
    Laurent v;
    const int terms = rnd_int(1, 2);
    for (int t = 0; t < terms; ++t) {
      int c = rnd_int(-3, 3);
      if (c == 0) c = 1;
      v += Laurent::monomial(rnd_int(-2, 2), c);
    }
    if (v.is_zero()) v = Laurent::one();
    return v;
  };
  for (int s = 0; s < samples; ++s) {
    SchurElement S(ws_.size());
    const int nterms = rnd_int(1, 3);
    for (int t = 0; t < nterms; ++t) {
      S += std_elt(rnd_int(0, nx - 1)) * rnd_laurent();
    }
    TElement v;
    const int vterms = rnd_int(1, 3);
    for (int t = 0; t < vterms; ++t) {
      v.add_term(rnd_int(0, n - 1), rnd_laurent());
    }
    HeckeElement h;
    const int hterms = rnd_int(1, 2);
    for (int t = 0; t < hterms; ++t) {
      h += HeckeElement::basis(rnd_int(0, nW - 1)) * rnd_laurent();
    }
    const TElement lhs = T_.bar(T_.act(apply(S, v), h));
    const TElement rhs = T_.act(apply(bar(S), T_.bar(v)), H_.bar(h));
    ++rep.checked;
    if (lhs != rhs) ++rep.mismatches;
  }
  rep.pass = rep.mismatches == 0;
  return rep;
}

std::string SchurContext::str(const SchurElement& S) const {
  std::ostringstream os;
  const int n = static_cast<int>(ws_.size());
  bool any = false;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Laurent& e = S.entry(i, j);
      if (e.is_zero()) continue;
      if (any) os << ", ";
      os << weight_str(W_->datum(), ws_.weight(i)) << "<-"
         << weight_str(W_->datum(), ws_.weight(j)) << ": " << e.str();
      any = true;
    }
  }
  if (!any) os << "0";
  return os.str();
}

}  // namespace qschur
