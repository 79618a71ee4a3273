/*
   Copyright 2026 the stv authors

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

#include "stv/chevalley.hpp"

#include <map>
#include <mutex>

namespace stv {

namespace {

// A-type roots are e_a - e_b; recover (a, b)
std::pair<int, int> linear_indices(const RootSystem& rs, Root r) {
  int a = -1, b = -1;
  const Vec& v = rs.root(r);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == Rat(1)) a = (int)i;
    if (v[i] == Rat(-1)) b = (int)i;
  }
  if (a < 0 || b < 0) throw ChevalleyError("not an A-type root");
  return {a, b};
}

}  // namespace

// ---------------------------------------------------------------------------
// Structure constants

ChevalleyBasis::ChevalleyBasis(const RootSystem& rs) : rs_(&rs) {
  size_t n = rs.size();
  n_.assign(n, std::vector<signed char>(n, 0));
  eta_.assign(n, std::vector<signed char>(n, 0));

  if (rs.type() == 'A') {
    // matrix-unit convention: [E_ab, E_bc] = E_ac
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (rs.sum_root({(int)i}, {(int)j}).idx < 0) continue;
        auto [a, b] = linear_indices(rs, {(int)i});
        auto [c, d] = linear_indices(rs, {(int)j});
        if (b == c)
          n_[i][j] = 1;
        else if (d == a)
          n_[i][j] = -1;
        else
          throw ChevalleyError("A-type sum pattern");
      }
  } else {
    // asymmetry function: B(a_i, a_j) = (a_i, a_j) for i > j, 1 on the
    // diagonal, 0 for i < j; eps(a, b) = (-1)^{B(a, b)} is bimultiplicative
    // with eps(a, a) = (-1)^{(a,a)/2}. Basis vectors of negative roots are
    // rescaled by tau = -1 so that [e_a, e_{-a}] = h_a.
    int l = rs.rank();
    auto B = [&](Root x, Root y) {
      long long s = 0;
      for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
          int bij = i == j ? 1 : (i > j ? rs.pairing_rr(rs.simple(i), rs.simple(j)) : 0);
          s += (long long)rs.coeff(i, x) * bij * rs.coeff(j, y);
        }
      return s;
    };
    auto tau = [&](Root x) { return rs.is_positive(x) ? 1 : -1; };
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Root s = rs.sum_root({(int)i}, {(int)j});
        if (s.idx < 0) continue;
        int eps = (B({(int)i}, {(int)j}) % 2 == 0) ? 1 : -1;
        n_[i][j] = (signed char)(eps * tau({(int)i}) * tau({(int)j}) * tau(s));
      }
  }

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Root s = rs.sum_root({(int)i}, {(int)j});
      if (s.idx < 0) continue;
      if (n_[i][j] != -n_[j][i]) throw ChevalleyError("structure constants not antisymmetric");
      if (n_[i][j] != 1 && n_[i][j] != -1) throw ChevalleyError("structure constant not a sign");
    }
  // eta is filled in by the representation constructor (matrix extraction)
}

int ChevalleyBasis::N(Root a, Root b) const {
  if (rs_->sum_root(a, b).idx < 0) throw ChevalleyError("N on a non-root sum");
  return n_[a.idx][b.idx];
}

const ChevalleyBasis& ChevalleyBasis::get(const RootSystem& rs) {
  static std::map<std::pair<char, int>, std::unique_ptr<ChevalleyBasis>> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> g(mu);
  auto key = std::make_pair(rs.type(), rs.rank());
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::unique_ptr<ChevalleyBasis>(new ChevalleyBasis(rs))).first;
    // force eta extraction where a matrix representation exists (not E8)
    if (!(rs.type() == 'E' && rs.rank() == 8)) (void)MicroweightRep::standard(rs);
  }
  return *it->second;
}

// ---------------------------------------------------------------------------
// GroupMatrix

GroupMatrix::GroupMatrix(RingPtr ring, int n, bool identity) : ring_(std::move(ring)), n_(n) {
  a_.assign((size_t)n * n, ring_->zero());
  if (identity)
    for (int i = 0; i < n; ++i) at(i, i) = ring_->one();
}

GroupMatrix GroupMatrix::operator*(const GroupMatrix& o) const {
  if (n_ != o.n_ || !ring_->same(*o.ring_)) throw ChevalleyError("matrix shape/ring mismatch");
  GroupMatrix r(ring_, n_, false);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const RingElem& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        const RingElem& y = o.at(k, j);
        if (y.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + x * y;
      }
    }
  return r;
}

bool GroupMatrix::operator==(const GroupMatrix& o) const { return !diff(o).has_value(); }

std::optional<std::pair<int, int>> GroupMatrix::diff(const GroupMatrix& o) const {
  if (n_ != o.n_) return std::make_pair(-1, -1);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!(at(i, j) == o.at(i, j))) return std::make_pair(i, j);
  return std::nullopt;
}

bool GroupMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// MicroweightRep

MicroweightRep::MicroweightRep(const RootSystem& rs, int k) : rs_(&rs), cb_(&ChevalleyBasis::get(rs)), k_(k) {
  bool dsum = rs.type() == 'D';
  if (rs.type() == 'A') {
    if (k != 1) throw ChevalleyError("UnsupportedRep: A-type reps are built for k = 1");
  } else if (rs.type() == 'D') {
    if (k != 1) throw ChevalleyError("UnsupportedRep: D-type reps are built for k = 1 (spin block appended)");
  } else if (rs.type() == 'E' && rs.rank() == 6) {
    if (k != 1) throw ChevalleyError("UnsupportedRep: E6 rep is built for k = 1");
  } else if (rs.type() == 'E' && rs.rank() == 7) {
    if (k != 7) throw ChevalleyError("UnsupportedRep: E7 rep is built for k = 7");
  } else {
    throw ChevalleyError("UnsupportedRep: no microweight representation for " + rs.label());
  }

  auto append_block = [&](int kk) {
    auto orbit = rs.weight_orbit(kk);
    top_.push_back((int)weights_.size());
    for (auto& w : orbit) {
      weights_.push_back(w);
      block_.push_back((int)top_.size() - 1);
    }
    bottom_.push_back((int)weights_.size() - 1);
  };
  append_block(k);
  if (dsum) append_block(rs.rank());
  nblocks_ = (int)top_.size();

  size_t n = rs.size(), d = weights_.size();
  shift_.assign(n, std::vector<int>(d, -1));
  sign_.assign(n, std::vector<signed char>(d, 0));
  moves_.assign(n, {});

  // sign table
  int l = rs.rank();
  auto Bf = [&](const std::vector<int>& x, const std::vector<int>& y) {
    long long s = 0;
    for (int i = 1; i <= l; ++i)
      for (int j = 1; j <= l; ++j) {
        int bij = i == j ? 1 : (i > j ? rs.pairing_rr(rs.simple(i), rs.simple(j)) : 0);
        s += (long long)x[i - 1] * bij * y[j - 1];
      }
    return s;
  };
  auto simple_coords = [&](const Vec& v) {
    std::vector<int> c(l);
    for (int i = 1; i <= l; ++i) {
      Rat x = dot(rs.fundamental_weight(i), v);
      if (!x.is_int()) throw ChevalleyError("vector not in the root lattice");
      c[i - 1] = (int)x.n;
    }
    return c;
  };

  for (size_t a = 0; a < n; ++a) {
    Root ra{(int)a};
    std::vector<int> acoord(l);
    for (int i = 1; i <= l; ++i) acoord[i - 1] = rs.coeff(i, ra);
    for (size_t w = 0; w < d; ++w) {
      if (rs.pairing(weights_[w], ra) != -1) continue;
      Vec target = weights_[w] + rs.root(ra);
      int t = weight_index(target);
      if (t < 0) throw ChevalleyError("weight raise left the orbit");
      int s;
      if (rs.type() == 'A') {
        s = 1;  // v_{e_b} -> v_{e_a} for alpha = e_a - e_b
      } else {
        std::vector<int> mu = simple_coords(weights_[w] - weights_[top_[block_[w]]]);
        int eps = (Bf(acoord, mu) % 2 == 0) ? 1 : -1;
        s = (rs.is_positive(ra) ? 1 : -1) * eps;
      }
      shift_[a][w] = t;
      sign_[a][w] = (signed char)s;
      moves_[a].push_back({t, (int)w, (signed char)s});
    }
  }

  // verify module commutators against the structure constants:
  //   [e_a, e_b] = N_{a,b} e_{a+b} (a+b a root), <lambda,a> id-part for b = -a,
  //   0 otherwise
  auto apply = [&](Root x, const std::vector<i64>& v) {
    std::vector<i64> r(d, 0);
    for (auto& mv : moves_[x.idx]) r[mv.to] += mv.s * v[mv.from];
    return r;
  };
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      Root ra{(int)a}, rb{(int)b};
      Root s = rs.sum_root(ra, rb);
      for (size_t w = 0; w < d; ++w) {
        std::vector<i64> v(d, 0);
        v[w] = 1;
        auto lhs1 = apply(ra, apply(rb, v));
        auto lhs2 = apply(rb, apply(ra, v));
        std::vector<i64> lhs(d);
        for (size_t t = 0; t < d; ++t) lhs[t] = lhs1[t] - lhs2[t];
        std::vector<i64> rhs(d, 0);
        if (s.idx >= 0) {
          auto e = apply(s, v);
          for (size_t t = 0; t < d; ++t) rhs[t] = cb_->n_[a][b] * e[t];
        } else if (rs.negate(ra).idx == (int)b) {
          rhs[w] = rs.pairing(weights_[w], ra);
        }
        if (lhs != rhs) throw ChevalleyError("module commutator disagrees with structure constants");
      }
    }

  // extract the Matsumoto constants over F5: ^{w_a(1)} x_b(1) = x_{s_a b}(eta)
  auto z5 = Ring::Zmod(5);
  auto& eta = const_cast<ChevalleyBasis*>(cb_)->eta_;
  for (size_t a = 0; a < n; ++a) {
    GroupMatrix wa = rho_w({(int)a}, z5->one());
    GroupMatrix wai = rho_w({(int)a}, -z5->one());  // w_a(u)^{-1} = w_a(-u)
    for (size_t b = 0; b < n; ++b) {
      Root sb = rs.reflect_root({(int)a}, {(int)b});
      GroupMatrix conj = wa * rho_x({(int)b}, z5->one()) * wai;
      int found = 0;
      for (int cand : {1, -1}) {
        if (conj == rho_x(sb, z5->integer(cand))) {
          eta[a][b] = (signed char)cand;
          found = 1;
          break;
        }
      }
      if (!found) throw ChevalleyError("Matsumoto conjugation not monomial");
    }
  }
}

int MicroweightRep::weight_index(const Vec& w) const {
  for (size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] == w) return (int)i;
  return -1;
}

const MicroweightRep& MicroweightRep::get(const RootSystem& rs, int k) {
  static std::map<std::tuple<char, int, int>, std::unique_ptr<MicroweightRep>> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> g(mu);
  auto key = std::make_tuple(rs.type(), rs.rank(), k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<MicroweightRep>(new MicroweightRep(rs, k))).first;
  return *it->second;
}

const MicroweightRep& MicroweightRep::standard(const RootSystem& rs) {
  int k = 1;
  if (rs.type() == 'E' && rs.rank() == 7) k = 7;
  return get(rs, k);
}

GroupMatrix MicroweightRep::identity(const RingPtr& r) const { return GroupMatrix(r, dim()); }

GroupMatrix MicroweightRep::rho_x(Root a, const RingElem& c) const {
  GroupMatrix m = identity(c.ring());
  for (auto& mv : moves_[a.idx])
    m.at(mv.to, mv.from) = mv.s == 1 ? c : -c;
  return m;
}

void MicroweightRep::mul_right_x(GroupMatrix& m, Root a, const RingElem& c) const {
  // m := m (1 + c e_a): column[from] += c * s * column[to]
  if (c.is_zero()) return;
  int n = m.n();
  for (auto& mv : moves_[a.idx]) {
    RingElem f = mv.s == 1 ? c : -c;
    for (int i = 0; i < n; ++i) {
      const RingElem& src = m.at(i, mv.to);
      if (!src.is_zero()) m.at(i, mv.from) = m.at(i, mv.from) + src * f;
    }
  }
}

GroupMatrix MicroweightRep::rho_w(Root a, const RingElem& u) const {
  RingElem ui = u.inverse();
  GroupMatrix m = identity(u.ring());
  mul_right_x(m, a, u);
  mul_right_x(m, rs_->negate(a), -ui);
  mul_right_x(m, a, u);
  return m;
}

GroupMatrix MicroweightRep::rho_h(Root a, const RingElem& u) const {
  return rho_w(a, u) * rho_w(a, -u.ring()->one());
}

i64 MicroweightRep::torus_exp(const Vec& omega, int widx) const {
  Rat e = dot(omega, weights_[widx] - weights_[bottom_[block_[widx]]]);
  if (!e.is_int()) throw ChevalleyError("torus exponent not integral");
  return e.n;
}

GroupMatrix MicroweightRep::weight_torus(const Vec& omega, const RingElem& u) const {
  if (!u.is_unit()) throw NonUnit("weight torus needs a unit");
  GroupMatrix m = identity(u.ring());
  for (int w = 0; w < dim(); ++w) m.at(w, w) = u.pow(torus_exp(omega, w));
  return m;
}

}  // namespace stv
