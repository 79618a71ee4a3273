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

#include "stv/fastmat.hpp"

namespace stv {

using u32 = std::uint32_t;

void LPoly::trim() {
  size_t b = 0, e = c.size();
  while (b < e && c[b] == 0) ++b;
  while (e > b && c[e - 1] == 0) --e;
  if (b == e) {
    c.clear();
    lo = 0;
    return;
  }
  if (b > 0 || e < c.size()) {
    std::vector<u32> nc(c.begin() + b, c.begin() + e);
    c = std::move(nc);
    lo += (int)b;
  }
}

LPoly lp_const(u32 v) {
  LPoly p;
  if (v) p.c = {v};
  return p;
}
LPoly lp_mono(u32 v, int e) {
  LPoly p;
  if (v) {
    p.lo = e;
    p.c = {v};
  }
  return p;
}

LPoly lp_add(const LPoly& a, const LPoly& b, u32 m) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.lo, b.lo);
  int hi = std::max(a.lo + (int)a.c.size(), b.lo + (int)b.c.size());
  LPoly r;
  r.lo = lo;
  r.c.assign(hi - lo, 0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[a.lo - lo + i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[b.lo - lo + i] = (r.c[b.lo - lo + i] + b.c[i]) % m;
  r.trim();
  return r;
}

LPoly lp_neg(const LPoly& a, u32 m) {
  LPoly r = a;
  for (auto& v : r.c) v = v ? m - v : 0;
  return r;
}

LPoly lp_mul(const LPoly& a, const LPoly& b, u32 m) {
  if (a.is_zero() || b.is_zero()) return {};
  LPoly r;
  r.lo = a.lo + b.lo;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = (u32)((r.c[i + j] + (std::uint64_t)a.c[i] * b.c[j]) % m);
  }
  r.trim();
  return r;
}

bool lp_eq(const LPoly& a, const LPoly& b) { return a.lo == b.lo && a.c == b.c; }

ModMat ModMat::identity(int n, u32 m) {
  ModMat r;
  r.n = n;
  r.m = m;
  r.a.assign((size_t)n * n, 0);
  for (int i = 0; i < n; ++i) r.at(i, i) = 1 % m;
  return r;
}

LMat LMat::identity(int n, u32 m) {
  LMat r;
  r.n = n;
  r.m = m;
  r.a.assign((size_t)n * n, {});
  for (int i = 0; i < n; ++i) r.at(i, i) = lp_const(1 % m);
  return r;
}

bool LMat::operator==(const LMat& o) const {
  if (n != o.n || m != o.m) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!lp_eq(a[i], o.a[i])) return false;
  return true;
}

ModMat mm_mul(const ModMat& a, const ModMat& b) {
  ModMat r;
  r.n = a.n;
  r.m = a.m;
  r.a.assign((size_t)a.n * a.n, 0);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      std::uint64_t x = a.at(i, k);
      if (!x) continue;
      for (int j = 0; j < a.n; ++j)
        if (b.at(k, j)) r.at(i, j) = (u32)((r.at(i, j) + x * b.at(k, j)) % a.m);
    }
  return r;
}

LMat lm_mul(const LMat& a, const LMat& b) {
  LMat r;
  r.n = a.n;
  r.m = a.m;
  r.a.assign((size_t)a.n * a.n, {});
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      const LPoly& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < a.n; ++j) {
        const LPoly& y = b.at(k, j);
        if (y.is_zero()) continue;
        r.at(i, j) = lp_add(r.at(i, j), lp_mul(x, y, a.m), a.m);
      }
    }
  return r;
}

void mm_mul_right_x(const MicroweightRep& rep, ModMat& m, Root a, u32 c) {
  if (!c) return;
  int n = m.n;
  for (auto& mv : rep.moves(a)) {
    u32 f = mv.s == 1 ? c : (m.m - c) % m.m;
    for (int i = 0; i < n; ++i) {
      u32 src = m.at(i, mv.to);
      if (src) m.at(i, mv.from) = (u32)((m.at(i, mv.from) + (std::uint64_t)src * f) % m.m);
    }
  }
}

void lm_mul_right_x(const MicroweightRep& rep, LMat& m, Root a, const LPoly& c) {
  if (c.is_zero()) return;
  for (auto& mv : rep.moves(a)) {
    LPoly f = mv.s == 1 ? c : lp_neg(c, m.m);
    for (int i = 0; i < m.n; ++i) {
      const LPoly& src = m.at(i, mv.to);
      if (!src.is_zero()) m.at(i, mv.from) = lp_add(m.at(i, mv.from), lp_mul(src, f, m.m), m.m);
    }
  }
}

ModMat mm_rho_x(const MicroweightRep& rep, Root a, u32 c, u32 mod) {
  ModMat m = ModMat::identity(rep.dim(), mod);
  mm_mul_right_x(rep, m, a, c % mod);
  return m;
}
LMat lm_rho_x(const MicroweightRep& rep, Root a, const LPoly& c, u32 mod) {
  LMat m = LMat::identity(rep.dim(), mod);
  lm_mul_right_x(rep, m, a, c);
  return m;
}

u32 mod_inverse_u32(u32 a, u32 m) { return (u32)inv_mod((i64)(a % m), (i64)m); }

ModMat mm_rho_w(const MicroweightRep& rep, Root a, u32 u, u32 mod) {
  u32 ui = mod_inverse_u32(u, mod);
  ModMat m = ModMat::identity(rep.dim(), mod);
  mm_mul_right_x(rep, m, a, u % mod);
  mm_mul_right_x(rep, m, rep.system().negate(a), (mod - ui) % mod);
  mm_mul_right_x(rep, m, a, u % mod);
  return m;
}

LMat lm_rho_w(const MicroweightRep& rep, Root a, u32 u, int e, u32 mod) {
  u32 ui = mod_inverse_u32(u, mod);
  LMat m = LMat::identity(rep.dim(), mod);
  lm_mul_right_x(rep, m, a, lp_mono(u % mod, e));
  lm_mul_right_x(rep, m, rep.system().negate(a), lp_mono((mod - ui) % mod, -e));
  lm_mul_right_x(rep, m, a, lp_mono(u % mod, e));
  return m;
}

LMat lm_weight_torus(const MicroweightRep& rep, const Vec& omega, u32 u, int e, u32 mod) {
  LMat m = LMat::identity(rep.dim(), mod);
  for (int w = 0; w < rep.dim(); ++w) {
    i64 ex = rep.torus_exp(omega, w);
    u32 c = 1;
    i64 steps = ex < 0 ? -ex : ex;
    u32 base = ex < 0 ? mod_inverse_u32(u, mod) : u % mod;
    for (i64 i = 0; i < steps; ++i) c = (u32)((std::uint64_t)c * base % mod);
    m.at(w, w) = lp_mono(c, (int)(ex * e));
  }
  return m;
}

LMat lm_inverse_diag(const LMat& d, u32 mod) {
  LMat r = LMat::identity(d.n, mod);
  for (int i = 0; i < d.n; ++i) {
    const LPoly& p = d.at(i, i);
    if (p.c.size() != 1) throw ChevalleyError("diagonal inverse needs monomial entries");
    r.at(i, i) = lp_mono(mod_inverse_u32(p.c[0], mod), -(p.lo));
  }
  return r;
}

}  // namespace stv
