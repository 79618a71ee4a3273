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

#ifndef STV_FASTMAT_HPP
#define STV_FASTMAT_HPP

#include <cstdint>
#include <vector>

#include "stv/chevalley.hpp"

namespace stv {

/// Laurent polynomial over Z/m with packed coefficients; value is
/// sum c[i] X^{lo+i}. Normalized: no leading/trailing zeros, empty = 0.
struct LPoly {
  int lo = 0;
  std::vector<std::uint32_t> c;
  bool is_zero() const { return c.empty(); }
  void trim();
};

LPoly lp_const(std::uint32_t v);
LPoly lp_mono(std::uint32_t v, int e);
LPoly lp_add(const LPoly& a, const LPoly& b, std::uint32_t m);
LPoly lp_neg(const LPoly& a, std::uint32_t m);
LPoly lp_mul(const LPoly& a, const LPoly& b, std::uint32_t m);
bool lp_eq(const LPoly& a, const LPoly& b);

/// Dense matrix over Z/m.
struct ModMat {
  int n = 0;
  std::uint32_t m = 0;
  std::vector<std::uint32_t> a;
  static ModMat identity(int n, std::uint32_t m);
  std::uint32_t& at(int r, int c) { return a[(size_t)r * n + c]; }
  std::uint32_t at(int r, int c) const { return a[(size_t)r * n + c]; }
  bool operator==(const ModMat& o) const { return n == o.n && m == o.m && a == o.a; }
};

/// Dense matrix over (Z/m)[X, X^-1].
struct LMat {
  int n = 0;
  std::uint32_t m = 0;
  std::vector<LPoly> a;
  static LMat identity(int n, std::uint32_t m);
  LPoly& at(int r, int c) { return a[(size_t)r * n + c]; }
  const LPoly& at(int r, int c) const { return a[(size_t)r * n + c]; }
  bool operator==(const LMat& o) const;
};

ModMat mm_mul(const ModMat& a, const ModMat& b);
LMat lm_mul(const LMat& a, const LMat& b);

/// m := m * (1 + c e_alpha) in the given representation
void mm_mul_right_x(const MicroweightRep& rep, ModMat& m, Root a, std::uint32_t c);
void lm_mul_right_x(const MicroweightRep& rep, LMat& m, Root a, const LPoly& c);

ModMat mm_rho_x(const MicroweightRep& rep, Root a, std::uint32_t c, std::uint32_t mod);
LMat lm_rho_x(const MicroweightRep& rep, Root a, const LPoly& c, std::uint32_t mod);
/// w_alpha(u) for a unit u (mod must make u invertible)
ModMat mm_rho_w(const MicroweightRep& rep, Root a, std::uint32_t u, std::uint32_t mod);
/// w_alpha(u X^e): the Laurent-monomial Weyl element
LMat lm_rho_w(const MicroweightRep& rep, Root a, std::uint32_t u, int e, std::uint32_t mod);
/// H_omega(X^1 * u): diagonal of Laurent monomials
LMat lm_weight_torus(const MicroweightRep& rep, const Vec& omega, std::uint32_t u, int e, std::uint32_t mod);
LMat lm_inverse_diag(const LMat& d, std::uint32_t mod);

std::uint32_t mod_inverse_u32(std::uint32_t a, std::uint32_t m);

}  // namespace stv

#endif
