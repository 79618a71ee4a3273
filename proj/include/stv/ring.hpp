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

#ifndef STV_RING_HPP
#define STV_RING_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stv {

using i64 = std::int64_t;
using u64 = std::uint64_t;

struct RingError : std::runtime_error {
  explicit RingError(const std::string& w) : std::runtime_error(w) {}
};
struct ArithmeticOverflow : RingError {
  ArithmeticOverflow() : RingError("64-bit overflow in exact arithmetic") {}
};
struct NonUnit : RingError {
  explicit NonUnit(const std::string& w = "element is not a unit") : RingError(w) {}
};
struct NotInIdeal : RingError {
  explicit NotInIdeal(const std::string& w = "element not in ideal") : RingError(w) {}
};
struct DescriptorMismatch : RingError {
  explicit DescriptorMismatch(const std::string& w = "ring descriptor mismatch") : RingError(w) {}
};
struct UnsupportedIdealClass : RingError {
  explicit UnsupportedIdealClass(const std::string& w = "ideal outside the decidable catalog") : RingError(w) {}
};
struct NotEnumerable : RingError {
  explicit NotEnumerable(const std::string& w = "unit group is not enumerable") : RingError(w) {}
};

// checked 64-bit arithmetic; suites stay far below the bound, overflow throws
i64 add64(i64 a, i64 b);
i64 sub64(i64 a, i64 b);
i64 mul64(i64 a, i64 b);
i64 gcd64(i64 a, i64 b);
i64 pow64(i64 b, i64 e);
// minimal x with (a*x) % m == gcd-compatible target; throws NonUnit if gcd(a,m) != 1
i64 inv_mod(i64 a, i64 m);

class Ring;
class RingElem;
using RingPtr = std::shared_ptr<const Ring>;

/// Finite generator list; membership is decidable for the catalog described
/// in ideal_member().
struct IdealSpec {
  std::vector<RingElem> gens;
};

/// Element of a ring in the tower. Payload interpretation depends on the
/// descriptor kind; all constructors normalize, equality is semantic.
class RingElem {
 public:
  RingElem() = default;
  bool valid() const { return ring_ != nullptr; }
  const RingPtr& ring() const { return ring_; }

  bool is_zero() const;
  bool is_one() const;

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator-() const;
  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  bool is_unit() const { return try_inverse().has_value(); }
  std::optional<RingElem> try_inverse() const;
  RingElem inverse() const;
  /// b^e; negative e requires a unit.
  RingElem pow(i64 e) const;

  std::string str() const;

  // --- structured access (valid per descriptor kind) ---
  i64 ival() const { return a_; }                    // Integers / IntegersMod
  i64 num() const { return a_; }                     // Rationals
  i64 den() const { return b_; }                     // Rationals
  const std::vector<i64>& exps() const { return exps_; }       // Polynomial/Laurent
  const std::vector<RingElem>& coeffs() const { return sub_; } // Polynomial/Laurent
  const RingElem& loc_num() const { return sub_[0]; }          // Localization
  i64 loc_pow() const { return a_; }                           // Localization
  const RingElem& first() const { return sub_[0]; }            // DoubleRing
  const RingElem& second() const { return sub_[1]; }           // DoubleRing

  /// Coefficient of X^e (zero elem if absent); Polynomial/Laurent only.
  RingElem coeff_at(i64 e) const;
  i64 degree() const;      // max exponent, 0 for the zero polynomial
  i64 low_degree() const;  // min exponent

 private:
  RingPtr ring_;
  i64 a_ = 0, b_ = 1;
  std::vector<i64> exps_;
  std::vector<RingElem> sub_;
  friend class Ring;
};

/// Descriptor for one level of the ring tower. Immutable, shared.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  enum class Kind { Integers, Rationals, IntegersMod, Polynomial, Laurent, Localization, DoubleRing };

  Kind kind() const { return kind_; }
  i64 modulus() const { return mod_; }
  const std::string& var() const { return var_; }
  const RingPtr& base() const { return base_; }
  const RingElem& loc_den() const { return den_; }
  const IdealSpec& dring_ideal() const { return ideal_; }

  static RingPtr Z();
  static RingPtr Q();
  static RingPtr Zmod(i64 m);
  static RingPtr poly(RingPtr base, const std::string& v);
  static RingPtr laurent(RingPtr base, const std::string& v);
  static RingPtr localization(RingPtr base, const RingElem& den);
  static RingPtr dring(RingPtr base, IdealSpec ideal);

  bool same(const Ring& o) const;
  std::string str() const;

  // element factories (all normalize)
  RingElem zero() const;
  RingElem one() const;
  RingElem integer(i64 n) const;  // canonical image of n
  RingElem rational(i64 n, i64 d) const;
  RingElem X(i64 e = 1) const;
  RingElem monomial(i64 e, const RingElem& coeff) const;
  RingElem make_poly(std::vector<std::pair<i64, RingElem>> terms) const;
  RingElem make_pair(const RingElem& a, const RingElem& b) const;  // checks a - b in ideal
  RingElem make_loc(const RingElem& numer, i64 k) const;

  bool is_domain() const;
  /// true if the ring is Zmod(p^e) with p prime (the local rings the
  /// decomposition algorithms accept), or a field.
  bool is_local() const;
  /// residue characteristic p for Zmod(p^e); 0 otherwise
  i64 residue_char() const;

 private:
  Kind kind_;
  i64 mod_ = 0;
  std::string var_;
  RingPtr base_;
  RingElem den_;
  IdealSpec ideal_;
  friend RingElem;
  Ring(Kind k) : kind_(k) {}
  void check_var_unique(const std::string& v) const;

 public:
  // normalization internals used by RingElem operations
  RingElem raw_int(i64 v) const;
  RingElem raw_poly(std::vector<i64> exps, std::vector<RingElem> coeffs) const;
};

/// Idempotent canonical form. Elements are already stored normalized; this
/// re-normalizes and is the identity on constructed values.
RingElem normalize(const RingElem& e);

/// Decidable membership for the supported catalog: principal ideals of
/// Z / Zmod, and ideals of one-variable polynomial or Laurent rings generated
/// by monomials c*X^j with c a base constant (covers XA[X], M[X], M*X^j*R and
/// products).
bool ideal_member(const IdealSpec& ideal, const RingElem& e);

/// First-class ring homomorphisms.
class RingHom {
 public:
  enum class Kind { Evaluation, LocalizationMap, Reduction, Inclusion, DoubleProjection, Diagonal, Composition };

  static RingHom evaluation(RingPtr source, const RingElem& value);
  static RingHom localization_map(RingPtr source, const RingElem& den);
  static RingHom reduction(RingPtr source, RingPtr target);
  static RingHom inclusion(RingPtr source, RingPtr target);
  static RingHom projection(RingPtr dsource, int index);  // 1 or 2
  static RingHom diagonal(RingPtr dtarget);               // base -> D(base, I)
  static RingHom compose(const RingHom& second, const RingHom& first);  // second ∘ first

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  Kind kind() const { return kind_; }

  RingElem apply(const RingElem& e) const;

 private:
  RingHom(Kind k, RingPtr s, RingPtr t) : kind_(k), source_(std::move(s)), target_(std::move(t)) {}
  Kind kind_;
  RingPtr source_, target_;
  RingElem value_;  // Evaluation
  int index_ = 0;   // DoubleProjection
  std::vector<RingHom> parts_;  // Composition
};

/// Canonical map of e into target when one exists structurally
/// (constant embedding along poly/Laurent/localization towers, Z -> Q).
RingElem embed(const RingElem& e, const RingPtr& target);

struct UnitGroup {
  bool enumerable = false;
  std::vector<RingElem> elements;     // when enumerable
  std::string description;           // e.g. "{c*X^k : c in F5^x, k in Z}"
  std::function<RingElem(u64)> sample;  // defined in both cases
};

/// Unit group of a finite ring, or the monomial description for Laurent
/// rings over a prime field. Throws NotEnumerable otherwise.
UnitGroup units(const RingPtr& r);

// CLI grammar: Z | Q | Zmod:<m> | <base>[<v>] | <base>[<v>,<v>^-1]
//              | <base>@loc:<elem> | D(<base>,(<elem>{,<elem>}))
RingPtr parse_ring(const std::string& text);
RingElem parse_elem(const RingPtr& r, const std::string& text);

}  // namespace stv

#endif
