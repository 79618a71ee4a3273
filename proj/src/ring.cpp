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

#include "stv/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace stv {

i64 add64(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
i64 sub64(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
i64 mul64(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
i64 gcd64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
i64 pow64(i64 b, i64 e) {
  i64 r = 1;
  for (i64 i = 0; i < e; ++i) r = mul64(r, b);
  return r;
}
i64 inv_mod(i64 a, i64 m) {
  i64 t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr != 0) {
    i64 q = r / nr;
    i64 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw NonUnit("not invertible modulo " + std::to_string(m));
  return ((t % m) + m) % m;
}

namespace {
i64 mod_reduce(i64 v, i64 m) {
  v %= m;
  if (v < 0) v += m;
  return v;
}
}  // namespace

// ---------------------------------------------------------------------------
// Ring construction

RingPtr Ring::Z() {
  static RingPtr r(new Ring(Kind::Integers));
  return r;
}
RingPtr Ring::Q() {
  static RingPtr r(new Ring(Kind::Rationals));
  return r;
}
RingPtr Ring::Zmod(i64 m) {
  if (m < 2 || m >= (i64(1) << 31)) throw RingError("Zmod modulus out of range");
  auto r = std::shared_ptr<Ring>(new Ring(Kind::IntegersMod));
  r->mod_ = m;
  return r;
}
void Ring::check_var_unique(const std::string& v) const {
  const Ring* cur = this;
  while (cur) {
    if ((cur->kind_ == Kind::Polynomial || cur->kind_ == Kind::Laurent) && cur->var_ == v)
      throw RingError("duplicate variable name in tower: " + v);
    cur = cur->base_.get();
  }
}
RingPtr Ring::poly(RingPtr base, const std::string& v) {
  if (!base) throw RingError("null base");
  base->check_var_unique(v);
  auto r = std::shared_ptr<Ring>(new Ring(Kind::Polynomial));
  r->base_ = std::move(base);
  r->var_ = v;
  return r;
}
RingPtr Ring::laurent(RingPtr base, const std::string& v) {
  if (!base) throw RingError("null base");
  base->check_var_unique(v);
  auto r = std::shared_ptr<Ring>(new Ring(Kind::Laurent));
  r->base_ = std::move(base);
  r->var_ = v;
  return r;
}

bool Ring::is_domain() const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
      return true;
    case Kind::IntegersMod: {
      i64 m = mod_;
      for (i64 d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
      return true;
    }
    case Kind::Polynomial:
    case Kind::Laurent:
      return base_->is_domain();
    default:
      return false;
  }
}

i64 Ring::residue_char() const {
  if (kind_ != Kind::IntegersMod) return 0;
  i64 m = mod_;
  for (i64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      while (m % d == 0) m /= d;
      return m == 1 ? d : 0;  // 0: not a prime power
    }
  return mod_;  // prime
}

bool Ring::is_local() const {
  if (kind_ == Kind::Rationals) return true;
  if (kind_ == Kind::IntegersMod) return residue_char() != 0;
  return false;
}

RingPtr Ring::localization(RingPtr base, const RingElem& den) {
  if (!base || !den.valid() || !den.ring()->same(*base)) throw DescriptorMismatch("localization denominator ring");
  // non-zerodivisor check for the supported bases
  switch (base->kind()) {
    case Kind::Integers:
    case Kind::Rationals:
      if (den.is_zero()) throw RingError("localization at zero");
      break;
    case Kind::IntegersMod:
      if (den.is_zero() || gcd64(den.ival(), base->modulus()) != 1)
        throw RingError("localization denominator is a zerodivisor");
      break;
    case Kind::Polynomial:
    case Kind::Laurent:
      if (!base->is_domain()) throw RingError("localization over non-domain polynomial base unsupported");
      if (den.is_zero()) throw RingError("localization at zero");
      break;
    default:
      throw RingError("unsupported localization base");
  }
  auto r = std::shared_ptr<Ring>(new Ring(Kind::Localization));
  r->base_ = std::move(base);
  r->den_ = den;
  return r;
}

RingPtr Ring::dring(RingPtr base, IdealSpec ideal) {
  if (!base) throw RingError("null base");
  for (auto& g : ideal.gens)
    if (!g.valid() || !g.ring()->same(*base)) throw DescriptorMismatch("ideal generator ring");
  auto r = std::shared_ptr<Ring>(new Ring(Kind::DoubleRing));
  r->base_ = std::move(base);
  r->ideal_ = std::move(ideal);
  return r;
}

bool Ring::same(const Ring& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
      return true;
    case Kind::IntegersMod:
      return mod_ == o.mod_;
    case Kind::Polynomial:
    case Kind::Laurent:
      return var_ == o.var_ && base_->same(*o.base_);
    case Kind::Localization:
      return base_->same(*o.base_) && den_ == o.den_;
    case Kind::DoubleRing: {
      if (!base_->same(*o.base_)) return false;
      if (ideal_.gens.size() != o.ideal_.gens.size()) return false;
      for (size_t i = 0; i < ideal_.gens.size(); ++i)
        if (!(ideal_.gens[i] == o.ideal_.gens[i])) return false;
      return true;
    }
  }
  return false;
}

std::string Ring::str() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::IntegersMod:
      return "Zmod:" + std::to_string(mod_);
    case Kind::Polynomial:
      return base_->str() + "[" + var_ + "]";
    case Kind::Laurent:
      return base_->str() + "[" + var_ + "," + var_ + "^-1]";
    case Kind::Localization:
      return base_->str() + "@loc:" + den_.str();
    case Kind::DoubleRing: {
      std::string s = "D(" + base_->str() + ",(";
      for (size_t i = 0; i < ideal_.gens.size(); ++i) {
        if (i) s += ",";
        s += ideal_.gens[i].str();
      }
      return s + "))";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Element factories and normalization

RingElem Ring::raw_int(i64 v) const {
  RingElem e;
  e.ring_ = shared_from_this();
  if (kind_ == Kind::IntegersMod) v = mod_reduce(v, mod_);
  e.a_ = v;
  return e;
}

RingElem Ring::zero() const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
    case Kind::IntegersMod: {
      RingElem e;
      e.ring_ = shared_from_this();
      return e;
    }
    case Kind::Polynomial:
    case Kind::Laurent: {
      RingElem e;
      e.ring_ = shared_from_this();
      return e;
    }
    case Kind::Localization:
      return make_loc(base_->zero(), 0);
    case Kind::DoubleRing:
      return make_pair(base_->zero(), base_->zero());
  }
  throw RingError("zero");
}

RingElem Ring::one() const { return integer(1); }

RingElem Ring::integer(i64 n) const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::IntegersMod:
      return raw_int(n);
    case Kind::Rationals:
      return rational(n, 1);
    case Kind::Polynomial:
    case Kind::Laurent:
      return monomial(0, base_->integer(n));
    case Kind::Localization:
      return make_loc(base_->integer(n), 0);
    case Kind::DoubleRing:
      return make_pair(base_->integer(n), base_->integer(n));
  }
  throw RingError("integer");
}

RingElem Ring::rational(i64 n, i64 d) const {
  if (kind_ != Kind::Rationals) throw DescriptorMismatch("rational() on non-Q ring");
  if (d == 0) throw RingError("zero denominator");
  if (d < 0) {
    n = sub64(0, n);
    d = sub64(0, d);
  }
  i64 g = gcd64(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  RingElem e;
  e.ring_ = shared_from_this();
  e.a_ = n;
  e.b_ = n == 0 ? 1 : d;
  return e;
}

RingElem Ring::X(i64 e) const { return monomial(e, base_ ? base_->one() : RingElem()); }

RingElem Ring::monomial(i64 e, const RingElem& coeff) const {
  if (kind_ != Kind::Polynomial && kind_ != Kind::Laurent) throw DescriptorMismatch("monomial() on non-polynomial ring");
  if (!coeff.valid() || !coeff.ring()->same(*base_)) throw DescriptorMismatch("monomial coefficient ring");
  if (kind_ == Kind::Polynomial && e < 0) throw RingError("negative exponent in polynomial ring");
  if (coeff.is_zero()) return zero();
  RingElem r;
  r.ring_ = shared_from_this();
  r.exps_ = {e};
  r.sub_ = {coeff};
  return r;
}

RingElem Ring::raw_poly(std::vector<i64> exps, std::vector<RingElem> coeffs) const {
  // sort by exponent, merge duplicates, drop zeros
  std::vector<size_t> idx(exps.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return exps[a] < exps[b]; });
  RingElem r;
  r.ring_ = shared_from_this();
  for (size_t ii = 0; ii < idx.size();) {
    i64 e = exps[idx[ii]];
    RingElem c = coeffs[idx[ii]];
    size_t jj = ii + 1;
    while (jj < idx.size() && exps[idx[jj]] == e) {
      c = c + coeffs[idx[jj]];
      ++jj;
    }
    if (!c.is_zero()) {
      if (kind_ == Kind::Polynomial && e < 0) throw RingError("negative exponent in polynomial ring");
      r.exps_.push_back(e);
      r.sub_.push_back(c);
    }
    ii = jj;
  }
  return r;
}

RingElem Ring::make_poly(std::vector<std::pair<i64, RingElem>> terms) const {
  if (kind_ != Kind::Polynomial && kind_ != Kind::Laurent) throw DescriptorMismatch("make_poly on non-polynomial ring");
  std::vector<i64> es;
  std::vector<RingElem> cs;
  for (auto& t : terms) {
    if (!t.second.valid() || !t.second.ring()->same(*base_)) throw DescriptorMismatch("make_poly coefficient ring");
    es.push_back(t.first);
    cs.push_back(t.second);
  }
  return raw_poly(std::move(es), std::move(cs));
}

RingElem Ring::make_pair(const RingElem& a, const RingElem& b) const {
  if (kind_ != Kind::DoubleRing) throw DescriptorMismatch("make_pair on non-double ring");
  if (!a.ring()->same(*base_) || !b.ring()->same(*base_)) throw DescriptorMismatch("pair component ring");
  if (!ideal_member(ideal_, a - b)) throw NotInIdeal("pair difference not in the double-ring ideal");
  RingElem r;
  r.ring_ = shared_from_this();
  r.sub_ = {a, b};
  return r;
}

RingElem Ring::make_loc(const RingElem& numer, i64 k) const {
  if (kind_ != Kind::Localization) throw DescriptorMismatch("make_loc on non-localization");
  if (!numer.ring()->same(*base_)) throw DescriptorMismatch("localization numerator ring");
  if (k < 0) throw RingError("negative localization power");
  RingElem num = numer;
  // best-effort canonicalization: divide out the denominator where exact
  // division is available (Z; Zmod with unit denominator; poly over a field)
  while (k > 0) {
    const RingElem& d = den_;
    bool reduced = false;
    switch (base_->kind()) {
      case Kind::Integers: {
        if (!num.is_zero() && d.ival() != 0 && num.ival() % d.ival() == 0) {
          num = base_->integer(num.ival() / d.ival());
          --k;
          reduced = true;
        } else if (num.is_zero()) {
          k = 0;
          reduced = true;
        }
        break;
      }
      case Kind::IntegersMod: {
        // unit denominator: fold it in entirely
        i64 m = base_->modulus();
        if (gcd64(d.ival(), m) == 1) {
          i64 inv = inv_mod(d.ival(), m);
          num = base_->raw_int(mul64(num.ival(), pow64(inv, k)) % m);
          k = 0;
          reduced = true;
        }
        break;
      }
      default:
        break;
    }
    if (!reduced) break;
  }
  RingElem r;
  r.ring_ = shared_from_this();
  r.a_ = k;
  r.sub_ = {num};
  return r;
}

// ---------------------------------------------------------------------------
// Element predicates and arithmetic

bool RingElem::is_zero() const {
  switch (ring_->kind()) {
    case Ring::Kind::Integers:
    case Ring::Kind::IntegersMod:
      return a_ == 0;
    case Ring::Kind::Rationals:
      return a_ == 0;
    case Ring::Kind::Polynomial:
    case Ring::Kind::Laurent:
      return sub_.empty();
    case Ring::Kind::Localization:
      return sub_[0].is_zero();
    case Ring::Kind::DoubleRing:
      return sub_[0].is_zero() && sub_[1].is_zero();
  }
  return false;
}

bool RingElem::is_one() const { return *this == ring_->one(); }

namespace {
void require_same_ring(const RingElem& x, const RingElem& y) {
  if (!x.valid() || !y.valid() || !x.ring()->same(*y.ring())) throw DescriptorMismatch();
}
}  // namespace

RingElem RingElem::operator+(const RingElem& o) const {
  require_same_ring(*this, o);
  const Ring& R = *ring_;
  switch (R.kind()) {
    case Ring::Kind::Integers:
    case Ring::Kind::IntegersMod:
      return R.raw_int(add64(a_, o.a_));
    case Ring::Kind::Rationals:
      return R.rational(add64(mul64(a_, o.b_), mul64(o.a_, b_)), mul64(b_, o.b_));
    case Ring::Kind::Polynomial:
    case Ring::Kind::Laurent: {
      std::vector<i64> es = exps_;
      std::vector<RingElem> cs = sub_;
      es.insert(es.end(), o.exps_.begin(), o.exps_.end());
      cs.insert(cs.end(), o.sub_.begin(), o.sub_.end());
      return R.raw_poly(std::move(es), std::move(cs));
    }
    case Ring::Kind::Localization: {
      // a/s^k + b/s^l = (a s^l + b s^k) / s^{k+l}
      RingElem sa = sub_[0], sb = o.sub_[0];
      const RingElem& d = R.loc_den();
      for (i64 i = 0; i < o.a_; ++i) sa = sa * d;
      for (i64 i = 0; i < a_; ++i) sb = sb * d;
      return R.make_loc(sa + sb, a_ + o.a_);
    }
    case Ring::Kind::DoubleRing:
      return R.make_pair(sub_[0] + o.sub_[0], sub_[1] + o.sub_[1]);
  }
  throw RingError("+");
}

RingElem RingElem::operator-() const {
  const Ring& R = *ring_;
  switch (R.kind()) {
    case Ring::Kind::Integers:
    case Ring::Kind::IntegersMod:
      return R.raw_int(R.kind() == Ring::Kind::IntegersMod ? (a_ == 0 ? 0 : R.modulus() - a_) : sub64(0, a_));
    case Ring::Kind::Rationals:
      return R.rational(sub64(0, a_), b_);
    case Ring::Kind::Polynomial:
    case Ring::Kind::Laurent: {
      RingElem r = *this;
      for (auto& c : r.sub_) c = -c;
      return r;
    }
    case Ring::Kind::Localization:
      return R.make_loc(-sub_[0], a_);
    case Ring::Kind::DoubleRing:
      return R.make_pair(-sub_[0], -sub_[1]);
  }
  throw RingError("-");
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
  require_same_ring(*this, o);
  const Ring& R = *ring_;
  switch (R.kind()) {
    case Ring::Kind::Integers:
      return R.raw_int(mul64(a_, o.a_));
    case Ring::Kind::IntegersMod: {
      u64 p = (u64)a_ * (u64)o.a_ % (u64)R.modulus();
      return R.raw_int((i64)p);
    }
    case Ring::Kind::Rationals:
      return R.rational(mul64(a_, o.a_), mul64(b_, o.b_));
    case Ring::Kind::Polynomial:
    case Ring::Kind::Laurent: {
      std::vector<i64> es;
      std::vector<RingElem> cs;
      es.reserve(exps_.size() * o.exps_.size());
      for (size_t i = 0; i < exps_.size(); ++i)
        for (size_t j = 0; j < o.exps_.size(); ++j) {
          es.push_back(add64(exps_[i], o.exps_[j]));
          cs.push_back(sub_[i] * o.sub_[j]);
        }
      return R.raw_poly(std::move(es), std::move(cs));
    }
    case Ring::Kind::Localization:
      return R.make_loc(sub_[0] * o.sub_[0], a_ + o.a_);
    case Ring::Kind::DoubleRing:
      return R.make_pair(sub_[0] * o.sub_[0], sub_[1] * o.sub_[1]);
  }
  throw RingError("*");
}

bool RingElem::operator==(const RingElem& o) const {
  if (!valid() || !o.valid()) return valid() == o.valid();
  if (!ring_->same(*o.ring_)) return false;
  const Ring& R = *ring_;
  switch (R.kind()) {
    case Ring::Kind::Integers:
    case Ring::Kind::IntegersMod:
      return a_ == o.a_;
    case Ring::Kind::Rationals:
      return a_ == o.a_ && b_ == o.b_;
    case Ring::Kind::Polynomial:
    case Ring::Kind::Laurent: {
      if (exps_ != o.exps_) return false;
      for (size_t i = 0; i < sub_.size(); ++i)
        if (!(sub_[i] == o.sub_[i])) return false;
      return true;
    }
    case Ring::Kind::Localization: {
      // cross-multiplication; denominators are non-zerodivisors
      RingElem lhs = sub_[0], rhs = o.sub_[0];
      const RingElem& d = R.loc_den();
      for (i64 i = 0; i < o.a_; ++i) lhs = lhs * d;
      for (i64 i = 0; i < a_; ++i) rhs = rhs * d;
      return lhs == rhs;
    }
    case Ring::Kind::DoubleRing:
      return sub_[0] == o.sub_[0] && sub_[1] == o.sub_[1];
  }
  return false;
}

std::optional<RingElem> RingElem::try_inverse() const {
  const Ring& R = *ring_;
  switch (R.kind()) {
    case Ring::Kind::Integers:
      if (a_ == 1 || a_ == -1) return *this;
      return std::nullopt;
    case Ring::Kind::Rationals:
      if (a_ == 0) return std::nullopt;
      return R.rational(b_, a_);
    case Ring::Kind::IntegersMod: {
      if (gcd64(a_, R.modulus()) != 1) return std::nullopt;
      return R.raw_int(inv_mod(a_, R.modulus()));
    }
    case Ring::Kind::Polynomial:
    case Ring::Kind::Laurent: {
      if (sub_.empty()) return std::nullopt;
      if (sub_.size() == 1) {
        auto ci = sub_[0].try_inverse();
        if (ci && (R.kind() == Ring::Kind::Laurent || exps_[0] == 0)) return R.monomial(-exps_[0], *ci);
      }
      // f = c (1 + n) with n nilpotent (e.g. over Zmod p^e): geometric series
      if (R.kind() == Ring::Kind::Polynomial || R.kind() == Ring::Kind::Laurent) {
        i64 lo = exps_.empty() ? 0 : exps_[0];
        RingElem c0 = coeff_at(lo);
        auto c0i = c0.try_inverse();
        if (!c0i) return std::nullopt;
        RingElem shift = R.kind() == Ring::Kind::Laurent ? R.X(-lo) : (lo == 0 ? R.one() : RingElem());
        if (!shift.valid()) return std::nullopt;
        RingElem n = (*this * shift * R.monomial(0, *c0i)) - R.one();
        RingElem acc = R.one(), pw = n;
        for (int i = 0; i < 64 && !pw.is_zero(); ++i) {
          acc = (i % 2 == 0) ? acc - pw : acc + pw;
          pw = pw * n;
          if (i == 63 && !pw.is_zero()) return std::nullopt;
        }
        RingElem cand = acc * shift * R.monomial(0, *c0i);
        if ((*this * cand) == R.one()) return cand;
        return std::nullopt;
      }
      return std::nullopt;
    }
    case Ring::Kind::Localization: {
      auto ni = sub_[0].try_inverse();
      if (ni) {
        RingElem r = R.make_loc(*ni, 0);
        RingElem dk = R.make_loc(R.base()->one(), 0);
        // multiply back s^k: (a/s^k)^{-1} = s^k * a^{-1}
        RingElem s = embed(R.loc_den(), ring_);
        for (i64 i = 0; i < a_; ++i) r = r * s;
        return r;
      }
      // numerator equal to a power of the denominator: s^j / s^k inverts to s^k / s^j
      RingElem p = R.base()->one();
      for (int j = 0; j <= 64; ++j) {
        if (sub_[0] == p) {
          RingElem r = R.make_loc(R.base()->one(), j);
          RingElem s = embed(R.loc_den(), ring_);
          for (i64 i = 0; i < a_; ++i) r = r * s;
          return r;
        }
        p = p * R.loc_den();
      }
      return std::nullopt;
    }
    case Ring::Kind::DoubleRing: {
      auto i1 = sub_[0].try_inverse(), i2 = sub_[1].try_inverse();
      if (i1 && i2) return R.make_pair(*i1, *i2);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

RingElem RingElem::inverse() const {
  auto i = try_inverse();
  if (!i) throw NonUnit("inverse of non-unit " + str() + " in " + ring_->str());
  return *i;
}

RingElem RingElem::pow(i64 e) const {
  if (e < 0) return inverse().pow(-e);
  RingElem r = ring_->one();
  for (i64 i = 0; i < e; ++i) r = r * *this;
  return r;
}

RingElem RingElem::coeff_at(i64 e) const {
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] == e) return sub_[i];
  return ring_->base()->zero();
}
i64 RingElem::degree() const { return exps_.empty() ? 0 : exps_.back(); }
i64 RingElem::low_degree() const { return exps_.empty() ? 0 : exps_.front(); }

RingElem normalize(const RingElem& e) {
  if (!e.valid()) throw RingError("normalize of invalid element");
  const Ring& R = *e.ring();
  switch (R.kind()) {
    case Ring::Kind::Integers:
    case Ring::Kind::IntegersMod:
      return R.raw_int(e.ival());
    case Ring::Kind::Rationals:
      return R.rational(e.num(), e.den());
    case Ring::Kind::Polynomial:
    case Ring::Kind::Laurent: {
      std::vector<std::pair<i64, RingElem>> ts;
      for (size_t i = 0; i < e.exps().size(); ++i) ts.emplace_back(e.exps()[i], normalize(e.coeffs()[i]));
      return R.make_poly(std::move(ts));
    }
    case Ring::Kind::Localization:
      return R.make_loc(normalize(e.loc_num()), e.loc_pow());
    case Ring::Kind::DoubleRing:
      return R.make_pair(normalize(e.first()), normalize(e.second()));
  }
  throw RingError("normalize");
}

// ---------------------------------------------------------------------------
// Printing

std::string RingElem::str() const {
  const Ring& R = *ring_;
  std::ostringstream os;
  switch (R.kind()) {
    case Ring::Kind::Integers:
    case Ring::Kind::IntegersMod:
      os << a_;
      break;
    case Ring::Kind::Rationals:
      os << a_;
      if (b_ != 1) os << "/" << b_;
      break;
    case Ring::Kind::Polynomial:
    case Ring::Kind::Laurent: {
      if (sub_.empty()) {
        os << "0";
        break;
      }
      for (size_t i = 0; i < sub_.size(); ++i) {
        if (i) os << "+";
        bool catomic = sub_[i].ring()->kind() == Ring::Kind::Integers ||
                       sub_[i].ring()->kind() == Ring::Kind::IntegersMod ||
                       sub_[i].ring()->kind() == Ring::Kind::Rationals;
        std::string cs = sub_[i].str();
        if (exps_[i] == 0) {
          os << (catomic ? cs : "(" + cs + ")");
        } else {
          if (!(catomic && cs == "1")) os << (catomic ? cs : "(" + cs + ")") << "*";
          os << R.var();
          if (exps_[i] != 1) os << "^" << exps_[i];
        }
      }
      break;
    }
    case Ring::Kind::Localization: {
      os << "(" << sub_[0].str() << ")";
      if (a_ > 0) os << "/(" << R.loc_den().str() << ")^" << a_;
      break;
    }
    case Ring::Kind::DoubleRing:
      os << "(" << sub_[0].str() << ";" << sub_[1].str() << ")";
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Ideal membership

namespace {

// principal-ideal content of base constants: ideal of Z or Zmod generated by
// the listed integers (together with the modulus)
i64 base_ideal_gcd(const Ring& base, const std::vector<i64>& gens) {
  i64 g = base.kind() == Ring::Kind::IntegersMod ? base.modulus() : 0;
  for (i64 v : gens) g = gcd64(g, v);
  return g;
}

bool int_member(i64 g, i64 v) { return g == 0 ? v == 0 : v % g == 0; }

}  // namespace

bool ideal_member(const IdealSpec& ideal, const RingElem& e) {
  if (!e.valid()) throw RingError("ideal_member on invalid element");
  const Ring& R = *e.ring();
  for (auto& g : ideal.gens)
    if (!g.ring()->same(R)) throw DescriptorMismatch("ideal generator ring vs element ring");
  switch (R.kind()) {
    case Ring::Kind::Integers:
    case Ring::Kind::IntegersMod: {
      std::vector<i64> gs;
      for (auto& g : ideal.gens) gs.push_back(g.ival());
      return int_member(base_ideal_gcd(R, gs), e.ival());
    }
    case Ring::Kind::Polynomial:
    case Ring::Kind::Laurent: {
      const Ring& B = *R.base();
      if (B.kind() != Ring::Kind::Integers && B.kind() != Ring::Kind::IntegersMod)
        throw UnsupportedIdealClass("polynomial ideals supported over Z and Zmod bases only");
      // each generator must be c * X^j with c a base constant
      struct MonGen {
        i64 exp;
        i64 c;
      };
      std::vector<MonGen> mons;
      for (auto& g : ideal.gens) {
        if (g.is_zero()) continue;
        if (g.coeffs().size() != 1) throw UnsupportedIdealClass("non-monomial polynomial ideal generator");
        mons.push_back({R.kind() == Ring::Kind::Laurent ? 0 : g.exps()[0], g.coeffs()[0].ival()});
      }
      for (size_t i = 0; i < e.exps().size(); ++i) {
        i64 d = R.kind() == Ring::Kind::Laurent ? 0 : e.exps()[i];
        std::vector<i64> gs;
        for (auto& m : mons)
          if (m.exp <= d) gs.push_back(m.c);
        if (!int_member(base_ideal_gcd(B, gs), e.coeffs()[i].ival())) return false;
      }
      return true;
    }
    default:
      throw UnsupportedIdealClass("ideal class for ring " + R.str());
  }
}

// ---------------------------------------------------------------------------
// Structural embedding

RingElem embed(const RingElem& e, const RingPtr& target) {
  if (e.ring()->same(*target)) return e;
  const Ring& T = *target;
  switch (T.kind()) {
    case Ring::Kind::Rationals:
      if (e.ring()->kind() == Ring::Kind::Integers) return T.rational(e.ival(), 1);
      break;
    case Ring::Kind::Polynomial:
    case Ring::Kind::Laurent: {
      // constants embed; a polynomial ring embeds into the Laurent ring on
      // the same variable and base
      if (e.ring()->kind() == Ring::Kind::Polynomial && T.kind() == Ring::Kind::Laurent &&
          e.ring()->var() == T.var() && e.ring()->base()->same(*T.base())) {
        std::vector<std::pair<i64, RingElem>> ts;
        for (size_t i = 0; i < e.exps().size(); ++i) ts.emplace_back(e.exps()[i], e.coeffs()[i]);
        return T.make_poly(std::move(ts));
      }
      if ((e.ring()->kind() == Ring::Kind::Polynomial || e.ring()->kind() == Ring::Kind::Laurent) &&
          e.ring()->var() == T.var() && !e.ring()->base()->same(*T.base())) {
        // same variable, embed coefficients
        std::vector<std::pair<i64, RingElem>> ts;
        for (size_t i = 0; i < e.exps().size(); ++i) ts.emplace_back(e.exps()[i], embed(e.coeffs()[i], T.base()));
        return T.make_poly(std::move(ts));
      }
      return T.monomial(0, embed(e, T.base()));
    }
    case Ring::Kind::Localization:
      return T.make_loc(embed(e, T.base()), 0);
    default:
      break;
  }
  throw DescriptorMismatch("no structural embedding of " + e.ring()->str() + " into " + T.str());
}

// ---------------------------------------------------------------------------
// Homomorphisms

RingHom RingHom::evaluation(RingPtr source, const RingElem& value) {
  if (source->kind() != Ring::Kind::Polynomial && source->kind() != Ring::Kind::Laurent)
    throw DescriptorMismatch("evaluation source must be a polynomial or Laurent ring");
  if (source->kind() == Ring::Kind::Laurent && !value.is_unit())
    throw NonUnit("evaluation of a Laurent variable at a non-unit");
  RingHom h(Kind::Evaluation, source, value.ring());
  h.value_ = value;
  return h;
}
RingHom RingHom::localization_map(RingPtr source, const RingElem& den) {
  return RingHom(Kind::LocalizationMap, source, Ring::localization(source, den));
}
RingHom RingHom::reduction(RingPtr source, RingPtr target) {
  return RingHom(Kind::Reduction, std::move(source), std::move(target));
}
RingHom RingHom::inclusion(RingPtr source, RingPtr target) {
  return RingHom(Kind::Inclusion, std::move(source), std::move(target));
}
RingHom RingHom::projection(RingPtr dsource, int index) {
  if (dsource->kind() != Ring::Kind::DoubleRing) throw DescriptorMismatch("projection source must be a double ring");
  RingHom h(Kind::DoubleProjection, dsource, dsource->base());
  h.index_ = index;
  return h;
}
RingHom RingHom::diagonal(RingPtr dtarget) {
  if (dtarget->kind() != Ring::Kind::DoubleRing) throw DescriptorMismatch("diagonal target must be a double ring");
  return RingHom(Kind::Diagonal, dtarget->base(), dtarget);
}
RingHom RingHom::compose(const RingHom& second, const RingHom& first) {
  if (!first.target()->same(*second.source())) throw DescriptorMismatch("composition rings do not match");
  RingHom h(Kind::Composition, first.source(), second.target());
  h.parts_ = {first, second};
  return h;
}

namespace {
RingElem reduce_into(const RingElem& e, const RingPtr& target) {
  const Ring& S = *e.ring();
  const Ring& T = *target;
  if (S.same(T)) return e;
  if (T.kind() == Ring::Kind::IntegersMod &&
      (S.kind() == Ring::Kind::Integers || S.kind() == Ring::Kind::IntegersMod)) {
    if (S.kind() == Ring::Kind::IntegersMod && S.modulus() % T.modulus() != 0)
      throw DescriptorMismatch("reduction modulus must divide source modulus");
    return T.raw_int(e.ival());
  }
  if ((S.kind() == Ring::Kind::Polynomial || S.kind() == Ring::Kind::Laurent) && S.kind() == T.kind() &&
      S.var() == T.var()) {
    std::vector<std::pair<i64, RingElem>> ts;
    for (size_t i = 0; i < e.exps().size(); ++i) ts.emplace_back(e.exps()[i], reduce_into(e.coeffs()[i], T.base()));
    return T.make_poly(std::move(ts));
  }
  throw DescriptorMismatch("unsupported reduction " + S.str() + " -> " + T.str());
}
}  // namespace

RingElem RingHom::apply(const RingElem& e) const {
  if (!e.valid() || !e.ring()->same(*source_)) throw DescriptorMismatch("hom applied to element of wrong ring");
  switch (kind_) {
    case Kind::Evaluation: {
      RingElem acc = target_->zero();
      for (size_t i = 0; i < e.exps().size(); ++i) {
        RingElem c = embed(e.coeffs()[i], target_);
        acc = acc + c * value_.pow(e.exps()[i]);
      }
      return acc;
    }
    case Kind::LocalizationMap:
      return target_->make_loc(e, 0);
    case Kind::Reduction:
      return reduce_into(e, target_);
    case Kind::Inclusion:
      return embed(e, target_);
    case Kind::DoubleProjection:
      return index_ == 1 ? e.first() : e.second();
    case Kind::Diagonal:
      return target_->make_pair(e, e);
    case Kind::Composition:
      return parts_[1].apply(parts_[0].apply(e));
  }
  throw RingError("apply");
}

// ---------------------------------------------------------------------------
// Units

UnitGroup units(const RingPtr& r) {
  UnitGroup g;
  switch (r->kind()) {
    case Ring::Kind::IntegersMod: {
      g.enumerable = true;
      for (i64 v = 1; v < r->modulus(); ++v)
        if (gcd64(v, r->modulus()) == 1) {
          RingElem u = r->raw_int(v);
          // each has a verified inverse by construction
          (void)u.inverse();
          g.elements.push_back(u);
        }
      g.description = "units of Z/" + std::to_string(r->modulus());
      auto elems = g.elements;
      g.sample = [elems](u64 i) { return elems[i % elems.size()]; };
      return g;
    }
    case Ring::Kind::Laurent: {
      const Ring& B = *r->base();
      if (B.kind() == Ring::Kind::IntegersMod && B.residue_char() == B.modulus()) {
        g.enumerable = false;
        g.description = "{c*" + r->var() + "^k : c in F" + std::to_string(B.modulus()) + "^x, k in Z}";
        RingPtr rr = r;
        i64 p = B.modulus();
        g.sample = [rr, p](u64 i) {
          i64 c = 1 + (i64)(i % (u64)(p - 1));
          i64 k = (i64)((i / (u64)(p - 1)) % 9) - 4;
          return rr->monomial(k, rr->base()->raw_int(c));
        };
        return g;
      }
      throw NotEnumerable("Laurent unit description needs a prime field base");
    }
    default:
      throw NotEnumerable("unit group of " + r->str());
  }
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  char peek() const { return i < s.size() ? s[i] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw RingError("parse error at position " + std::to_string(i) + " in '" + s + "'");
  }
  bool starts(const std::string& w) {
    if (s.compare(i, w.size(), w) == 0) {
      i += w.size();
      return true;
    }
    return false;
  }
};

i64 parse_int(Cursor& c) {
  bool neg = c.eat('-');
  if (!std::isdigit((unsigned char)c.peek())) throw RingError("expected integer in ring/element text");
  i64 v = 0;
  while (std::isdigit((unsigned char)c.peek())) v = add64(mul64(v, 10), c.s[c.i++] - '0');
  return neg ? -v : v;
}

std::string parse_ident(Cursor& c) {
  std::string v;
  while (std::isalnum((unsigned char)c.peek()) || c.peek() == '_') v += c.s[c.i++];
  if (v.empty()) throw RingError("expected identifier");
  return v;
}

RingElem parse_sum(Cursor& c, const RingPtr& r);

// atom := integer | integer '/' integer | var ['^' int] | '(' sum ')' | '(a;b)' pair
RingElem parse_atom(Cursor& c, const RingPtr& r) {
  if (r->kind() == Ring::Kind::DoubleRing && c.peek() == '(') {
    size_t save = c.i;
    c.expect('(');
    // try pair form (a;b)
    try {
      RingElem a = parse_sum(c, r->base());
      if (c.eat(';')) {
        RingElem b = parse_sum(c, r->base());
        c.expect(')');
        return r->make_pair(a, b);
      }
    } catch (const RingError&) {
    }
    c.i = save;
  }
  if (c.peek() == '(') {
    c.expect('(');
    RingElem e = parse_sum(c, r);
    c.expect(')');
    return e;
  }
  if (std::isdigit((unsigned char)c.peek()) || c.peek() == '-') {
    i64 n = parse_int(c);
    if (r->kind() == Ring::Kind::Rationals && c.eat('/')) {
      i64 d = parse_int(c);
      return r->rational(n, d);
    }
    return r->integer(n);
  }
  if (std::isalpha((unsigned char)c.peek())) {
    // variable of this level or of a base level
    std::string v = parse_ident(c);
    i64 e = 1;
    if (c.eat('^')) e = parse_int(c);
    const Ring* lvl = r.get();
    std::vector<const Ring*> chain;
    while (lvl) {
      chain.push_back(lvl);
      if ((lvl->kind() == Ring::Kind::Polynomial || lvl->kind() == Ring::Kind::Laurent) && lvl->var() == v) {
        RingElem x = lvl->X(e);
        // re-embed up the chain
        for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) x = embed(x, (*it)->shared_from_this());
        return embed(x, r);
      }
      lvl = lvl->base().get();
    }
    throw RingError("unknown variable '" + v + "' in ring " + r->str());
  }
  throw RingError("parse error in element text");
}

RingElem parse_product(Cursor& c, const RingPtr& r) {
  RingElem e = parse_atom(c, r);
  while (c.eat('*')) e = e * parse_atom(c, r);
  return e;
}

RingElem parse_sum(Cursor& c, const RingPtr& r) {
  RingElem e = parse_product(c, r);
  while (true) {
    if (c.eat('+'))
      e = e + parse_product(c, r);
    else if (c.peek() == '-') {
      // '-' starts a new negated term
      c.expect('-');
      e = e - parse_product(c, r);
    } else
      break;
  }
  return e;
}

RingPtr parse_ring_inner(Cursor& c) {
  RingPtr r;
  if (c.starts("Zmod:")) {
    r = Ring::Zmod(parse_int(c));
  } else if (c.starts("D(")) {
    RingPtr base = parse_ring_inner(c);
    c.expect(',');
    c.expect('(');
    IdealSpec spec;
    if (c.peek() != ')') {
      spec.gens.push_back(parse_sum(c, base));
      while (c.eat(',')) spec.gens.push_back(parse_sum(c, base));
    }
    c.expect(')');
    c.expect(')');
    r = Ring::dring(base, std::move(spec));
  } else if (c.starts("Z")) {
    r = Ring::Z();
  } else if (c.starts("Q")) {
    r = Ring::Q();
  } else {
    throw RingError("cannot parse ring descriptor");
  }
  // suffixes: [v] [v,v^-1] @loc:<elem>
  while (true) {
    if (c.peek() == '[') {
      c.expect('[');
      std::string v = parse_ident(c);
      if (c.eat(',')) {
        std::string v2 = parse_ident(c);
        c.expect('^');
        if (parse_int(c) != -1 || v2 != v) throw RingError("malformed Laurent suffix");
        c.expect(']');
        r = Ring::laurent(r, v);
      } else {
        c.expect(']');
        r = Ring::poly(r, v);
      }
    } else if (c.starts("@loc:")) {
      // denominator parsed in the base ring; stops at [ , ) or end
      size_t j = c.i;
      int depth = 0;
      while (j < c.s.size()) {
        char ch = c.s[j];
        if (ch == '(') ++depth;
        if (ch == ')') {
          if (depth == 0) break;
          --depth;
        }
        if (depth == 0 && (ch == '[' || ch == ',')) break;
        ++j;
      }
      std::string sub = c.s.substr(c.i, j - c.i);
      RingElem den = parse_elem(r, sub);
      c.i = j;
      r = Ring::localization(r, den);
    } else
      break;
  }
  return r;
}

}  // namespace

RingPtr parse_ring(const std::string& text) {
  Cursor c{text};
  RingPtr r = parse_ring_inner(c);
  if (c.i != text.size()) throw RingError("trailing characters in ring descriptor '" + text + "'");
  return r;
}

RingElem parse_elem(const RingPtr& r, const std::string& text) {
  Cursor c{text};
  RingElem e = parse_sum(c, r);
  if (c.i != text.size()) throw RingError("trailing characters in element text '" + text + "'");
  return e;
}

}  // namespace stv
