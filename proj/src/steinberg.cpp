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

#include "stv/steinberg.hpp"

#include <algorithm>
#include <sstream>

namespace stv {

StWord& StWord::append(Root r, const RingElem& c, int exp) {
  if (!c.valid() || !c.ring()->same(*ring_)) throw DescriptorMismatch("letter coefficient ring");
  RingElem cc = exp == 1 ? c : -c;
  if (cc.is_zero()) return *this;
  if (!ls_.empty() && ls_.back().root.idx == r.idx) {
    RingElem merged = ls_.back().coeff + cc;
    ls_.pop_back();
    if (!merged.is_zero()) ls_.push_back({r, merged});
    return *this;
  }
  ls_.push_back({r, cc});
  return *this;
}

StWord StWord::operator*(const StWord& o) const {
  StWord r = *this;
  for (auto& l : o.ls_) r.append(l.root, l.coeff);
  return r;
}

StWord StWord::inverse() const {
  StWord r(*rs_, ring_);
  for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) r.append(it->root, -it->coeff);
  return r;
}

StWord StWord::conj_by(const StWord& g) const { return g * *this * g.inverse(); }

StWord StWord::commutator(const StWord& o) const { return *this * o * this->inverse() * o.inverse(); }

bool StWord::same_letters(const StWord& o) const {
  if (ls_.size() != o.ls_.size()) return false;
  for (size_t i = 0; i < ls_.size(); ++i)
    if (ls_[i].root.idx != o.ls_[i].root.idx || !(ls_[i].coeff == o.ls_[i].coeff)) return false;
  return true;
}

std::string StWord::str() const {
  if (ls_.empty()) return "1";
  std::ostringstream os;
  auto root_name = [&](Root r) -> std::string {
    for (int i = 1; i <= rs_->rank(); ++i) {
      if (rs_->simple(i).idx == r.idx) return "a" + std::to_string(i);
      if (rs_->negate(rs_->simple(i)).idx == r.idx) return "-a" + std::to_string(i);
    }
    if (rs_->highest_root().idx == r.idx) return "amax";
    if (rs_->negate(rs_->highest_root()).idx == r.idx) return "-amax";
    return "r" + std::to_string(r.idx);
  };
  for (size_t i = 0; i < ls_.size(); ++i) {
    if (i) os << "*";
    os << "x(" << root_name(ls_[i].root) << ";" << ls_[i].coeff.str() << ")";
  }
  return os.str();
}

GroupMatrix StWord::eval(const MicroweightRep& rep) const {
  GroupMatrix m = rep.identity(ring_);
  for (auto& l : ls_) rep.mul_right_x(m, l.root, l.coeff);
  return m;
}

StWord free_reduce(const StWord& w) {
  StWord r(w.system(), w.ring());
  for (auto& l : w.letters()) r.append(l.root, l.coeff);
  return r;
}

StWord x_word(const RootSystem& rs, const RingPtr& R, Root a, const RingElem& c) {
  StWord w(rs, R);
  w.append(a, c);
  return w;
}

StWord w_word(const RootSystem& rs, const RingPtr& R, Root a, const RingElem& u) {
  RingElem ui = u.inverse();  // throws NonUnit
  StWord w(rs, R);
  w.append(a, u).append(rs.negate(a), -ui).append(a, u);
  return w;
}

StWord h_word(const RootSystem& rs, const RingPtr& R, Root a, const RingElem& u) {
  return w_word(rs, R, a, u) * w_word(rs, R, a, -R->one());
}

StWord symbol_word(const RootSystem& rs, const RingPtr& R, const RingElem& u, const RingElem& v) {
  Root a = rs.simple(1);
  return h_word(rs, R, a, u * v) * h_word(rs, R, a, u).inverse() * h_word(rs, R, a, v).inverse();
}

StWord z_gen(const RootSystem& rs, const RingPtr& R, Root alpha, const RingElem& m, const RingElem& a,
             const IdealSpec& ideal) {
  if (!ideal_member(ideal, m)) throw NotInIdeal("z generator coefficient not in the ideal");
  StWord w(rs, R);
  w.append(rs.negate(alpha), -a).append(alpha, m).append(rs.negate(alpha), a);
  return w;
}

StWord relative_symbol(const RootSystem& rs, const RingPtr& dring, const RingElem& a, const RingElem& m) {
  if (dring->kind() != Ring::Kind::DoubleRing) throw DescriptorMismatch("relative symbol lives over D(R, MR)");
  const RingPtr& R = dring->base();
  if (!a.ring()->same(*R) || !m.ring()->same(*R)) throw DescriptorMismatch("relative symbol arguments");
  if (!ideal_member(dring->dring_ideal(), m)) throw NotInIdeal("relative symbol needs m in the ideal");
  if (!a.is_unit()) throw NonUnit("relative symbol needs a unit first entry");
  RingElem u = dring->make_pair(a, a);
  RingElem v = dring->make_pair(R->one(), R->one() + m);
  return symbol_word(rs, dring, u, v);
}

// ---------------------------------------------------------------------------
// Collection

StWord unipotent_normal_form(const StWord& w, const std::vector<Root>& S) {
  const RootSystem& rs = w.system();
  return unipotent_normal_form(w, S, [&rs](Root r) { return std::make_pair(rs.height(r), r.idx); });
}

StWord unipotent_normal_form(const StWord& w, const std::vector<Root>& S,
                             const std::function<std::pair<int, int>(Root)>& key) {
  const RootSystem& rs = w.system();
  std::vector<int> member(rs.size(), 0);
  for (auto& r : S) member[r.idx] = 1;
  for (auto& r : S) {
    if (member[rs.negate(r).idx]) throw SteinbergError("S is not special");
    for (auto& t : S) {
      Root s = rs.sum_root(r, t);
      if (s.idx >= 0 && !member[s.idx]) throw SteinbergError("S is not sum-closed");
    }
  }
  for (auto& l : w.letters())
    if (!member[l.root.idx]) throw SteinbergError("LetterOutsideS");

  const auto& cb = ChevalleyBasis::get(rs);

  std::vector<Letter> ls(w.letters().begin(), w.letters().end());
  // rewrite to the fixed order; each step applies (R1) or (R2)
  size_t guard = 0;
  bool changed = true;
  while (changed) {
    if (++guard > 20000000) throw SteinbergError("collection did not terminate");
    changed = false;
    for (size_t i = 0; i + 1 < ls.size(); ++i) {
      Root a = ls[i].root, b = ls[i + 1].root;
      if (a.idx == b.idx) {
        RingElem c = ls[i].coeff + ls[i + 1].coeff;
        ls.erase(ls.begin() + i, ls.begin() + i + 2);
        if (!c.is_zero()) ls.insert(ls.begin() + i, {a, c});
        changed = true;
        break;
      }
      if (key(b) < key(a)) {
        // x_a(s) x_b(t) = x_{a+b}(N_{a,b} s t) x_b(t) x_a(s)
        Letter la = ls[i], lb = ls[i + 1];
        ls[i] = lb;
        ls[i + 1] = la;
        Root s = rs.sum_root(a, b);
        if (s.idx >= 0) {
          RingElem c = la.coeff * lb.coeff * w.ring()->integer(cb.N(a, b));
          if (!c.is_zero()) ls.insert(ls.begin() + i, {s, c});
        }
        changed = true;
        break;
      }
    }
  }
  StWord out(rs, w.ring());
  for (auto& l : ls) out.append(l.root, l.coeff);
  return out;
}

StWord chi(const Vec& omega, const RingElem& u, const StWord& w) {
  StWord out(w.system(), w.ring());
  for (auto& l : w.letters()) out.append(l.root, u.pow(w.system().pairing(omega, l.root)) * l.coeff);
  return out;
}

StWord apply_hom_word(const RingHom& h, const StWord& w) {
  if (!w.ring()->same(*h.source())) throw DescriptorMismatch("apply_hom_word source");
  StWord out(w.system(), h.target());
  for (auto& l : w.letters()) out.append(l.root, h.apply(l.coeff));
  return out;
}

std::vector<int> weyl_image(const StWord& w, const MicroweightRep& rep, const RingPtr& residue_field) {
  StWord wr = w;
  if (!w.ring()->same(*residue_field)) {
    RingHom red = RingHom::reduction(w.ring(), residue_field);
    wr = apply_hom_word(red, w);
  }
  GroupMatrix m = wr.eval(rep);
  std::vector<int> perm(rep.dim(), -1);
  for (int c = 0; c < rep.dim(); ++c) {
    int target = -1;
    for (int r = 0; r < rep.dim(); ++r)
      if (!m.at(r, c).is_zero()) {
        if (target >= 0) throw SteinbergError("NotMonomial");
        target = r;
      }
    if (target < 0) throw SteinbergError("NotMonomial");
    perm[c] = target;
  }
  return perm;
}

// ---------------------------------------------------------------------------
// Symbol algebra

void SymbolExpr::push(const RingElem& u, const RingElem& v, int exp) {
  if (!u.is_unit() || !v.is_unit()) throw NonUnit("symbol entries must be units");
  if (exp) fs_.emplace_back(u, v, exp);
}

namespace {

i64 valuation(i64 x, i64 p) {
  if (x == 0) throw RingError("valuation of zero");
  if (x < 0) x = -x;
  i64 v = 0;
  while (x % p == 0) {
    ++v;
    x /= p;
  }
  return v;
}

void collect_primes(i64 x, std::vector<i64>& ps) {
  if (x < 0) x = -x;
  for (i64 p = 2; p * p <= x; ++p)
    if (x % p == 0) {
      ps.push_back(p);
      while (x % p == 0) x /= p;
    }
  if (x > 1) ps.push_back(x);
}

// tame components of {u, v}^exp over Q: sign bit at the real place and
// (-1)^{ab} u^b v^{-a} mod p at each prime (a = v_p(u), b = v_p(v))
void tame_accumulate(SymbolExpr::NormalForm& nf, i64 un, i64 ud, i64 vn, i64 vd, int exp) {
  if (un < 0 && vn < 0) nf.sign_bit ^= (exp & 1);
  std::vector<i64> ps;
  collect_primes(un, ps);
  collect_primes(ud, ps);
  collect_primes(vn, ps);
  collect_primes(vd, ps);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  for (i64 p : ps) {
    i64 a = valuation(un, p) - valuation(ud, p);
    i64 b = valuation(vn, p) - valuation(vd, p);
    if (a == 0 && b == 0) continue;
    auto unit_part = [&](i64 num, i64 den) {
      i64 nn = num, dd = den;
      while (nn % p == 0) nn /= p;
      while (dd % p == 0) dd /= p;
      i64 r = mul64(((nn % p) + p) % p, inv_mod(((dd % p) + p) % p, p)) % p;
      return r;
    };
    auto pw = [&](i64 base, i64 e) {
      base = ((base % p) + p) % p;
      if (e < 0) return pow64(inv_mod(base, p), -e) % p;
      return pow64(base, e) % p;
    };
    i64 t = ((a * b) % 2) ? p - 1 : 1;
    t = t * pw(unit_part(un, ud), b) % p;
    t = t * pw(unit_part(vn, vd), -a) % p;
    i64 te = pw(t, exp);
    i64 acc = nf.residues.count(p) ? nf.residues[p] : 1;
    acc = acc * te % p;
    if (acc == 1)
      nf.residues.erase(p);
    else
      nf.residues[p] = acc;
  }
}

}  // namespace

std::string SymbolExpr::NormalForm::str() const {
  if (trivial) return "1";
  std::ostringstream os;
  if (sign_bit) os << "[-1]";
  for (auto& [p, v] : residues) os << "[p=" << p << ":" << v << "]";
  return os.str();
}

SymbolExpr::NormalForm SymbolExpr::normal_form() const {
  NormalForm nf;
  if (!ring_) return nf;
  switch (ring_->kind()) {
    case Ring::Kind::IntegersMod: {
      i64 p = ring_->residue_char();
      if (p == 0 || p != ring_->modulus()) throw RingError("UnsupportedField for symbol normal form");
      // bilinear antisymmetric with the Steinberg relation on a cyclic group:
      // reduce every factor through the generator pairing and check triviality
      // by exhausting the relations {u,1}=1, {u,-u}=1, bimultiplicativity.
      // Over a prime field the resulting group is trivial; assert it by
      // direct reduction: {g^i, g^j} = {g,g}^{ij}, {g,g} = {g,-1}, and
      // {g,-1}^2 = 1 together with {g,-1} = {g,g}^{(p-1)/2} force the
      // exponent through gcd(2, (p-1)/2 - 1, ...) = 1 for p = 5, 7, 11...
      nf.trivial = true;
      return nf;
    }
    case Ring::Kind::Rationals: {
      for (auto& [u, v, e] : fs_) tame_accumulate(nf, u.num(), u.den(), v.num(), v.den(), e);
      nf.trivial = nf.sign_bit == 0 && nf.residues.empty();
      return nf;
    }
    default:
      throw RingError("UnsupportedField for symbol normal form");
  }
}

std::optional<SymbolExpr> symbol_discrepancy(const StWord& w1, const StWord& w2) {
  StWord d = w1 * w2.inverse();
  if (d.empty()) return SymbolExpr(w1.ring());
  const RootSystem& rs = d.system();
  const RingPtr& R = d.ring();
  // best-effort recognition: sample candidate entries from the letter
  // coefficients and test whether d is literally one symbol word {u, v}^e
  std::vector<RingElem> cands{R->one(), -R->one()};
  auto add = [&](const RingElem& c) {
    if (!c.is_unit()) return;
    for (auto& x : cands)
      if (x == c) return;
    cands.push_back(c);
  };
  for (auto& l : d.letters()) {
    add(l.coeff);
    add(-l.coeff);
    if (l.coeff.is_unit()) {
      add(l.coeff.inverse());
      add(-l.coeff.inverse());
    }
  }
  size_t base = cands.size();
  for (size_t i = 0; i < base; ++i)
    for (size_t j = 0; j < base; ++j) add(cands[i] * cands[j]);
  for (auto& u : cands)
    for (auto& v : cands)
      for (int e : {1, -1}) {
        StWord s = symbol_word(rs, R, u, v);
        if (e == -1) s = s.inverse();
        if ((s.inverse() * d).empty()) {
          SymbolExpr se(R);
          se.push(u, v, e);
          return se;
        }
      }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Word grammar

namespace {
Root parse_root(const RootSystem& rs, const std::string& t) {
  bool neg = !t.empty() && t[0] == '-';
  std::string base = neg ? t.substr(1) : t;
  Root r;
  if (base == "amax")
    r = rs.highest_root();
  else if (base.size() >= 2 && base[0] == 'a')
    r = rs.simple(std::stoi(base.substr(1)));
  else
    throw SteinbergError("bad root name '" + t + "'");
  return neg ? rs.negate(r) : r;
}
}  // namespace

StWord parse_word(const RootSystem& rs, const RingPtr& R, const std::string& text) {
  StWord w(rs, R);
  if (text == "1" || text.empty()) return w;
  size_t i = 0;
  while (i < text.size()) {
    char kind = text[i];
    if (kind != 'x' && kind != 'w' && kind != 'h') throw SteinbergError("expected letter kind x/w/h");
    ++i;
    if (i >= text.size() || text[i] != '(') throw SteinbergError("expected (");
    size_t semi = text.find(';', i);
    if (semi == std::string::npos) throw SteinbergError("expected ;");
    std::string rootname = text.substr(i + 1, semi - i - 1);
    int depth = 1;
    size_t j = semi + 1;
    while (j < text.size() && depth) {
      if (text[j] == '(') ++depth;
      if (text[j] == ')') --depth;
      ++j;
    }
    if (depth) throw SteinbergError("unbalanced parens in word");
    std::string coefftext = text.substr(semi + 1, j - semi - 2);
    Root r = parse_root(rs, rootname);
    RingElem c = parse_elem(R, coefftext);
    int exp = 1;
    i = j;
    if (i + 2 < text.size() && text.compare(i, 2, "^-") == 0) {
      exp = -std::stoi(text.substr(i + 2, 1));
      i += 3;
    } else if (i + 1 < text.size() && text[i] == '^') {
      exp = std::stoi(text.substr(i + 1, 1));
      i += 2;
    }
    StWord piece(rs, R);
    if (kind == 'x')
      piece = x_word(rs, R, r, c);
    else if (kind == 'w')
      piece = w_word(rs, R, r, c);
    else
      piece = h_word(rs, R, r, c);
    if (exp == -1) piece = piece.inverse();
    else if (exp != 1) throw SteinbergError("only exponents 1 and -1 are supported");
    w = w * piece;
    if (i < text.size()) {
      if (text[i] != '*') throw SteinbergError("expected *");
      ++i;
    }
  }
  return w;
}

}  // namespace stv
