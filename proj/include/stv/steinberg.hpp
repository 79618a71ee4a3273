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

#ifndef STV_STEINBERG_HPP
#define STV_STEINBERG_HPP

#include <map>

#include "stv/chevalley.hpp"

namespace stv {

struct SteinbergError : std::runtime_error {
  explicit SteinbergError(const std::string& w) : std::runtime_error(w) {}
};

/// One generator letter x_root(coeff). Inverses are folded into the
/// coefficient on construction (x_a(c)^{-1} = x_a(-c) by additivity).
struct Letter {
  Root root;
  RingElem coeff;
};

/// Freely reduced word in Steinberg generators over a fixed ring: no zero
/// coefficients, adjacent same-root letters merged.
class StWord {
 public:
  StWord() = default;
  StWord(const RootSystem& rs, RingPtr ring) : rs_(&rs), ring_(std::move(ring)) {}

  const RootSystem& system() const { return *rs_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<Letter>& letters() const { return ls_; }
  bool empty() const { return ls_.empty(); }
  size_t size() const { return ls_.size(); }

  StWord& append(Root r, const RingElem& c, int exp = 1);
  StWord operator*(const StWord& o) const;
  StWord inverse() const;
  StWord conj_by(const StWord& g) const;       // g * w * g^{-1}
  StWord commutator(const StWord& o) const;    // [this, o] = t o t^{-1} o^{-1}
  bool same_letters(const StWord& o) const;

  std::string str() const;

  // rho over the standard faithful rep (GroupMatrix path; any supported ring)
  GroupMatrix eval(const MicroweightRep& rep) const;

 private:
  const RootSystem* rs_ = nullptr;
  RingPtr ring_;
  std::vector<Letter> ls_;
};

StWord free_reduce(const StWord& w);

// derived constructors
StWord x_word(const RootSystem& rs, const RingPtr& R, Root a, const RingElem& c);
StWord w_word(const RootSystem& rs, const RingPtr& R, Root a, const RingElem& u);
StWord h_word(const RootSystem& rs, const RingPtr& R, Root a, const RingElem& u);
/// Steinberg symbol {u, v} = h(uv) h(u)^{-1} h(v)^{-1} on the first simple root
StWord symbol_word(const RootSystem& rs, const RingPtr& R, const RingElem& u, const RingElem& v);
/// z_alpha(m, a) = x_{-a}(a)^{-1} x_alpha(m) x_{-alpha}(a); checks m in I
StWord z_gen(const RootSystem& rs, const RingPtr& R, Root alpha, const RingElem& m, const RingElem& a,
             const IdealSpec& ideal);
/// the relative symbol {(a;a), (1;1+m)} over D_{R,MR}
StWord relative_symbol(const RootSystem& rs, const RingPtr& dring, const RingElem& a, const RingElem& m);

/// Collection into the canonical ordered product over a special sum-closed
/// subset S; throws LetterOutsideS via SteinbergError. The order is ascending
/// height with ties by root index.
StWord unipotent_normal_form(const StWord& w, const std::vector<Root>& S);
/// collection with a caller-supplied order key (smaller keys first)
StWord unipotent_normal_form(const StWord& w, const std::vector<Root>& S,
                             const std::function<std::pair<int, int>(Root)>& key);

/// chi_{omega,u}: letterwise x_a(c) -> x_a(u^{<omega,a>} c)
StWord chi(const Vec& omega, const RingElem& u, const StWord& w);

/// letterwise coefficient map, then free reduction
StWord apply_hom_word(const RingHom& h, const StWord& w);

/// image of a word of w/h-letters in W(Phi) as a permutation of the weight
/// list of the given rep over the residue field; throws if not monomial
std::vector<int> weyl_image(const StWord& w, const MicroweightRep& rep, const RingPtr& residue_field);

// --- formal symbol algebra ---

/// Formal product of Steinberg symbols {u, v}^e. Normal form uses
/// bimultiplicativity, antisymmetry, {u,1} = 1 and the Steinberg relation
/// {u,-u} = 1. Over a prime field the group is trivial; over Q the class is
/// the tame-symbol component vector (a plumbing model of the stable group).
class SymbolExpr {
 public:
  SymbolExpr() = default;
  explicit SymbolExpr(RingPtr ring) : ring_(std::move(ring)) {}
  void push(const RingElem& u, const RingElem& v, int exp = 1);
  const RingPtr& ring() const { return ring_; }
  const std::vector<std::tuple<RingElem, RingElem, int>>& factors() const { return fs_; }

  struct NormalForm {
    bool trivial = true;
    // tame components: -1-sign bit and per-prime residues (Q model)
    int sign_bit = 0;
    std::map<i64, i64> residues;  // prime -> value in F_p^x (1 omitted)
    std::string str() const;
    bool operator==(const NormalForm& o) const {
      return trivial == o.trivial && sign_bit == o.sign_bit && residues == o.residues;
    }
  };
  NormalForm normal_form() const;

 private:
  RingPtr ring_;
  std::vector<std::tuple<RingElem, RingElem, int>> fs_;
};

/// When w1 w2^{-1} freely reduces to a product of h-letters on a single root,
/// fold it into a SymbolExpr bookkeeping term (h_a(u) h_a(v) = {u,v} h_a(uv)).
std::optional<SymbolExpr> symbol_discrepancy(const StWord& w1, const StWord& w2);

// CLI word grammar: x(a1;3X+2)*w(amax;1)^-1, roots a<i>, -a<i>, amax, -amax
StWord parse_word(const RootSystem& rs, const RingPtr& R, const std::string& text);

}  // namespace stv

#endif
