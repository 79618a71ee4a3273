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

#ifndef STV_CHEVALLEY_HPP
#define STV_CHEVALLEY_HPP

#include <optional>

#include "stv/ring.hpp"
#include "stv/rootsys.hpp"

namespace stv {

struct ChevalleyError : std::runtime_error {
  explicit ChevalleyError(const std::string& w) : std::runtime_error(w) {}
};

class MicroweightRep;

/// Structure constants N_{a,b} for the simply-laced Lie algebra, plus the
/// conjugation constants eta_{a,b} with ^{w_a(1)} x_b(t) = x_{s_a b}(eta t).
///
/// For type A the convention is pinned to matrix units (so the standard
/// representation is literally e + t E_ij); for D and E the constants come
/// from a bimultiplicative asymmetry function on the root lattice. Both are
/// verified against the module commutators at construction.
class ChevalleyBasis {
 public:
  static const ChevalleyBasis& get(const RootSystem& rs);

  const RootSystem& system() const { return *rs_; }
  /// N_{a,b}; only defined when a+b is a root
  int N(Root a, Root b) const;
  /// eta_{a,b} in {+1,-1}
  int eta(Root a, Root b) const { return eta_[a.idx][b.idx]; }

 private:
  explicit ChevalleyBasis(const RootSystem& rs);
  const RootSystem* rs_;
  std::vector<std::vector<signed char>> n_, eta_;
  friend class MicroweightRep;
};

/// Square matrix over a ring, indexed by the weight list of a rep.
class GroupMatrix {
 public:
  GroupMatrix() = default;
  GroupMatrix(RingPtr ring, int n, bool identity = true);
  int n() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  RingElem& at(int r, int c) { return a_[(size_t)r * n_ + c]; }
  const RingElem& at(int r, int c) const { return a_[(size_t)r * n_ + c]; }
  GroupMatrix operator*(const GroupMatrix& o) const;
  bool operator==(const GroupMatrix& o) const;
  bool is_identity() const;
  /// position of the first differing entry, when any
  std::optional<std::pair<int, int>> diff(const GroupMatrix& o) const;

 private:
  RingPtr ring_;
  int n_ = 0;
  std::vector<RingElem> a_;
};

/// Faithful microweight representation: weight-indexed basis with the exact
/// matrices of the elementary root unipotents. For D_l the module is the
/// direct sum of the vector and (l-th) half-spin orbits so the centre acts
/// faithfully.
class MicroweightRep {
 public:
  /// (A_l, k=1), (D_l, k=1 with the spin block appended), (E6, k=1), (E7, k=7)
  static const MicroweightRep& get(const RootSystem& rs, int k);
  /// the rep used by default for a system (k from the extended marks, k=1 for A)
  static const MicroweightRep& standard(const RootSystem& rs);

  const RootSystem& system() const { return *rs_; }
  const ChevalleyBasis& basis() const { return *cb_; }
  int k() const { return k_; }
  int dim() const { return (int)weights_.size(); }
  const std::vector<Vec>& weights() const { return weights_; }
  int block_count() const { return nblocks_; }
  int block_of(int widx) const { return block_[widx]; }
  /// index of the highest weight of block b
  int top_of_block(int b) const { return top_[b]; }
  /// index of lambda + alpha in the weight list, -1 when absent
  int shift(Root a, int widx) const { return shift_[a.idx][widx]; }
  /// sign of e_alpha on v_lambda (0 when lambda+alpha is not a weight)
  int sign(Root a, int widx) const { return sign_[a.idx][widx]; }
  int weight_index(const Vec& w) const;

  struct Move {
    int to, from;
    signed char s;
  };
  const std::vector<Move>& moves(Root a) const { return moves_[a.idx]; }

  // --- exact matrices over a ring ---
  GroupMatrix identity(const RingPtr& r) const;
  /// rho(x_alpha(c)) = 1 + c e_alpha
  GroupMatrix rho_x(Root a, const RingElem& c) const;
  /// in-place m := m * rho(x_alpha(c))
  void mul_right_x(GroupMatrix& m, Root a, const RingElem& c) const;
  GroupMatrix rho_w(Root a, const RingElem& u) const;  // w_alpha(u), u a unit
  GroupMatrix rho_h(Root a, const RingElem& u) const;  // h_alpha(u)
  /// H_omega(u): diagonal u^{(omega, lambda - mu0)} with mu0 the minimal
  /// weight of the block of lambda; conjugation by it realizes chi_{omega,u}
  GroupMatrix weight_torus(const Vec& omega, const RingElem& u) const;
  /// exponent (omega, lambda - mu0) used by weight_torus
  i64 torus_exp(const Vec& omega, int widx) const;

 private:
  MicroweightRep(const RootSystem& rs, int k);
  const RootSystem* rs_;
  const ChevalleyBasis* cb_;
  int k_, nblocks_;
  std::vector<Vec> weights_;
  std::vector<int> block_, top_, bottom_;
  std::vector<std::vector<int>> shift_;
  std::vector<std::vector<signed char>> sign_;
  std::vector<std::vector<Move>> moves_;
};

}  // namespace stv

#endif
