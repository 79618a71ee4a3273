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

#ifndef STV_ROOTSYS_HPP
#define STV_ROOTSYS_HPP

#include <array>
#include <string>
#include <vector>

#include "stv/ring.hpp"

namespace stv {

struct RootSysError : std::runtime_error {
  explicit RootSysError(const std::string& w) : std::runtime_error(w) {}
};

/// Exact rational with small numerator/denominator; the realizations only
/// need denominators dividing 6.
struct Rat {
  i64 n = 0, d = 1;
  Rat() = default;
  Rat(i64 v) : n(v) {}
  Rat(i64 nn, i64 dd);
  Rat operator+(Rat o) const { return Rat(add64(mul64(n, o.d), mul64(o.n, d)), mul64(d, o.d)); }
  Rat operator-(Rat o) const { return Rat(sub64(mul64(n, o.d), mul64(o.n, d)), mul64(d, o.d)); }
  Rat operator*(Rat o) const { return Rat(mul64(n, o.n), mul64(d, o.d)); }
  Rat operator/(Rat o) const { return Rat(mul64(n, o.d), mul64(d, o.n)); }
  Rat operator-() const { return Rat(-n, d); }
  bool operator==(const Rat& o) const { return n == o.n && d == o.d; }
  bool operator<(const Rat& o) const { return mul64(n, o.d) < mul64(o.n, d); }
  bool is_int() const { return d == 1; }
  std::string str() const;
};

using Vec = std::vector<Rat>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& v);
Rat dot(const Vec& a, const Vec& b);

/// Index into a RootSystem's root list.
struct Root {
  int idx = -1;
  bool operator==(const Root& o) const { return idx == o.idx; }
};

struct AffineRoot {
  Root root;
  i64 level = 0;
};

/// Node markings of the extended Dynkin diagram (Figure-style data):
/// the affinizing node 0, its neighbour j, and the distinguished node k.
struct ExtendedDiagramMarks {
  int j = 0;  // simple-root index adjacent to node 0 (1-based)
  int k = 0;  // distinguished node (1-based); m_k(alpha_max) = 1
};

/// Simply-laced root system in its standard rational realization, with the
/// Weyl combinatorics the rest of the library consumes. Immutable.
class RootSystem {
 public:
  static const RootSystem& get(char type, int rank);  // cached; 'A','D','E'

  char type() const { return type_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  size_t size() const { return roots_.size(); }

  const Vec& root(Root r) const { return roots_[r.idx]; }
  const std::vector<Vec>& roots() const { return roots_; }
  Root negate(Root r) const { return {neg_[r.idx]}; }
  Root simple(int i) const { return {simple_[i - 1]}; }  // 1-based
  Root highest_root() const { return {alpha_max_}; }
  const std::vector<int>& positive() const { return pos_; }
  bool is_positive(Root r) const { return height_[r.idx] > 0; }
  int height(Root r) const { return height_[r.idx]; }
  /// coefficient m_i(alpha) of alpha on the i-th simple root (1-based i)
  int coeff(int i, Root r) const { return m_[r.idx][i - 1]; }
  const Vec& fundamental_weight(int i) const { return fw_[i - 1]; }  // 1-based

  /// exact integer pairing <v, beta> = (v, beta) in the norm-2 normalization
  int pairing(const Vec& v, Root beta) const;
  int pairing_rr(Root a, Root b) const { return pair_rr_[a.idx][b.idx]; }

  Vec reflect(Root alpha, const Vec& v) const;
  Root reflect_root(Root alpha, Root beta) const;
  /// index of a coordinate vector in the root list, or -1
  int find_root(const Vec& v) const;
  /// alpha + beta as a Root when the sum is a root; idx == -1 otherwise
  Root sum_root(Root a, Root b) const { return {sum_[a.idx][b.idx]}; }

  struct SpecialSubsets {
    std::vector<Root> sigma_plus, delta, sigma_minus;
  };
  SpecialSubsets special_subsets(int k) const;

  bool is_microweight(const Vec& w) const;
  bool in_weight_lattice(const Vec& w) const;

  /// Weyl orbit of the k-th fundamental weight (must be a microweight),
  /// listed from the highest weight downward (height order on w_k - lambda).
  std::vector<Vec> weight_orbit(int k) const;
  /// true iff a > b: a - b is a nonzero nonnegative integral combination of
  /// simple roots
  bool weight_gt(const Vec& a, const Vec& b) const;

  ExtendedDiagramMarks extended_marks() const;
  /// simple indices i (1-based) with no edge to node 0 on the extended diagram
  std::vector<int> unjoined_with_affine_node() const;

  /// all closed A3 root subsystems, each as a sorted list of root indices
  const std::vector<std::vector<int>>& a3_subsystems() const;

  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

 private:
  RootSystem(char type, int rank);
  char type_;
  int rank_, dim_;
  std::vector<Vec> roots_;
  std::vector<int> simple_, neg_, pos_, height_;
  int alpha_max_ = -1;
  std::vector<std::vector<int>> m_;        // simple-basis coefficients
  std::vector<std::vector<int>> pair_rr_;  // pairings between roots
  std::vector<std::vector<int>> sum_;      // root-sum table (-1 when not a root)
  std::vector<Vec> fw_;
  mutable std::vector<std::vector<int>> a3_;  // built lazily
  mutable bool a3_built_ = false;
};

bool prenilpotent(const AffineRoot& a, const AffineRoot& b, const RootSystem& rs);

}  // namespace stv

#endif
