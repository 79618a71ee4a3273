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

#include "stv/rootsys.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

namespace stv {

Rat::Rat(i64 nn, i64 dd) {
  if (dd == 0) throw RootSysError("zero denominator");
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  i64 g = gcd64(nn, dd);
  if (g > 1) {
    nn /= g;
    dd /= g;
  }
  n = nn;
  d = nn == 0 ? 1 : dd;
}
std::string Rat::str() const {
  std::ostringstream os;
  os << n;
  if (d != 1) os << "/" << d;
  return os.str();
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
Vec scale(const Rat& c, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}
Rat dot(const Vec& a, const Vec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

namespace {

Vec unit(int dim, int i, Rat c = Rat(1)) {
  Vec v(dim, Rat(0));
  v[i] = c;
  return v;
}

// exact rational linear solve (square, invertible); small systems only
std::vector<Rat> solve(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  size_t n = A.size();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && A[p][c].n == 0) ++p;
    if (p == n) throw RootSysError("singular system");
    std::swap(A[p], A[c]);
    std::swap(b[p], b[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c].n == 0) continue;
      Rat f = A[r][c] / A[c][c];
      for (size_t k = c; k < n; ++k) A[r][k] = A[r][k] - f * A[c][k];
      b[r] = b[r] - f * b[c];
    }
  }
  std::vector<Rat> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

int index_of(const std::vector<Vec>& roots, const Vec& v) {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v) return (int)i;
  throw RootSysError("vector not a root");
}

}  // namespace

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
  std::vector<Vec> simple;
  switch (type) {
    case 'A': {
      if (rank < 1) throw RootSysError("A rank >= 1");
      dim_ = rank + 1;
      for (int i = 0; i < rank; ++i) simple.push_back(unit(dim_, i) - unit(dim_, i + 1));
      break;
    }
    case 'D': {
      if (rank < 4) throw RootSysError("D rank >= 4");
      dim_ = rank;
      for (int i = 0; i + 1 < rank; ++i) simple.push_back(unit(dim_, i) - unit(dim_, i + 1));
      simple.push_back(unit(dim_, rank - 2) + unit(dim_, rank - 1));
      break;
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw RootSysError("E rank in {6,7,8}");
      dim_ = 8;
      Vec a1(8, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      simple.push_back(a1);                       // alpha_1
      simple.push_back(unit(8, 0) + unit(8, 1));  // alpha_2
      for (int i = 0; i < rank - 2; ++i)          // alpha_3 .. alpha_rank
        simple.push_back(unit(8, i + 1) - unit(8, i));
      break;
    }
    default:
      throw RootSysError("UnsupportedType");
  }

  // closure enumeration: orbit of the simple roots under simple reflections
  std::vector<Vec> all = simple;
  auto contains = [&](const Vec& v) {
    for (auto& w : all)
      if (w == v) return true;
    return false;
  };
  for (auto& s : simple) {
    Vec m = scale(Rat(-1), s);
    if (!contains(m)) all.push_back(m);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    size_t n0 = all.size();
    for (size_t i = 0; i < n0; ++i)
      for (auto& s : simple) {
        Rat p = dot(all[i], s);  // = <v, s> since (s,s) = 2
        Vec refl = all[i] - scale(p, s);
        if (!contains(refl)) {
          all.push_back(refl);
          grew = true;
        }
      }
  }
  roots_ = std::move(all);

  simple_.resize(rank);
  for (int i = 0; i < rank; ++i) simple_[i] = index_of(roots_, simple[i]);

  // fundamental weights: solve (w, alpha_j) = delta_ij in the span, except
  // A type where the integral representative e_1 + ... + e_i is used (it
  // differs by a vector orthogonal to every root)
  fw_.resize(rank);
  if (type == 'A') {
    for (int i = 1; i <= rank; ++i) {
      Vec w(dim_, Rat(0));
      for (int t = 0; t < i; ++t) w[t] = Rat(1);
      fw_[i - 1] = w;
    }
  } else {
    for (int i = 0; i < rank; ++i) {
      std::vector<std::vector<Rat>> A(rank, std::vector<Rat>(rank));
      std::vector<Rat> b(rank, Rat(0));
      for (int r = 0; r < rank; ++r)
        for (int c = 0; c < rank; ++c) A[r][c] = dot(simple[r], simple[c]);
      b[i] = Rat(1);
      auto cs = solve(A, b);
      Vec w(dim_, Rat(0));
      for (int k = 0; k < rank; ++k) w = w + scale(cs[k], simple[k]);
      fw_[i] = w;
    }
  }

  m_.assign(roots_.size(), std::vector<int>(rank));
  height_.assign(roots_.size(), 0);
  for (size_t r = 0; r < roots_.size(); ++r) {
    int h = 0;
    for (int i = 0; i < rank; ++i) {
      Rat c = dot(fw_[i], roots_[r]);
      if (!c.is_int()) throw RootSysError("non-integral simple coefficient");
      m_[r][i] = (int)c.n;
      h += (int)c.n;
    }
    height_[r] = h;
  }

  neg_.resize(roots_.size());
  for (size_t r = 0; r < roots_.size(); ++r) neg_[r] = index_of(roots_, scale(Rat(-1), roots_[r]));

  for (size_t r = 0; r < roots_.size(); ++r)
    if (height_[r] > 0) pos_.push_back((int)r);
  std::sort(pos_.begin(), pos_.end(), [&](int a, int b) {
    if (height_[a] != height_[b]) return height_[a] < height_[b];
    return a < b;
  });
  alpha_max_ = pos_.back();
  for (int p : pos_)
    if (p != alpha_max_ && height_[p] == height_[alpha_max_])
      throw RootSysError("highest root not unique");

  pair_rr_.assign(roots_.size(), std::vector<int>(roots_.size()));
  sum_.assign(roots_.size(), std::vector<int>(roots_.size(), -1));
  for (size_t a = 0; a < roots_.size(); ++a)
    for (size_t b = 0; b < roots_.size(); ++b) {
      Rat p = dot(roots_[a], roots_[b]);
      if (!p.is_int()) throw RootSysError("non-integral root pairing");
      pair_rr_[a][b] = (int)p.n;
      Vec s = roots_[a] + roots_[b];
      for (size_t r = 0; r < roots_.size(); ++r)
        if (roots_[r] == s) {
          sum_[a][b] = (int)r;
          break;
        }
    }
}

int RootSystem::find_root(const Vec& v) const {
  for (size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i] == v) return (int)i;
  return -1;
}

const RootSystem& RootSystem::get(char type, int rank) {
  static std::map<std::pair<char, int>, std::unique_ptr<RootSystem>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> g(mu);
  auto key = std::make_pair(type, rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<RootSystem>(new RootSystem(type, rank))).first;
  return *it->second;
}

int RootSystem::pairing(const Vec& v, Root beta) const {
  Rat p = dot(v, roots_[beta.idx]);
  if (!p.is_int()) throw RootSysError("non-integral pairing");
  return (int)p.n;
}

Vec RootSystem::reflect(Root alpha, const Vec& v) const {
  Rat p = dot(v, roots_[alpha.idx]);
  return v - scale(p, roots_[alpha.idx]);
}

Root RootSystem::reflect_root(Root alpha, Root beta) const {
  int idx = find_root(reflect(alpha, roots_[beta.idx]));
  if (idx < 0) throw RootSysError("reflection left the system");
  return {idx};
}

RootSystem::SpecialSubsets RootSystem::special_subsets(int k) const {
  if (k < 1 || k > rank_) throw RootSysError("special_subsets index");
  SpecialSubsets s;
  for (size_t r = 0; r < roots_.size(); ++r) {
    int c = m_[r][k - 1];
    if (c > 0)
      s.sigma_plus.push_back({(int)r});
    else if (c < 0)
      s.sigma_minus.push_back({(int)r});
    else
      s.delta.push_back({(int)r});
  }
  return s;
}

bool RootSystem::in_weight_lattice(const Vec& w) const {
  for (size_t r = 0; r < roots_.size(); ++r)
    if (!dot(w, roots_[r]).is_int()) return false;
  return true;
}

bool RootSystem::is_microweight(const Vec& w) const {
  if (!in_weight_lattice(w)) throw RootSysError("not a weight");
  for (int p : pos_) {
    Rat c = dot(w, roots_[p]);
    if (!(c == Rat(0) || c == Rat(1))) return false;
  }
  return true;
}

std::vector<Vec> RootSystem::weight_orbit(int k) const {
  const Vec& w0 = fundamental_weight(k);
  if (!is_microweight(w0)) throw RootSysError("NotMicroweight");
  std::vector<Vec> orbit{w0};
  for (size_t i = 0; i < orbit.size(); ++i)
    for (int s = 1; s <= rank_; ++s) {
      Vec im = reflect(simple(s), orbit[i]);
      bool seen = false;
      for (auto& o : orbit)
        if (o == im) {
          seen = true;
          break;
        }
      if (!seen) orbit.push_back(im);
    }
  // highest weight first; sort by height of w0 - lambda, ties lexicographic
  auto depth = [&](const Vec& v) {
    Rat h(0);
    Vec diff = w0 - v;
    for (int i = 0; i < rank_; ++i) h = h + dot(fw_[i], diff);
    return h;
  };
  std::stable_sort(orbit.begin(), orbit.end(), [&](const Vec& a, const Vec& b) {
    Rat da = depth(a), db = depth(b);
    if (!(da == db)) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rat& x, const Rat& y) { return x < y; });
  });
  return orbit;
}

bool RootSystem::weight_gt(const Vec& a, const Vec& b) const {
  Vec diff = a - b;
  bool nonzero = false;
  Vec rec(dim_, Rat(0));
  for (int i = 0; i < rank_; ++i) {
    Rat c = dot(fw_[i], diff);
    if (!c.is_int() || c.n < 0) return false;
    if (c.n > 0) nonzero = true;
    rec = rec + scale(c, roots_[simple_[i]]);
  }
  return nonzero && rec == diff;  // diff must lie in the root-lattice span
}

ExtendedDiagramMarks RootSystem::extended_marks() const {
  if (!(type_ == 'D' || (type_ == 'E' && (rank_ == 6 || rank_ == 7))))
    throw RootSysError("UnsupportedType: extended marks given for D, E6, E7 only");
  ExtendedDiagramMarks mk;
  int joined = 0;
  for (int i = 1; i <= rank_; ++i)
    if (pairing_rr(simple(i), highest_root()) != 0) {
      mk.j = i;
      ++joined;
    }
  if (joined != 1) throw RootSysError("extended diagram: node 0 not joined to a unique node");
  mk.k = type_ == 'D' ? 1 : (rank_ == 6 ? 1 : 7);
  if (coeff(mk.k, highest_root()) != 1) throw RootSysError("marked node must have m_k(alpha_max) = 1");
  if (!is_microweight(fundamental_weight(mk.k))) throw RootSysError("marked weight must be a microweight");
  return mk;
}

std::vector<int> RootSystem::unjoined_with_affine_node() const {
  auto mk = extended_marks();
  std::vector<int> out;
  for (int i = 1; i <= rank_; ++i)
    if (i != mk.j) out.push_back(i);
  return out;
}

const std::vector<std::vector<int>>& RootSystem::a3_subsystems() const {
  static std::mutex mu;
  std::lock_guard<std::mutex> g(mu);
  if (a3_built_) return a3_;
  if (rank_ < 3) throw RootSysError("a3_subsystems needs rank >= 3");
  std::set<std::vector<int>> found;
  size_t n = roots_.size();
  for (size_t b = 0; b < n; ++b)
    for (size_t a = 0; a < n; ++a) {
      if (a == b || pair_rr_[a][b] != -1) continue;
      for (size_t c = a + 1; c < n; ++c) {
        if (c == b || pair_rr_[b][c] != -1 || pair_rr_[a][c] != 0) continue;
        // chain a - b - c with the A3 Cartan matrix; take the integral span
        std::vector<int> sub;
        for (size_t r = 0; r < n; ++r) {
          std::vector<std::vector<Rat>> G = {
              {Rat(2), Rat(-1), Rat(0)}, {Rat(-1), Rat(2), Rat(-1)}, {Rat(0), Rat(-1), Rat(2)}};
          std::vector<Rat> rhs = {dot(roots_[r], roots_[a]), dot(roots_[r], roots_[b]), dot(roots_[r], roots_[c])};
          auto xyz = solve(G, rhs);
          if (!(xyz[0].is_int() && xyz[1].is_int() && xyz[2].is_int())) continue;
          Vec cand = scale(xyz[0], roots_[a]) + scale(xyz[1], roots_[b]) + scale(xyz[2], roots_[c]);
          if (cand == roots_[r]) sub.push_back((int)r);
        }
        if (sub.size() == 12) {
          std::sort(sub.begin(), sub.end());
          found.insert(sub);
        }
      }
    }
  a3_.assign(found.begin(), found.end());
  a3_built_ = true;
  return a3_;
}

bool prenilpotent(const AffineRoot& a, const AffineRoot& b, const RootSystem& rs) {
  return rs.negate(a.root).idx != b.root.idx;
}

}  // namespace stv
