// Root-system combinatorics: enumeration counts against the classical
// formulas, pairings, special subsets, microweights, weight orbits, extended
// diagram markings, and A3 subsystem enumeration.
#include "doctest.h"
#include "stv/rootsys.hpp"

using namespace stv;

namespace {
// independent oracle: |A_l| = l(l+1), |D_l| = 2l(l-1), |E6| = 72, |E7| = 126,
// |E8| = 240
size_t expected_count(char t, int r) {
  if (t == 'A') return (size_t)r * (r + 1);
  if (t == 'D') return (size_t)2 * r * (r - 1);
  return r == 6 ? 72 : (r == 7 ? 126 : 240);
}
}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(RootSystem::get('A', 2).size() == 6);
  CHECK(RootSystem::get('D', 4).size() == 24);
  CHECK(RootSystem::get('E', 7).size() == 126);
  for (auto [t, r] : std::vector<std::pair<char, int>>{
           {'A', 1}, {'A', 3}, {'A', 4}, {'D', 4}, {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8}})
    CHECK(RootSystem::get(t, r).size() == expected_count(t, r));
}

TEST_CASE("pairings") {
  const auto& a2 = RootSystem::get('A', 2);
  Root a1 = a2.simple(1), s2 = a2.simple(2);
  CHECK(a2.pairing_rr(a1, a1) == 2);
  CHECK(a2.pairing_rr(a1, s2) == -1);
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'D', 4}, {'E', 6}}) {
    const auto& rs = RootSystem::get(t, r);
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j)
        CHECK(rs.pairing(rs.fundamental_weight(i), rs.simple(j)) == (i == j ? 1 : 0));
  }
}

TEST_CASE("reflection involution and W-invariance") {
  const auto& rs = RootSystem::get('D', 4);
  for (size_t a = 0; a < rs.size(); ++a) {
    Root ra{(int)a};
    CHECK(rs.reflect(ra, rs.root(ra)) == scale(Rat(-1), rs.root(ra)));
    for (size_t b = 0; b < rs.size(); ++b) {
      Root rb{(int)b};
      CHECK(rs.reflect(ra, rs.reflect(ra, rs.root(rb))) == rs.root(rb));
      for (size_t g = 0; g < rs.size(); g += 5) {
        Root rg{(int)g};
        CHECK(rs.pairing_rr(rs.reflect_root(rg, ra), rs.reflect_root(rg, rb)) == rs.pairing_rr(ra, rb));
      }
    }
  }
}

TEST_CASE("special subsets partition and negation bijection") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 4}, {'D', 4}, {'E', 6}, {'E', 7}}) {
    const auto& rs = RootSystem::get(t, r);
    for (int k = 1; k <= r; ++k) {
      auto s = rs.special_subsets(k);
      CHECK(s.sigma_plus.size() + s.delta.size() + s.sigma_minus.size() == rs.size());
      CHECK(s.sigma_plus.size() == s.sigma_minus.size());
      for (auto& a : s.sigma_plus)
        for (auto& b : s.sigma_plus) CHECK(rs.negate(a).idx != b.idx);
    }
  }
  // A2, k=1: Sigma_1^+ = {a1, a1+a2}
  const auto& a2 = RootSystem::get('A', 2);
  auto s = a2.special_subsets(1);
  REQUIRE(s.sigma_plus.size() == 2);
  bool saw_a1 = false, saw_sum = false;
  for (auto& x : s.sigma_plus) {
    if (x.idx == a2.simple(1).idx) saw_a1 = true;
    if (a2.root(x) == a2.root(a2.simple(1)) + a2.root(a2.simple(2))) saw_sum = true;
  }
  CHECK(saw_a1);
  CHECK(saw_sum);
}

TEST_CASE("E7 Sigma_7^+ has m_7 = 1") {
  const auto& e7 = RootSystem::get('E', 7);
  auto s = e7.special_subsets(7);
  for (auto& a : s.sigma_plus) CHECK(e7.coeff(7, a) == 1);
  // abelian unipotent radical: pairwise sums never roots
  for (auto& a : s.sigma_plus)
    for (auto& b : s.sigma_plus) CHECK(e7.sum_root(a, b).idx == -1);
}

TEST_CASE("microweights") {
  const auto& e7 = RootSystem::get('E', 7);
  CHECK(e7.is_microweight(e7.fundamental_weight(7)));
  CHECK(e7.is_microweight(Vec(e7.dim(), Rat(0))));
  const auto& e8 = RootSystem::get('E', 8);
  for (int i = 1; i <= 8; ++i) CHECK_FALSE(e8.is_microweight(e8.fundamental_weight(i)));
}

TEST_CASE("weight orbits") {
  CHECK(RootSystem::get('A', 3).weight_orbit(1).size() == 4);
  CHECK(RootSystem::get('D', 4).weight_orbit(1).size() == 8);
  CHECK(RootSystem::get('D', 4).weight_orbit(4).size() == 8);
  CHECK(RootSystem::get('E', 6).weight_orbit(1).size() == 27);
  CHECK(RootSystem::get('E', 7).weight_orbit(7).size() == 56);
  // A3 pi_1 orbit is totally ordered
  const auto& a3 = RootSystem::get('A', 3);
  auto orb = a3.weight_orbit(1);
  for (size_t i = 0; i + 1 < orb.size(); ++i) CHECK(a3.weight_gt(orb[i], orb[i + 1]));
  // highest weight first
  CHECK(orb[0] == a3.fundamental_weight(1));
}

TEST_CASE("alpha_max is the unique height maximum") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 4}, {'D', 5}, {'E', 7}}) {
    const auto& rs = RootSystem::get(t, r);
    Root am = rs.highest_root();
    for (int p : rs.positive())
      if (p != am.idx) CHECK(rs.height({p}) < rs.height(am));
  }
}

TEST_CASE("extended diagram marks per Figure data") {
  auto d = RootSystem::get('D', 5).extended_marks();
  CHECK(d.j == 2);
  CHECK(d.k == 1);
  auto e6 = RootSystem::get('E', 6).extended_marks();
  CHECK(e6.j == 2);
  CHECK(e6.k == 1);
  auto e7 = RootSystem::get('E', 7).extended_marks();
  CHECK(e7.j == 1);
  CHECK(e7.k == 7);
  CHECK_THROWS(RootSystem::get('A', 4).extended_marks());
  CHECK_THROWS(RootSystem::get('E', 8).extended_marks());
  CHECK(RootSystem::get('E', 7).unjoined_with_affine_node().size() == 6);
}

TEST_CASE("prenilpotency") {
  const auto& a2 = RootSystem::get('A', 2);
  Root a = a2.simple(1), b = a2.simple(2);
  CHECK(prenilpotent({a, 0}, {a, 3}, a2));
  CHECK_FALSE(prenilpotent({a, 0}, {a2.negate(a), 5}, a2));
  CHECK(prenilpotent({a, 2}, {b, -1}, a2));
}

TEST_CASE("A3 subsystems") {
  const auto& a3 = RootSystem::get('A', 3);
  CHECK(a3.a3_subsystems().size() == 1);
  CHECK(a3.a3_subsystems()[0].size() == 12);
  const auto& d4 = RootSystem::get('D', 4);
  for (auto& sub : d4.a3_subsystems()) {
    CHECK(sub.size() == 12);
    // closed: sums of members stay inside
    for (int x : sub)
      for (int y : sub) {
        Root s = d4.sum_root({x}, {y});
        if (s.idx >= 0) CHECK(std::find(sub.begin(), sub.end(), s.idx) != sub.end());
      }
  }
  // independent count: an A3 in D4 is the set of roots orthogonal to a line;
  // 4 coordinate hyperplanes give the D3's and the 8 all-nonzero sign vectors
  // (mod +-) give the SL4-type copies
  CHECK(d4.a3_subsystems().size() == 12);
}

TEST_CASE("microweight orbit sizes match the classical dimensions") {
  CHECK(RootSystem::get('A', 4).weight_orbit(1).size() == 5);
  CHECK(RootSystem::get('D', 5).weight_orbit(1).size() == 10);
  CHECK(RootSystem::get('E', 6).weight_orbit(1).size() == 27);
  CHECK(RootSystem::get('E', 7).weight_orbit(7).size() == 56);
}
