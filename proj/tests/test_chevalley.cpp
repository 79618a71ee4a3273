// Structure constants, representation matrices, torus conjugation, Matsumoto
// constants, and the faithfulness witness on centres.
#include "doctest.h"
#include "stv/chevalley.hpp"
#include "stv/fastmat.hpp"

using namespace stv;

TEST_CASE("structure constants are antisymmetric signs; A2 convention") {
  const auto& a2 = RootSystem::get('A', 2);
  const auto& cb = ChevalleyBasis::get(a2);
  CHECK(cb.N(a2.simple(1), a2.simple(2)) == 1);
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'D', 4}, {'E', 6}}) {
    const auto& rs = RootSystem::get(t, r);
    const auto& b = ChevalleyBasis::get(rs);
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < rs.size(); ++j) {
        if (rs.sum_root({(int)i}, {(int)j}).idx < 0) continue;
        int n = b.N({(int)i}, {(int)j});
        CHECK((n == 1 || n == -1));
        CHECK(n == -b.N({(int)j}, {(int)i}));
      }
  }
}

TEST_CASE("representation dimensions") {
  CHECK(MicroweightRep::get(RootSystem::get('A', 3), 1).dim() == 4);
  CHECK(MicroweightRep::get(RootSystem::get('D', 4), 1).dim() == 16);  // 8 + 8
  CHECK(MicroweightRep::get(RootSystem::get('E', 6), 1).dim() == 27);
  CHECK(MicroweightRep::get(RootSystem::get('E', 7), 7).dim() == 56);
  CHECK_THROWS(MicroweightRep::get(RootSystem::get('E', 8), 1));
}

TEST_CASE("A-type standard matrices are matrix units") {
  const auto& rep = MicroweightRep::get(RootSystem::get('A', 3), 1);
  const auto& rs = rep.system();
  auto z5 = Ring::Zmod(5);
  for (int i = 1; i <= 3; ++i) {
    GroupMatrix g = rep.rho_x(rs.simple(i), z5->integer(2));
    // identity + 2 at (e_i-weight, e_{i+1}-weight): weight list is ordered
    // from the highest e_1, so that is entry (i-1, i)
    CHECK(g.at(i - 1, i) == z5->integer(2));
    int nonzero = 0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (!g.at(r, c).is_zero()) ++nonzero;
    CHECK(nonzero == 5);
  }
}

TEST_CASE("R1/R2/R3 on matrices, exhaustive over Z/5 for A2 and D4") {
  auto z5 = Ring::Zmod(5);
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'D', 4}}) {
    const auto& rs = RootSystem::get(t, r);
    const auto& rep = MicroweightRep::standard(rs);
    const auto& cb = ChevalleyBasis::get(rs);
    for (size_t a = 0; a < rs.size(); ++a) {
      for (i64 x = 0; x < 5; ++x)
        for (i64 y = 0; y < 5; ++y) {
          CHECK(rep.rho_x({(int)a}, z5->integer(x)) * rep.rho_x({(int)a}, z5->integer(y)) ==
                rep.rho_x({(int)a}, z5->integer(x + y)));
        }
      for (size_t b = 0; b < rs.size(); ++b) {
        if (a == b || rs.negate({(int)a}).idx == (int)b) continue;
        Root s = rs.sum_root({(int)a}, {(int)b});
        for (i64 x = 1; x < 5; ++x)
          for (i64 y = 1; y < 5; ++y) {
            GroupMatrix comm = rep.rho_x({(int)a}, z5->integer(x)) * rep.rho_x({(int)b}, z5->integer(y)) *
                               rep.rho_x({(int)a}, z5->integer(-x)) * rep.rho_x({(int)b}, z5->integer(-y));
            if (s.idx >= 0)
              CHECK(comm == rep.rho_x(s, z5->integer(cb.N({(int)a}, {(int)b}) * x * y)));
            else
              CHECK(comm.is_identity());
          }
      }
    }
  }
}

TEST_CASE("rho(x_a(0)) = 1 and inverses") {
  const auto& rep = MicroweightRep::get(RootSystem::get('E', 6), 1);
  auto z5 = Ring::Zmod(5);
  Root a{3};
  CHECK(rep.rho_x(a, z5->zero()).is_identity());
  CHECK((rep.rho_x(a, z5->integer(2)) * rep.rho_x(a, z5->integer(-2))).is_identity());
}

TEST_CASE("torus conjugation realizes chi on generators") {
  const auto& rs = RootSystem::get('D', 4);
  const auto& rep = MicroweightRep::get(rs, 1);
  auto z5 = Ring::Zmod(5);
  for (int i = 1; i <= 4; ++i) {
    Vec w = rs.fundamental_weight(i);
    for (i64 u = 1; u < 5; ++u) {
      GroupMatrix H = rep.weight_torus(w, z5->integer(u));
      CHECK(rep.weight_torus(Vec(rs.dim(), Rat(0)), z5->integer(u)).is_identity());
      GroupMatrix Hi = rep.weight_torus(w, z5->integer(u).inverse());
      CHECK((H * Hi).is_identity());
      for (size_t a = 0; a < rs.size(); a += 3) {
        Root ra{(int)a};
        RingElem c = z5->integer(3);
        GroupMatrix lhs = H * rep.rho_x(ra, c) * Hi;
        RingElem scaled = z5->integer(u).pow(rs.pairing(w, ra)) * c;
        CHECK(lhs == rep.rho_x(ra, scaled));
      }
    }
  }
}

TEST_CASE("h_alpha(u) is diagonal with weight-pairing exponents") {
  const auto& rs = RootSystem::get('A', 3);
  const auto& rep = MicroweightRep::get(rs, 1);
  auto z5 = Ring::Zmod(5);
  for (size_t a = 0; a < rs.size(); ++a)
    for (i64 u = 1; u < 5; ++u) {
      GroupMatrix h = rep.rho_h({(int)a}, z5->integer(u));
      for (int w = 0; w < rep.dim(); ++w)
        for (int v = 0; v < rep.dim(); ++v) {
          if (w == v)
            CHECK(h.at(w, v) == z5->integer(u).pow(rs.pairing(rep.weights()[w], {(int)a})));
          else
            CHECK(h.at(w, v).is_zero());
        }
      CHECK(rep.rho_h({(int)a}, z5->one()).is_identity());
    }
}

TEST_CASE("Matsumoto conjugation with eta from the basis") {
  auto z5 = Ring::Zmod(5);
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'D', 4}}) {
    const auto& rs = RootSystem::get(t, r);
    const auto& rep = MicroweightRep::standard(rs);
    const auto& cb = ChevalleyBasis::get(rs);
    for (size_t a = 0; a < rs.size(); ++a)
      for (size_t b = 0; b < rs.size(); ++b) {
        Root ra{(int)a}, rb{(int)b};
        Root sb = rs.reflect_root(ra, rb);
        for (i64 u = 1; u < 5; ++u)
          for (i64 x = 0; x < 5; ++x) {
            GroupMatrix lhs = rep.rho_w(ra, z5->integer(u)) * rep.rho_x(rb, z5->integer(x)) *
                              rep.rho_w(ra, z5->integer(-u));
            RingElem coef =
                z5->integer(cb.eta(ra, rb)) * z5->integer(u).pow(-rs.pairing_rr(rb, ra)) * z5->integer(x);
            CHECK(lhs == rep.rho_x(sb, coef));
          }
      }
  }
}

TEST_CASE("Weyl action moves weight lines monomially") {
  const auto& rs = RootSystem::get('D', 4);
  const auto& rep = MicroweightRep::get(rs, 1);
  auto z5 = Ring::Zmod(5);
  for (size_t a = 0; a < rs.size(); ++a) {
    GroupMatrix w = rep.rho_w({(int)a}, z5->integer(2));
    for (int c = 0; c < rep.dim(); ++c) {
      int nonzero = 0, target = -1;
      for (int r = 0; r < rep.dim(); ++r)
        if (!w.at(r, c).is_zero()) {
          ++nonzero;
          target = r;
        }
      CHECK(nonzero == 1);
      CHECK(rep.weights()[target] == rs.reflect({(int)a}, rep.weights()[c]));
    }
  }
}

namespace {
// centre elements: torus tuples (u_i) with trivial conjugation character
int count_faithful_centre(const RootSystem& rs, const MicroweightRep& rep, i64 p) {
  auto zp = Ring::Zmod(p);
  int l = rs.rank();
  std::vector<i64> tup(l, 1);
  int nontrivial = 0;
  while (true) {
    // character on each root must be 1
    bool central = true;
    for (size_t r = 0; r < rs.size() && central; ++r) {
      i64 chi = 1;
      for (int i = 0; i < l; ++i)
        chi = chi * pow64(tup[i] % p, (i64)((rs.pairing_rr({(int)r}, rs.simple(i + 1)) % (p - 1) + (p - 1)) % (p - 1))) % p;
      if (chi % p != 1) central = false;
    }
    if (central) {
      GroupMatrix z = rep.identity(zp);
      for (int i = 0; i < l; ++i) z = z * rep.rho_h(rs.simple(i + 1), zp->integer(tup[i]));
      if (!z.is_identity()) ++nontrivial;
      else {
        bool allone = true;
        for (i64 v : tup) allone &= v == 1;
        if (!allone) {
          // a nontrivial central torus tuple acting trivially: not faithful
          return -1;
        }
      }
    }
    int i = 0;
    for (; i < l; ++i) {
      if (++tup[i] < p) break;
      tup[i] = 1;
    }
    if (i == l) break;
  }
  return nontrivial;
}
}  // namespace

TEST_CASE("faithfulness witness: centre acts nontrivially") {
  // |Z(G_sc)(F_q)| - 1 nontrivial central elements must act nontrivially
  struct Case {
    char t;
    int r;
    i64 p;
    int expect;  // gcd(|P/Q|, p-1)-ish count of nontrivial central elements
  };
  for (auto c : std::vector<Case>{{'A', 3, 5, 3}, {'A', 4, 5, 0}, {'D', 4, 5, 3}, {'E', 6, 7, 2}, {'E', 7, 5, 1}}) {
    const auto& rs = RootSystem::get(c.t, c.r);
    const auto& rep = MicroweightRep::standard(rs);
    int got = count_faithful_centre(rs, rep, c.p);
    CHECK(got == c.expect);
  }
}

TEST_CASE("fast kernels agree with GroupMatrix") {
  const auto& rs = RootSystem::get('D', 4);
  const auto& rep = MicroweightRep::get(rs, 1);
  auto z5 = Ring::Zmod(5);
  ModMat m = ModMat::identity(rep.dim(), 5);
  GroupMatrix g = rep.identity(z5);
  u64 seed = 7;
  for (int step = 0; step < 25; ++step) {
    seed = seed * 6364136223846793005ULL + 1;
    Root a{(int)((seed >> 33) % rs.size())};
    i64 c = (i64)((seed >> 11) % 5);
    mm_mul_right_x(rep, m, a, (std::uint32_t)c);
    rep.mul_right_x(g, a, z5->integer(c));
  }
  for (int i = 0; i < rep.dim(); ++i)
    for (int j = 0; j < rep.dim(); ++j) CHECK(z5->integer((i64)m.at(i, j)) == g.at(i, j));
}

TEST_CASE("Laurent kernel: w_alpha(X) conjugation shifts degrees") {
  const auto& rs = RootSystem::get('A', 2);
  const auto& rep = MicroweightRep::get(rs, 1);
  Root a0 = rs.negate(rs.highest_root());
  LMat s0 = lm_rho_w(rep, a0, 1, 1, 5);   // w_{alpha_0}(X)
  LMat s0i = lm_rho_w(rep, a0, 4, 1, 5);  // w(X)^{-1} = w(-X)
  CHECK(lm_mul(s0, s0i) == LMat::identity(rep.dim(), 5));
}
