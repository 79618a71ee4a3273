// Tests for the exact ring tower: canonical forms, homomorphisms, ideals,
// unit groups, and the CLI grammar round trip.
#include "doctest.h"
#include "stv/ring.hpp"

using namespace stv;

TEST_CASE("residue reduction and canonical forms") {
  auto z5 = Ring::Zmod(5);
  CHECK(z5->integer(7) == z5->integer(2));
  CHECK(z5->integer(7).str() == "2");

  auto zx = Ring::poly(Ring::Z(), "X");
  // 0*X^2 + 3X normalizes to the single-term list 3X
  RingElem e = zx->make_poly({{2, Ring::Z()->integer(0)}, {1, Ring::Z()->integer(3)}});
  CHECK(e.coeffs().size() == 1);
  CHECK(e.str() == "3*X");
  CHECK(normalize(normalize(e)) == normalize(e));
}

TEST_CASE("localization equality via cross-multiplication") {
  auto z = Ring::Z();
  auto loc = Ring::localization(z, z->integer(5));
  RingElem a = loc->make_loc(z->integer(5 * 7), 1);  // (35)/5
  RingElem b = loc->make_loc(z->integer(7), 0);
  CHECK(a == b);
  auto zx = Ring::poly(z, "X");
  auto locx = Ring::localization(z, z->integer(5));
  RingElem five_x_over_5 = locx->make_loc(z->integer(10), 1);
  CHECK(five_x_over_5 == locx->make_loc(z->integer(2), 0));
}

TEST_CASE("rationals reduce") {
  auto q = Ring::Q();
  CHECK(q->rational(6, -4) == q->rational(-3, 2));
  CHECK(q->rational(0, 7) == q->zero());
  CHECK(q->rational(2, 3).inverse() == q->rational(3, 2));
}

TEST_CASE("hom: evaluation, projection, localization") {
  auto z5 = Ring::Zmod(5);
  auto z5x = Ring::poly(z5, "X");
  RingElem p = parse_elem(z5x, "3*X+2");
  auto ev0 = RingHom::evaluation(z5x, z5->integer(0));
  CHECK(ev0.apply(p) == z5->integer(2));
  auto ev2 = RingHom::evaluation(z5x, z5->integer(2));
  CHECK(ev2.apply(p) == z5->integer(3));  // 6+2 = 8 = 3 mod 5

  // p2((a; a(1+m))) in D_{R, MR}
  auto z25 = Ring::Zmod(25);
  auto r = Ring::poly(z25, "X");
  IdealSpec mr{{r->monomial(0, z25->integer(5))}};
  auto d = Ring::dring(r, mr);
  RingElem a = r->integer(3), m = r->monomial(0, z25->integer(5));
  RingElem pair = d->make_pair(a, a * (r->one() + m));
  CHECK(RingHom::projection(d, 2).apply(pair) == a * (r->one() + m));
  CHECK(RingHom::projection(d, 1).apply(pair) == a);

  // lambda_5(X+1) lands in the localization with exponent 0
  auto zx = Ring::poly(Ring::Z(), "X");
  auto lam = RingHom::localization_map(zx, zx->integer(5));
  RingElem img = lam.apply(parse_elem(zx, "X+1"));
  CHECK(img.loc_pow() == 0);
  CHECK(img.loc_num() == parse_elem(zx, "X+1"));
}

TEST_CASE("hom functoriality on a tower") {
  auto z5 = Ring::Zmod(5);
  auto z5x = Ring::poly(z5, "X");
  auto z5xy = Ring::poly(z5x, "Y");
  auto f = RingHom::evaluation(z5xy, z5x->X());          // Y -> X
  auto g = RingHom::evaluation(z5x, z5->integer(2));     // X -> 2
  auto gf = RingHom::compose(g, f);
  for (int i = 0; i < 40; ++i) {
    RingElem e = z5xy->make_poly({{0, z5x->X(i % 3)},
                                  {1, z5x->integer(i)},
                                  {2, z5x->X() * z5x->integer(i + 1)}});
    CHECK(gf.apply(e) == g.apply(f.apply(e)));
  }
}

TEST_CASE("double ring laws") {
  auto z25 = Ring::Zmod(25);
  IdealSpec five{{z25->integer(5)}};
  auto d = Ring::dring(z25, five);
  auto diag = RingHom::diagonal(d);
  auto p1 = RingHom::projection(d, 1);
  auto p2 = RingHom::projection(d, 2);
  for (i64 v = 0; v < 25; ++v) {
    RingElem e = z25->integer(v);
    CHECK(p1.apply(diag.apply(e)) == e);
    CHECK(p2.apply(diag.apply(e)) == e);
  }
  CHECK_THROWS_AS(d->make_pair(z25->integer(1), z25->integer(2)), NotInIdeal);
}

TEST_CASE("ideal membership catalog") {
  auto z5 = Ring::Zmod(5);
  auto z5x = Ring::poly(z5, "X");
  IdealSpec ix{{z5x->X()}};
  CHECK(ideal_member(ix, parse_elem(z5x, "3*X^2")));
  CHECK_FALSE(ideal_member(ix, parse_elem(z5x, "3*X^2+1")));

  IdealSpec i5{{Ring::Z()->integer(5)}};
  CHECK_FALSE(ideal_member(i5, Ring::Z()->integer(7)));
  CHECK(ideal_member(i5, Ring::Z()->integer(-10)));

  auto z25 = Ring::Zmod(25);
  auto r = Ring::poly(z25, "X");
  IdealSpec mr{{r->monomial(0, z25->integer(5))}};
  CHECK(ideal_member(mr, parse_elem(r, "10*X+5")));
  CHECK_FALSE(ideal_member(mr, parse_elem(r, "10*X+1")));

  // product ideal 5*X*R: valuation >= 1 and coefficients divisible by 5
  IdealSpec prod{{r->monomial(1, z25->integer(5))}};
  CHECK(ideal_member(prod, parse_elem(r, "10*X^2+5*X")));
  CHECK_FALSE(ideal_member(prod, parse_elem(r, "10*X+5")));
}

TEST_CASE("units") {
  CHECK(units(Ring::Zmod(5)).elements.size() == 4);
  auto u4 = units(Ring::Zmod(4));
  REQUIRE(u4.elements.size() == 2);
  CHECK(u4.elements[0].ival() == 1);
  CHECK(u4.elements[1].ival() == 3);
  auto lau = Ring::laurent(Ring::Zmod(5), "X");
  auto ug = units(lau);
  CHECK_FALSE(ug.enumerable);
  for (u64 i = 0; i < 30; ++i) CHECK(ug.sample(i).is_unit());
  CHECK_THROWS_AS(units(Ring::Z()), NotEnumerable);
}

TEST_CASE("laurent inverses and powers") {
  auto lau = Ring::laurent(Ring::Zmod(5), "X");
  RingElem x = lau->X();
  CHECK(x.inverse() == lau->X(-1));
  CHECK((x * x.inverse()).is_one());
  RingElem c = lau->monomial(3, Ring::Zmod(5)->integer(2));
  CHECK((c * c.inverse()).is_one());
  CHECK_FALSE(parse_elem(lau, "X+1").is_unit());
  // nilpotent-correction inverse over Zmod 25
  auto p25 = Ring::poly(Ring::Zmod(25), "X");
  RingElem f = parse_elem(p25, "5*X+1");
  CHECK((f * f.inverse()).is_one());
}

TEST_CASE("ring descriptor grammar round trip") {
  for (const char* s : {"Z", "Q", "Zmod:5", "Zmod:25[X]", "Zmod:5[X,X^-1]", "Z@loc:5",
                        "D(Zmod:25[X],(5))", "Zmod:35[X][Y][Z]"}) {
    auto r = parse_ring(s);
    CHECK(r->str() == s);
    CHECK(parse_ring(r->str())->same(*r));
  }
  auto r = parse_ring("Zmod:5[X]");
  CHECK(parse_elem(r, "2+3*X+X^2").str() == "2+3*X+X^2");
  CHECK(parse_elem(r, "X*X*2+1+4*X^2").str() == "1+X^2");
}

TEST_CASE("localization soundness randomized against Q") {
  auto z = Ring::Z();
  auto loc = Ring::localization(z, z->integer(3));
  auto q = Ring::Q();
  u64 st = 12345;
  auto rnd = [&st]() {
    st = st * 6364136223846793005ULL + 1442695040888963407ULL;
    return (i64)((st >> 33) % 41) - 20;
  };
  for (int i = 0; i < 300; ++i) {
    i64 a = rnd(), b = rnd();
    i64 k = (i64)(((u64)rnd()) % 3), l = (i64)(((u64)rnd()) % 3);
    bool eq_loc = loc->make_loc(z->integer(a), k) == loc->make_loc(z->integer(b), l);
    bool eq_q = q->rational(a, pow64(3, k)) == q->rational(b, pow64(3, l));
    CHECK(eq_loc == eq_q);
  }
}
