#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ringlab/computable.hpp"
#include "ringlab/funring.hpp"

using namespace ringlab;

namespace {

// tent with peak 1 at m, support [a,b]
PiecewisePolynomial tent(const Rat& a, const Rat& m, const Rat& b) {
  Rat r1 = 1 / (m - a), r2 = 1 / (b - m);
  return PiecewisePolynomial::from_pieces(
      {a, m, b}, {Poly({-a * r1, r1}), Poly({b * r2, -r2})});
}

// x(1-x) on [0,1]
PiecewisePolynomial parabola01() {
  return PiecewisePolynomial::from_pieces({Rat(0), Rat(1)},
                                          {Poly({Rat(0), Rat(1), Rat(-1)})});
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(rat_parse("3/4") == Rat(3, 4));
  CHECK(rat_parse("-2") == Rat(-2));
  CHECK(rat_str(rat_parse("6/4")) == "3/2");
  CHECK_THROWS_AS(rat_parse("x"), BadShape);
  CHECK_THROWS_AS(rat_parse("1/0"), BadShape);
}

TEST_CASE("polynomial arithmetic") {
  Poly p({Rat(1), Rat(2)});           // 1 + 2x
  Poly q({Rat(0), Rat(0), Rat(1)});   // x^2
  CHECK((p * q).coeffs() == std::vector<Rat>{Rat(0), Rat(0), Rat(1), Rat(2)});
  CHECK((p - p).is_zero());
  CHECK(p.eval(Rat(1, 2)) == Rat(2));
  CHECK(Poly({Rat(1), Rat(0)}).degree() == 0);  // trailing zero trimmed
}

TEST_CASE("construction validates continuity and compact support") {
  CHECK_NOTHROW(tent(Rat(0), Rat(1), Rat(2)));
  // constant 1 piece: nonzero at the support ends
  CHECK_THROWS_AS(
      PiecewisePolynomial::from_pieces({Rat(0), Rat(1)}, {Poly::constant(Rat(1))}),
      DiscontinuousInput);
  // 0/1 step: jump at the internal breakpoint
  CHECK_THROWS_AS(PiecewisePolynomial::from_pieces(
                      {Rat(-1), Rat(0), Rat(1), Rat(2)},
                      {Poly({Rat(1), Rat(1)}), Poly::constant(Rat(0)),
                       Poly({Rat(2), Rat(-1)})}),
                  DiscontinuousInput);
  CHECK_THROWS_AS(
      PiecewisePolynomial::from_pieces({Rat(1), Rat(0)}, {Poly()}), BadShape);
}

TEST_CASE("canonicalization merges and trims") {
  // same linear polynomial split at 1 collapses to one piece
  Poly up({Rat(0), Rat(1)});    // x on [0,?]
  Poly down({Rat(4), Rat(-1)}); // 4 - x
  PiecewisePolynomial split = PiecewisePolynomial::from_pieces(
      {Rat(0), Rat(1), Rat(2), Rat(4)}, {up, up, down});
  PiecewisePolynomial direct =
      PiecewisePolynomial::from_pieces({Rat(0), Rat(2), Rat(4)}, {up, down});
  CHECK(split == direct);
  CHECK(split.pieces().size() == 2);

  // zero pieces at the ends are trimmed
  PiecewisePolynomial padded = PiecewisePolynomial::from_pieces(
      {Rat(-3), Rat(0), Rat(2), Rat(4), Rat(9)}, {Poly(), up, down, Poly()});
  CHECK(padded == direct);

  // all-zero collapses to the zero function
  PiecewisePolynomial z =
      PiecewisePolynomial::from_pieces({Rat(0), Rat(1)}, {Poly()});
  CHECK(z.is_zero());
  CHECK(z == PiecewisePolynomial());
}

TEST_CASE("pointwise operations") {
  PiecewisePolynomial f = tent(Rat(0), Rat(1), Rat(2));
  CHECK((f * PiecewisePolynomial()).is_zero());
  CHECK((f + (-f)).is_zero());

  PiecewisePolynomial p = parabola01();
  PiecewisePolynomial sq = p * p;
  REQUIRE(sq.pieces().size() == 1);
  // x^2(1-x)^2 = x^2 - 2x^3 + x^4
  CHECK(sq.pieces()[0] ==
        Poly({Rat(0), Rat(0), Rat(1), Rat(-2), Rat(1)}));

  // disjoint supports: sum keeps both humps with a zero gap
  PiecewisePolynomial g = tent(Rat(3), Rat(7, 2), Rat(4));
  PiecewisePolynomial s = f + g;
  CHECK(s.support_min() == Rat(0));
  CHECK(s.support_max() == Rat(4));
  CHECK(s.eval(Rat(5, 2)) == 0);
  CHECK(s.eval(Rat(1)) == 1);
  CHECK((f * g).is_zero());
}

TEST_CASE("evaluation agrees with piecewise definition") {
  PiecewisePolynomial f = tent(Rat(0), Rat(1), Rat(2));
  CHECK(f.eval(Rat(-1)) == 0);
  CHECK(f.eval(Rat(1, 2)) == Rat(1, 2));
  CHECK(f.eval(Rat(3, 2)) == Rat(1, 2));
  CHECK(f.eval(Rat(3)) == 0);
}

TEST_CASE("idempotency detection") {
  CHECK(pp_is_idempotent(PiecewisePolynomial()));
  CHECK_FALSE(pp_is_idempotent(tent(Rat(0), Rat(1), Rat(2))));
  CHECK_FALSE(pp_is_idempotent(parabola01()));
  CHECK_FALSE(pp_is_idempotent(bump(Rat(0), Rat(1))));
}

TEST_CASE("bump fixes functions supported inside its plateau") {
  PiecewisePolynomial b = bump(Rat(0), Rat(1));
  PiecewisePolynomial p = parabola01();
  CHECK(b * p == p);
  CHECK(p * b == p);
  CHECK(b * b != b);

  PiecewisePolynomial wide = bump(Rat(-5), Rat(5));
  CHECK(wide * b == b);
  CHECK(b * wide == b);

  CHECK_THROWS_AS(bump(Rat(1), Rat(1)), BadInterval);
  CHECK_THROWS_AS(bump(Rat(2), Rat(1)), BadInterval);
}

TEST_CASE("s_unit_for") {
  PiecewisePolynomial p = parabola01();
  PiecewisePolynomial g = tent(Rat(3), Rat(7, 2), Rat(4));
  std::vector<PiecewisePolynomial> set{p, g};
  PiecewisePolynomial e = s_unit_for(set);
  CHECK(e == bump(Rat(0), Rat(4)));
  CHECK(e * p == p);
  CHECK(e * g == g);

  std::vector<PiecewisePolynomial> zero_only{PiecewisePolynomial()};
  PiecewisePolynomial ez = s_unit_for(zero_only);
  CHECK(ez == bump(Rat(0), Rat(1)));
  CHECK((ez * PiecewisePolynomial()).is_zero());

  std::vector<PiecewisePolynomial> just_bump{bump(Rat(0), Rat(1))};
  CHECK(s_unit_for(just_bump) == bump(Rat(-1), Rat(2)));

  CHECK_THROWS_AS(s_unit_for(std::span<const PiecewisePolynomial>()), EmptyInput);
}

TEST_CASE("commutativity and associativity on random triples") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    PiecewisePolynomial f = random_compact_function(rng, Rat(-4), Rat(4));
    PiecewisePolynomial g = random_compact_function(rng, Rat(-4), Rat(4));
    PiecewisePolynomial h = random_compact_function(rng, Rat(-4), Rat(4));
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("randomized search finds no nonzero idempotent") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 2000; ++i) {
    PiecewisePolynomial f = random_compact_function(rng, Rat(-5), Rat(5));
    if (pp_is_idempotent(f)) CHECK(f.is_zero());
  }
}

TEST_CASE("ops never produce non-canonical output") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    PiecewisePolynomial f = random_compact_function(rng, Rat(-3), Rat(3));
    PiecewisePolynomial g = random_compact_function(rng, Rat(-3), Rat(3));
    for (const PiecewisePolynomial& h : {f + g, f * g}) {
      if (h.is_zero()) continue;
      // re-canonicalizing is the identity
      PiecewisePolynomial again = PiecewisePolynomial::from_pieces(
          h.breakpoints(), h.pieces());
      CHECK(again == h);
      // no mergeable neighbours, no zero end pieces
      CHECK_FALSE(h.pieces().front().is_zero());
      CHECK_FALSE(h.pieces().back().is_zero());
      for (std::size_t t = 0; t + 1 < h.pieces().size(); ++t)
        CHECK(h.pieces()[t] != h.pieces()[t + 1]);
    }
  }
}

TEST_CASE("text round trip") {
  PiecewisePolynomial b = bump(Rat(-1, 2), Rat(3, 2));
  PiecewisePolynomial parsed = PiecewisePolynomial::parse(b.str());
  CHECK(parsed == b);
  CHECK(PiecewisePolynomial::parse("0").is_zero());
  CHECK(PiecewisePolynomial::parse("piece [0,1] 0 1 -1") == parabola01());
}
