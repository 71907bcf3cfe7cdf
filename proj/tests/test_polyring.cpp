#include "doctest.h"

#include "derham/parse.hpp"
#include "derham/poly.hpp"
#include "test_util.hpp"

using namespace derham;

TEST_CASE("parse_poly canonical forms") {
  Poly f = parse_poly("x*y^2 - x - 1", 2);
  CHECK(f.degree() == 3);
  CHECK(to_string(f) == "x*y^2 - x - 1");

  CHECK(parse_poly("0", 2).is_zero());
  CHECK(parse_poly("0", 2).degree() == kDegNegInf);

  Poly g = parse_poly("(3/2)*x^2 - 1", 1);
  Monomial m2(std::vector<int>{2}), m0(std::vector<int>{0});
  CHECK(g.coeff(m2) == Rational(3, 2));
  CHECK(g.coeff(m0) == Rational(-1));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_poly("x +* y", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("w + 1", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0", 1), ParseError);
  CHECK_THROWS_AS(parse_poly("z", 2), ParseError); // alias beyond nvars
}

TEST_CASE("parse/print roundtrip on random polynomials") {
  std::mt19937 rng(12345);
  for (int k = 0; k < 50; ++k) {
    Poly p = testing::random_poly(rng, 3, 6, 10);
    CHECK(parse_poly(to_string(p), 3) == p);
  }
}

TEST_CASE("divmod_by_power") {
  Poly f = parse_poly("x*y^2 - x - 1", 2);

  SUBCASE("exact divisibility") {
    auto [q, r] = divmod_by_power(f, f, 1);
    CHECK(q == Poly::constant(2, 1));
    CHECK(r.is_zero());
  }
  SUBCASE("X dX f = f + 1") {
    Poly g = parse_poly("x*(y^2 - 1)", 2);
    auto [q, r] = divmod_by_power(g, f, 1);
    CHECK(q == Poly::constant(2, 1));
    CHECK(r == Poly::constant(2, 1));
  }
  SUBCASE("degree too small") {
    Poly g = parse_poly("x + y", 2);
    auto [q, r] = divmod_by_power(g, f, 1);
    CHECK(q.is_zero());
    CHECK(r == g);
  }
}

TEST_CASE("divmod reconstruction and reduced remainder on random inputs") {
  std::mt19937 rng(777);
  Poly f = parse_poly("x*y^2 - x - 1", 2);
  for (int k = 0; k < 40; ++k) {
    Poly g = testing::random_poly(rng, 2, 8, 12);
    int nu = 1 + (k % 3);
    auto [q, r] = divmod_by_power(g, f, nu);
    CHECK(q * f.pow(nu) + r == g);
    Poly fnu = f.pow(nu);
    for (const auto& [m, c] : r.terms())
      CHECK_FALSE(fnu.leading_monomial().divides(m));
  }
}

TEST_CASE("partial derivatives") {
  Poly f = parse_poly("x*y^2 - x - 1", 2);
  CHECK(f.derivative(0) == parse_poly("y^2 - 1", 2));
  CHECK(f.derivative(1) == parse_poly("2*x*y", 2));
  CHECK(Poly::constant(2, 5).derivative(0).is_zero());
  CHECK_THROWS(f.derivative(2));
}

TEST_CASE("derivative is linear and satisfies the product rule") {
  std::mt19937 rng(4242);
  for (int k = 0; k < 30; ++k) {
    Poly a = testing::random_poly(rng, 2, 5, 8);
    Poly b = testing::random_poly(rng, 2, 5, 8);
    for (int i = 0; i < 2; ++i) {
      CHECK((a + b).derivative(i) == a.derivative(i) + b.derivative(i));
      CHECK((a * b).derivative(i) ==
            a.derivative(i) * b + a * b.derivative(i));
    }
  }
}

TEST_CASE("evaluate") {
  Poly f = parse_poly("x*y^2 - x - 1", 2);
  CHECK(f.evaluate({Rational(1), Rational(2)}) == Rational(2));
  std::mt19937 rng(99);
  Poly g = testing::random_poly(rng, 2, 5, 8);
  CHECK(g.evaluate({Rational(0), Rational(0)}) == g.constant_term());
  CHECK(Poly::zero(2).evaluate({Rational(3), Rational(7)}) == Rational(0));
  CHECK_THROWS(f.evaluate({Rational(1)}));
}

TEST_CASE("generous homogenization") {
  SUBCASE("curve") {
    Poly f = parse_poly("x*y^2 - x - 1", 2);
    Poly h = homogenize_generous(f);
    CHECK(h == parse_poly("x1*x2*x3^2 - x1^3*x2 - x1^4", 3));
  }
  SUBCASE("cubic") {
    Poly f = parse_poly("x^3 - x", 1);
    Poly h = homogenize_generous(f);
    CHECK(h == parse_poly("x*y^3 - x^3*y", 2)); // x = X0, y = X
  }
  SUBCASE("homogeneity and dehomogenization") {
    std::mt19937 rng(31337);
    for (int k = 0; k < 20; ++k) {
      Poly f = testing::random_poly(rng, 2, 5, 8);
      if (f.is_zero()) continue;
      Poly h = homogenize_generous(f);
      int target = f.degree() + 1;
      for (const auto& [m, c] : h.terms()) CHECK(m.degree() == target);
      // X0 -> 1 recovers f
      std::vector<Poly> sub{Poly::constant(2, 1), Poly::variable(2, 0),
                            Poly::variable(2, 1)};
      CHECK(h.substitute(sub) == f);
    }
  }
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(2024);
  for (int k = 0; k < 25; ++k) {
    Poly a = testing::random_poly(rng, 2, 8, 10);
    Poly b = testing::random_poly(rng, 2, 8, 10);
    Poly c = testing::random_poly(rng, 2, 8, 10);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}
