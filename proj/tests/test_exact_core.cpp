#include <random>

#include "acmgate/binomial.hpp"
#include "acmgate/errors.hpp"
#include "acmgate/linear.hpp"
#include "acmgate/poly.hpp"
#include "acmgate/rational.hpp"
#include "doctest.h"
#include "oracles.hpp"

using acm::Poly;
using acm::Rational;

TEST_CASE("rational normalizes and prints p/q") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational::parse("10/3") - Rational::parse("1/3") == Rational(3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(-7, 2).abs() == Rational(7, 2));
  CHECK_FALSE(Rational(7, 2).is_integer());
}

TEST_CASE("hdim matches monomial counts") {
  for (int n = -6; n <= 12; ++n) CHECK(acm::hdim(n) == oracle::h0_p4(n));
  CHECK(acm::hdim(6) == 210);
  CHECK(acm::hdim(-1) == 0);
}

TEST_CASE("binom4 is a Hom dimension") {
  for (int m = -8; m <= 12; ++m) CHECK(acm::binom4(m) == oracle::h0_p4(m - 4));
}

TEST_CASE("binom4_poly agrees with hdim where n + s >= -4") {
  for (int s = -7; s <= 7; ++s) {
    auto p = acm::binom4_poly(s);
    CHECK(p.degree() == 4);
    for (int n = -4 - s; n <= 20; ++n) CHECK(p.eval(Rational(n)) == Rational(acm::hdim(n + s)));
    // Below the window the polynomial keeps going; hdim stops at zero.
    CHECK(p.eval(Rational(-5 - s)) == Rational(1));
  }
}

TEST_CASE("poly parse and canonical text") {
  CHECK(Poly::parse("20 - 2*u2 + 2*u1").str() == "20 + 2*u1 - 2*u2");
  CHECK(Poly::parse("(10 - 2*u1)/3").str() == "10/3 - 2/3*u1");
  CHECK(Poly::parse("a+3*(27-d)").str() == "81 + a - 3*d");
  CHECK(Poly::parse("x^2*y - y*x*x").is_zero());
  CHECK(Poly::parse("2x").str() == "2*x");
  CHECK(Poly::parse("-(x - 1)") == Poly(1) - Poly::var("x"));
  CHECK_THROWS_AS(Poly::parse("x/y"), acm::ParseError);
  CHECK_THROWS_AS(Poly::parse("3 +"), acm::ParseError);
  CHECK_THROWS_AS(Poly::parse("(x"), acm::ParseError);
}

TEST_CASE("poly eval and substitution") {
  Poly p = Poly::parse("x^2 + 3*x*y - 1/2");
  CHECK(p.eval({{"x", Rational(2)}, {"y", Rational(1, 3)}}) == Rational(11, 2));
  CHECK_THROWS_AS(p.eval({{"x", Rational(2)}}), acm::UnknownSymbolError);
  CHECK(p.substitute("y", Poly::var("x")) == Poly::parse("4*x^2 - 1/2"));
  CHECK(p.partial_eval({{"x", Rational(0)}}) == Poly(Rational(-1, 2)));
  CHECK(p.total_degree() == 2);
  CHECK(p.degree_in("y") == 1);
}

namespace {

Poly random_poly(std::mt19937& rng) {
  const char* names[] = {"a", "b", "c"};
  std::uniform_int_distribution<int> coef(-5, 5), den(1, 3), ex(0, 2), count(0, 4), pick(0, 2);
  Poly out;
  for (int i = count(rng); i > 0; --i) {
    Poly term(Rational(coef(rng), den(rng)));
    for (int k = 0; k < 2; ++k) term *= Poly::var(names[pick(rng)]).pow(static_cast<unsigned>(ex(rng)));
    out += term;
  }
  return out;
}

}  // namespace

TEST_CASE("poly ring axioms on random inputs") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == Poly());
    CHECK(Poly::parse(p.str()) == p);
  }
}

TEST_CASE("poly evaluation is a ring homomorphism") {
  std::mt19937 rng(7);
  acm::Assignment at{{"a", Rational(2, 3)}, {"b", Rational(-5)}, {"c", Rational(7, 2)}};
  for (int trial = 0; trial < 100; ++trial) {
    Poly p = random_poly(rng), q = random_poly(rng);
    CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
    CHECK((p - q).eval(at) == p.eval(at) - q.eval(at));
  }
}

TEST_CASE("linear solver") {
  auto sol = acm::solve_linear({Poly::parse("x + d - 30"), Poly::parse("b - a - 81 + 3*d")}, {"x", "b"});
  REQUIRE(sol.size() == 2);
  CHECK(sol[0].str() == "x = 30 - d");
  CHECK(sol[1].str() == "b = 81 + a - 3*d");
  CHECK(acm::apply(sol, Poly::parse("x + b")) == Poly::parse("111 + a - 4*d"));

  // Redundant equations disappear; inconsistent ones are reported.
  CHECK(acm::solve_linear({Poly::parse("x - 1"), Poly::parse("2*x - 2")}).size() == 1);
  CHECK_THROWS_AS(acm::solve_linear({Poly::parse("x - 1"), Poly::parse("x - 2")}), acm::InconsistentConstraints);
  CHECK_THROWS_AS(acm::solve_linear({Poly::parse("x*y - 1")}), acm::InvalidInput);
  CHECK(acm::parse_equation("a+3*(27-d)=b") == Poly::parse("a + 81 - 3*d - b"));
  CHECK_THROWS_AS(acm::parse_equation("a+b"), acm::ParseError);
}
