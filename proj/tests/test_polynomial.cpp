#include <catch2/catch_amalgamated.hpp>

#include "lvmono/polynomial.hpp"

using lvmono::Polynomial;
using lvmono::Rational;

TEST_CASE("normalization and degree") {
  REQUIRE(Polynomial({1, 2, 0, 0}).degree() == 1);
  REQUIRE(Polynomial({0, 0}).is_zero());
  REQUIRE(Polynomial::zero().degree() == -1);
  REQUIRE(Polynomial::one().degree() == 0);
  REQUIRE(Polynomial::monomial(3).degree() == 3);
  REQUIRE(Polynomial::power_minus_one(4) ==
          Polynomial({-1, 0, 0, 0, 1}));
  REQUIRE(Polynomial({-1, 1}).is_monic());
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial t_minus_1({-1, 1});
  const Polynomial t_plus_1({1, 1});
  REQUIRE(t_minus_1 * t_plus_1 == Polynomial({-1, 0, 1}));
  REQUIRE(t_minus_1 + t_plus_1 == Polynomial({0, 2}));
  REQUIRE(t_minus_1 - t_minus_1 == Polynomial::zero());
  REQUIRE(t_minus_1.pow(2) == Polynomial({1, -2, 1}));
  REQUIRE(t_minus_1.pow(0) == Polynomial::one());
  REQUIRE(Polynomial::zero() * t_plus_1 == Polynomial::zero());
}

TEST_CASE("evaluation") {
  const Polynomial p({1, -2, 1});  // (t-1)^2
  REQUIRE(p.eval(Rational(1)) == Rational(0));
  REQUIRE(p.eval(Rational(3)) == Rational(4));
  REQUIRE(p.eval(Rational(1, 2)) == Rational(1, 4));
  REQUIRE(Polynomial::zero().eval(Rational(5)) == Rational(0));
}

TEST_CASE("exact division") {
  const Polynomial t_minus_1({-1, 1});
  const Polynomial t2_minus_1({-1, 0, 1});
  auto [q, r] = t2_minus_1.divmod(t_minus_1);
  REQUIRE(q == Polynomial({1, 1}));
  REQUIRE(r.is_zero());
  REQUIRE(t_minus_1.divides(t2_minus_1));
  REQUIRE_FALSE(t2_minus_1.divides(t_minus_1));

  // nonzero remainder: t^2 + 1 = (t+2)(t-2) + 5
  auto [q2, r2] = Polynomial({1, 0, 1}).divmod(Polynomial({2, 1}));
  REQUIRE(q2 == Polynomial({-2, 1}));
  REQUIRE(r2 == Polynomial({5}));
  REQUIRE(q2 * Polynomial({2, 1}) + r2 == Polynomial({1, 0, 1}));

  // rational leading coefficients stay exact
  auto [q3, r3] = Polynomial({0, 0, 1}).divmod(Polynomial({0, Rational(2, 3)}));
  REQUIRE(q3 == Polynomial({0, Rational(3, 2)}));
  REQUIRE(r3.is_zero());

  REQUIRE_THROWS_AS(t_minus_1.divmod(Polynomial::zero()), std::domain_error);
  REQUIRE(Polynomial::zero().divides(Polynomial::zero()));
  REQUIRE_FALSE(Polynomial::zero().divides(t_minus_1));
}

TEST_CASE("string form") {
  REQUIRE(Polynomial({1, -2, 1}).str() == "t^2 - 2*t + 1");
  REQUIRE(Polynomial({0, -1}).str() == "-t");
  REQUIRE(Polynomial({Rational(1, 2)}).str() == "1/2");
  REQUIRE(Polynomial::zero().str() == "0");
  REQUIRE(Polynomial({-1, 0, 0, 1}).str("x") == "x^3 - 1");
}
