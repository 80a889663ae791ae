#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "f1zeta/powerlog.hpp"
#include "generators.hpp"

using namespace f1zeta;

namespace {

PowerLogSum u(const Rational& lambda = 1) { return PowerLogSum::monomial(lambda); }
PowerLogSum one() { return PowerLogSum::constant(1); }
PowerLogSum log_u() { return PowerLogSum::monomial(0, 1); }

}  // namespace

TEST(PowerLog, Evaluate) {
  EXPECT_DOUBLE_EQ(u(2).evaluate(3.0), 9.0);
  EXPECT_DOUBLE_EQ((one() - u(-1)).evaluate(2.0), 0.5);
  EXPECT_NEAR(log_u().evaluate(std::numbers::e), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(u(Rational(1, 2)).evaluate(std::complex<double>(0, 4)) -
                       std::sqrt(std::complex<double>(0, 4))), 0.0, 1e-14);
  EXPECT_THROW(log_u().evaluate(-1.0), precondition_error);
}

TEST(PowerLog, Algebra) {
  EXPECT_EQ((one() - u(-1)) + u(-1), one());
  EXPECT_EQ((one() - u(-1)) * (one() - u(-2)), one() - u(-1) - u(-2) + u(-3));
  EXPECT_EQ((u() - one()).scaled(2), u().scaled(2) - one().scaled(2));
  EXPECT_TRUE((u() - u()).is_zero());
  EXPECT_EQ(log_u() * log_u(), PowerLogSum::monomial(0, 2));
  EXPECT_EQ(u(2).shifted(3), u(5));
}

TEST(PowerLog, Queries) {
  const auto n = parse_expression("3*u^2 - u^{-1/2}*log + 7");
  EXPECT_EQ(n.degree(), 2);
  EXPECT_EQ(n.min_exponent(), Rational(-1, 2));
  EXPECT_EQ(n.value_at_one(), 10);
  EXPECT_EQ(n.max_log_power(), 1);
  EXPECT_FALSE(n.is_pure_power());
  EXPECT_TRUE(n.has_integer_coefficients());
  EXPECT_FALSE(n.degree_has_log());
  EXPECT_TRUE(parse_expression("u^3*log").degree_has_log());
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual(u(Rational(5, 3))), u(Rational(-5, 3)));
  EXPECT_EQ(dual(log_u()), log_u().scaled(-1));
  for (int r = 1; r <= 6; ++r) {
    EXPECT_EQ(dual(power(one() - u(-1), r)), power(one() - u(), r));
    EXPECT_EQ(power(one() - u(), r), power(u() - one(), r).scaled(r % 2 ? -1 : 1));
  }
}

TEST(Dual, InvolutionAndValueAtOne) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = gen::powers(rng, {.integer_coefficients = trial % 2 == 0});
    EXPECT_EQ(dual(dual(n)), n);
    EXPECT_EQ(dual(n).value_at_one(), n.value_at_one());
    // value at one is the sum of the m = 0 coefficients
    Rational expected = 0;
    for (const auto& [k, c] : n.terms())
      if (k.log_power == 0) expected += c;
    EXPECT_EQ(n.value_at_one(), expected);
  }
}

TEST(Dual, NumericallyIsReciprocalArgument) {
  gen::Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = gen::powers(rng);
    for (double x : {0.3, 1.7, 4.0})
      EXPECT_NEAR(dual(n).evaluate(x), n.evaluate(1.0 / x), 1e-9 * (1 + std::abs(n.evaluate(1.0 / x))));
  }
}

TEST(FunctionalEquation, Examples) {
  for (int r = 1; r <= 6; ++r) {
    const auto w = detect_functional_equation(power(u() - one(), r), true);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->sign, r % 2 ? -1 : 1);
    EXPECT_EQ(w->omega, r);
  }
  const auto gl2 = (u(2) - one()) * (u(2) - u());
  EXPECT_EQ(gl2, u(4) - u(3) - u(2) + u());
  EXPECT_EQ(detect_functional_equation(gl2, true), (FunctionalEquationWitness{1, 5}));
  EXPECT_EQ(detect_functional_equation(u(2) + u(), true), (FunctionalEquationWitness{1, 3}));
  // single monomial: N* = u^{-2 alpha} N
  EXPECT_EQ(detect_functional_equation(u(2), true), (FunctionalEquationWitness{1, 4}));
  EXPECT_EQ(detect_functional_equation(log_u(), false), (FunctionalEquationWitness{-1, 0}));
  EXPECT_FALSE(detect_functional_equation(u(2) + u().scaled(3) - one(), true));
  EXPECT_FALSE(detect_functional_equation(u(2) + u().scaled(2), true));
}

TEST(FunctionalEquation, Preconditions) {
  EXPECT_THROW(detect_functional_equation(PowerLogSum{}, true), precondition_error);
  EXPECT_THROW(detect_functional_equation(log_u(), true), precondition_error);
}

// symmetric constructions always have a witness, and every witness is genuine
TEST(FunctionalEquation, DetectedWitnessesAreIdentities) {
  gen::Rng rng(33);
  int found = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto base = gen::powers(rng, {.max_terms = 3});
    const Rational omega = gen::rational_in(rng, -3, 3, true);
    const int c = trial % 2 ? 1 : -1;
    // N + c u^omega N* satisfies N* = c u^{-omega} N
    const auto symmetric = base + dual(base).shifted(omega).scaled(c);
    if (!symmetric.is_zero()) {
      const auto w = detect_functional_equation(symmetric, false);
      ASSERT_TRUE(w) << to_expression(symmetric);
      EXPECT_EQ(w->omega, omega);
      EXPECT_EQ(w->sign, c);
      ++found;
    }
    const auto random = gen::powers(rng);
    if (const auto w = detect_functional_equation(random, false)) {
      EXPECT_TRUE(satisfies_functional_equation(random, *w));
      EXPECT_EQ(dual(random), random.shifted(-w->omega).scaled(w->sign));
    }
  }
  EXPECT_GT(found, 250);
}

TEST(ProductBuilder, VanishesAtOne) {
  gen::Rng rng(34);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> omegas;
    for (int i = gen::uniform(rng, 1, 4); i > 0; --i) omegas.push_back(gen::rational_in(rng, 1, 4, true));
    const auto n = product_one_minus(omegas);
    EXPECT_EQ(n.value_at_one(), 0);
    double direct = 1.0;
    for (const auto& w : omegas) direct *= 1.0 - std::pow(2.5, -to_double(w));
    EXPECT_NEAR(n.evaluate(2.5), direct, 1e-12);
  }
}

TEST(Expression, ParsesSpellings) {
  EXPECT_EQ(parse_expression("1*u^2"), u(2));
  EXPECT_EQ(parse_expression("u^2"), u(2));
  EXPECT_EQ(parse_expression(" - u "), u().scaled(-1));
  EXPECT_EQ(parse_expression("1/2*u^{-3/2}"), u(Rational(-3, 2)).scaled(Rational(1, 2)));
  EXPECT_EQ(parse_expression("2*log^3"), PowerLogSum::monomial(0, 3, 2));
  EXPECT_EQ(parse_expression("u^{1/2}*log^2"), PowerLogSum::monomial(Rational(1, 2), 2));
  EXPECT_EQ(parse_expression("0.25*u^-1"), u(-1).scaled(Rational(1, 4)));
  EXPECT_EQ(parse_expression("3 - 3"), PowerLogSum{});
  EXPECT_EQ(parse_expression("u*u"), u(2));
}

TEST(Expression, RejectsGarbage) {
  for (const char* bad : {"", "u^", "2**u", "u +", "x", "u^{1/2", "log^{-1}", "3 u"})
    EXPECT_THROW(parse_expression(bad), parse_error) << bad;
}

TEST(Expression, RoundTrip) {
  gen::Rng rng(35);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = gen::powers(rng, {.integer_coefficients = trial % 3 == 0});
    EXPECT_EQ(parse_expression(to_expression(n)), n) << to_expression(n);
  }
  EXPECT_EQ(to_expression(u(2) - one()), "-1 + u^2");
  EXPECT_EQ(to_expression(PowerLogSum{}), "0");
}
