#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "f1zeta/zeta_calculus.hpp"
#include "generators.hpp"

using namespace f1zeta;
using cd = std::complex<double>;

namespace {

PowerLogSum u(const Rational& lambda = 1) { return PowerLogSum::monomial(lambda); }
PowerLogSum one() { return PowerLogSum::constant(1); }
PowerLogSum log_u() { return PowerLogSum::monomial(0, 1); }

double rel(cd a, cd b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

cd random_point(gen::Rng& rng) {
  std::uniform_real_distribution<double> d(-4.0, 4.0);
  return {d(rng), d(rng)};
}

}  // namespace

TEST(ZetaOf, PaperExamples) {
  EXPECT_EQ(to_pretty(zeta_of(u(Rational(3, 2)))), "1/(s-3/2)");
  EXPECT_EQ(to_pretty(zeta_of(log_u())), "exp(1/s)");
  EXPECT_EQ(to_pretty(zeta_of((one() - u(-1)) * (one() - u(-2)))), "(s+1)(s+2)/(s(s+3))");
  EXPECT_EQ(to_pretty(zeta_of(u() - one())), "s/(s-1)");
  EXPECT_EQ(to_pretty(zeta_of(one().scaled(2))), "1/s^2");
  EXPECT_EQ(to_pretty(zeta_of(PowerLogSum::monomial(1, 2, 3))), "exp(3/(s-1)^2)");
}

TEST(EvaluateZeta, Examples) {
  EXPECT_NEAR(rel(evaluate_zeta(zeta_of(u() - one()), 3.0), 1.5), 0.0, 1e-15);
  EXPECT_NEAR(rel(evaluate_zeta(zeta_of(log_u()), 2.0), std::exp(0.5)), 0.0, 1e-15);
  EXPECT_NEAR(rel(evaluate_zeta(zeta_of(one()), cd(0, 1)), cd(0, -1)), 0.0, 1e-15);
  EXPECT_THROW(evaluate_zeta(zeta_of(one()), 0.0), singularity_error);
  EXPECT_EQ(evaluate_zeta(zeta_of(one().scaled(-1)), 0.0), 0.0);
  EXPECT_THROW(evaluate_zeta(zeta_of(log_u()), 0.0), singularity_error);
}

TEST(EvaluateZeta, MatchesDirectProduct) {
  gen::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = gen::powers(rng, {.integer_coefficients = false});
    const cd s = random_point(rng) + cd(0, 0.05);
    // prod (s-lambda)^{-c} for m = 0, exp(c (m-1)! (s-lambda)^{-m}) otherwise
    cd log_direct = 0;
    for (const auto& [k, c] : n.terms()) {
      const cd x = s - to_double(k.lambda);
      log_direct += k.log_power == 0 ? -to_double(c) * std::log(x)
                                     : to_double(c) * std::tgamma(k.log_power) * std::pow(x, -k.log_power);
    }
    EXPECT_LT(rel(evaluate_zeta(zeta_of(n), s), std::exp(log_direct)), 1e-10) << to_expression(n);
  }
}

TEST(MultiplyZeta, Cancellation) {
  FactoredZeta a, b;
  a.add_factor(0, 0, 1);  // 1/s
  b.add_factor(0, 0, -1);  // s
  EXPECT_TRUE(multiply_zeta(a, b).is_constant_one());
  EXPECT_TRUE(multiply_zeta(zeta_of(log_u()), zeta_of(log_u().scaled(-1))).is_constant_one());
}

TEST(MultiplyZeta, Homomorphism) {
  gen::Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = gen::powers(rng, {.integer_coefficients = false});
    const auto b = gen::powers(rng, {.integer_coefficients = false});
    EXPECT_EQ(zeta_of(a + b), multiply_zeta(zeta_of(a), zeta_of(b)));
  }
}

TEST(Reflect, PowerDualityIsExact) {
  gen::Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = gen::powers(rng, {.max_log = 0});
    const SignedZeta left = reflect(zeta_of(dual(n)), 0);  // zeta_{N*}(-s)
    const SignedZeta right{sign_power(n.value_at_one()), zeta_of(n)};
    EXPECT_EQ(left, right) << to_expression(n);
  }
}

TEST(Reflect, LogFactorRatio) {
  for (int m = 1; m <= 5; ++m)
    for (const auto& lambda : {Rational(0), Rational(-2), Rational(7, 3)}) {
      const auto n = PowerLogSum::monomial(lambda, m);
      // phi_m(-s + lambda)^{(-1)^m} = phi_m(s - lambda)
      EXPECT_EQ(reflect(zeta_of(dual(n)), 0), (SignedZeta{1, zeta_of(n)}));
    }
}

TEST(Reflect, NumericallyConsistent) {
  gen::Rng rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = gen::powers(rng);
    const Rational omega = gen::rational_in(rng, -2, 2, true);
    const auto z = zeta_of(n);
    const auto r = reflect(z, omega);
    for (int i = 0; i < 10; ++i) {
      const cd s = random_point(rng) + cd(0, 0.1);
      EXPECT_LT(rel(evaluate_zeta(r, s), evaluate_zeta(z, to_double(omega) - s)), 1e-9);
    }
  }
}

TEST(Reflect, RejectsFractionalExponent) {
  EXPECT_THROW(reflect(zeta_of(one().scaled(Rational(1, 2))), 0), precondition_error);
}

TEST(Shift, MovesFactors) {
  const auto z = shift(zeta_of(u(3)), 1);  // 1/(s + 1 - 3)
  EXPECT_EQ(to_pretty(z), "1/(s-2)");
  EXPECT_EQ(power(zeta_of(u(3)), -2).exponent(3), -2);
}

TEST(Epsilon, PaperExamples) {
  for (const auto& alpha : {Rational(0), Rational(2), Rational(-5, 2)}) {
    const auto r = epsilon_factor(u(alpha));
    EXPECT_EQ(r.sign, -1);
    EXPECT_LE(r.numeric_residual, 1e-12);
  }
  const std::vector<Rational> omegas{1, 2, Rational(5, 2)};
  EXPECT_EQ(epsilon_factor(product_one_minus(omegas)).sign, 1);
  EXPECT_EQ(epsilon_factor(log_u()).sign, 1);
  EXPECT_LE(epsilon_factor(log_u()).numeric_residual, 1e-12);
  EXPECT_THROW(epsilon_factor(one().scaled(Rational(1, 2))), precondition_error);
}

TEST(Epsilon, SignLawOnRandomSums) {
  gen::Rng rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = gen::powers(rng);
    const auto r = epsilon_factor(n);
    EXPECT_EQ(r.sign, is_odd(num(n.value_at_one())) ? -1 : 1);
    EXPECT_LE(r.numeric_residual, 1e-9) << to_expression(n);
  }
}

TEST(ZetaFe, GroupStyleIdentity) {
  const auto gl2 = u(4) - u(3) - u(2) + u();
  const auto r = verify_zeta_fe(gl2, {1, 5});
  EXPECT_TRUE(r.holds) << r.details;
  EXPECT_EQ(r.identity, "zeta(5 - s) = zeta(s)^1");
  EXPECT_THROW(verify_zeta_fe(gl2, {1, 4}), precondition_error);
}

TEST(ZetaFe, EveryWitnessGivesAZetaIdentity) {
  gen::Rng rng(46);
  for (int trial = 0; trial < 150; ++trial) {
    const auto base = gen::powers(rng, {.max_terms = 3});
    const Rational omega = gen::rational_in(rng, -2, 2, true);
    const int c = trial % 2 ? 1 : -1;
    const auto n = base + dual(base).shifted(omega).scaled(c);
    if (n.is_zero()) continue;
    const auto w = detect_functional_equation(n, false);
    ASSERT_TRUE(w);
    const auto r = verify_zeta_fe(n, *w);
    EXPECT_TRUE(r.holds) << to_expression(n) << ": " << r.details;
    // and numerically: zeta(omega - s) = sign zeta(s)^c
    const auto z = zeta_of(n);
    for (int i = 0; i < 10; ++i) {
      const cd s = random_point(rng) + cd(0, 0.2);
      const cd lhs = evaluate_zeta(z, to_double(w->omega) - s);
      const cd rhs = double(r.expected_sign) * std::pow(evaluate_zeta(z, s), double(w->sign));
      EXPECT_LT(rel(lhs, rhs), 1e-9);
    }
  }
}

TEST(IntegralForm, UpperRegion) {
  auto v = log_zeta_integral_form(one() - u(-1), 3.0, IntegralRegion::upper);
  EXPECT_NEAR(std::abs(std::exp(-v.value) - 0.75), 0.0, 1e-8);
  v = log_zeta_integral_form(log_u(), 2.0, IntegralRegion::upper);
  EXPECT_NEAR(std::abs(v.value - 0.5), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(std::exp(-v.value) - std::exp(-0.5)), 0.0, 1e-8);
  v = log_zeta_integral_form(PowerLogSum{}, 2.0, IntegralRegion::upper);
  EXPECT_EQ(v.value, 0.0);
}

TEST(IntegralForm, MatchesZetaOnRandomInputs) {
  gen::Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    auto n = gen::powers(rng, {.max_terms = 4, .max_log = 1});
    n -= PowerLogSum::constant(n.value_at_one());  // force N(1) = 0
    if (n.is_zero()) continue;
    const cd s(to_double(n.degree()) + 1.5, 0.7);
    const auto v = log_zeta_integral_form(n, s, IntegralRegion::upper);
    EXPECT_LT(rel(std::exp(-v.value), 1.0 / evaluate_zeta(zeta_of(n), s)), 1e-8) << to_expression(n);
    const cd t(to_double(n.min_exponent()) - 1.5, -0.4);
    const auto w = log_zeta_integral_form(n, t, IntegralRegion::lower);
    EXPECT_LT(rel(std::exp(-w.value), evaluate_zeta(zeta_of(dual(n)), -t)), 1e-8) << to_expression(n);
  }
}

TEST(IntegralForm, Preconditions) {
  EXPECT_THROW(log_zeta_integral_form(u(), 3.0, IntegralRegion::upper), precondition_error);
  EXPECT_THROW(log_zeta_integral_form(one() - u(-1), 0.0, IntegralRegion::upper), precondition_error);
  // the (0, 1) integral converges only below the smallest exponent
  EXPECT_THROW(log_zeta_integral_form(one() - u(-1), -0.5, IntegralRegion::lower), precondition_error);
  EXPECT_NO_THROW(log_zeta_integral_form(one() - u(-1), -1.5, IntegralRegion::lower));
}
