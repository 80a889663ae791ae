#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "f1zeta/quadrature.hpp"
#include "f1zeta/regularize.hpp"
#include "f1zeta/special.hpp"
#include "f1zeta/zeta_calculus.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace f1zeta;
using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

namespace {

PowerLogSum u(const Rational& lambda = 1) { return PowerLogSum::monomial(lambda); }
PowerLogSum one() { return PowerLogSum::constant(1); }
PowerLogSum log_u() { return PowerLogSum::monomial(0, 1); }

double rel(cd a, cd b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST(Special, GammaAgreesWithStd) {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.3, 15.0, -0.5, -2.7})
    EXPECT_NEAR(special::gamma(cd(x, 0)).real() / std::tgamma(x), 1.0, 1e-13) << x;
  EXPECT_EQ(special::rgamma(cd(0, 0)), 0.0);
  EXPECT_EQ(special::rgamma(cd(-3, 0)), 0.0);
  // |Gamma(1/2 + i y)|^2 = pi / cosh(pi y)
  for (double y : {0.5, 2.0, 5.0})
    EXPECT_NEAR(std::norm(special::gamma(cd(0.5, y))), pi / std::cosh(pi * y), 1e-12 * pi / std::cosh(pi * y));
}

TEST(Special, RisingFactorial) {
  EXPECT_EQ(special::rising(cd(3, 0), 0), 1.0);
  EXPECT_NEAR(std::abs(special::rising(cd(0.5, 0), 2) - 0.75), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(special::rising(cd(1, 0), 4) - 24.0), 0.0, 1e-13);
}

TEST(Special, HurwitzZeta) {
  // Riemann values and Lerch's formula for the derivative at 0
  EXPECT_NEAR(special::hurwitz_zeta(2.0, 1.0).value.real(), pi * pi / 6, 1e-14);
  EXPECT_NEAR(special::hurwitz_zeta(4.0, 1.0).value.real(), std::pow(pi, 4) / 90, 1e-14);
  EXPECT_NEAR(special::hurwitz_zeta(0.0, 1.0).value.real(), -0.5, 1e-14);
  EXPECT_NEAR(special::hurwitz_zeta(-1.0, 1.0).value.real(), -1.0 / 12, 1e-14);
  for (double a : {0.3, 1.0, 2.5, 17.0, 120.5}) {
    const auto h = special::hurwitz_zeta(0.0, a);
    EXPECT_NEAR(h.value.real(), 0.5 - a, 1e-12 * std::max(1.0, a));
    EXPECT_NEAR(h.derivative.real(), std::lgamma(a) - 0.5 * std::log(2 * pi), 1e-11 * std::max(1.0, std::lgamma(a)));
  }
  EXPECT_THROW(special::hurwitz_zeta(1.0, 1.0), singularity_error);
}

TEST(Quadrature, EndpointSingularityAndInfiniteRange) {
  auto r = quadrature::tanh_sinh([](double t) { return cd(1.0 / std::sqrt(t), 0); }, 0.0, 1.0);
  EXPECT_NEAR(r.value.real(), 2.0, 1e-12);
  r = quadrature::exp_sinh([](double t) { return cd(std::exp(-t), 0); }, 0.0);
  EXPECT_NEAR(r.value.real(), 1.0, 1e-12);
  r = quadrature::exp_sinh([](double t) { return cd(1.0 / (t * t), 0); }, 1.0);
  EXPECT_NEAR(r.value.real(), 1.0, 1e-10);
  r = quadrature::tanh_sinh([](double t) { return cd(std::log(t), 0); }, 0.0, 1.0);
  EXPECT_NEAR(r.value.real(), -1.0, 1e-12);
}

TEST(TwoVariable, ClosedFormExamples) {
  const cd w(0.7, 0.2), s(4.0, 1.0);
  EXPECT_LT(rel(two_variable_zeta_closed(u(Rational(3, 2)), w, s), std::pow(s - 1.5, -w)), 1e-14);
  EXPECT_NEAR(std::abs(two_variable_zeta_closed(log_u(), 1.0, 2.0) - 0.25), 0.0, 1e-15);
  // w = 1: sum c m! (s - lambda)^{-1-m}
  const auto n = parse_expression("2*u*log^2 - 3*u^{-1}");
  const cd expected = 2.0 * 2.0 * std::pow(s - 1.0, -3.0) - 3.0 / (s + 1.0);
  EXPECT_LT(rel(two_variable_zeta_closed(n, 1.0, s), expected), 1e-14);
}

TEST(TwoVariable, NumericExamples) {
  EXPECT_NEAR(two_variable_zeta_numeric(u(), 1.0, 3.0).value.real(), 0.5, 1e-12);
  EXPECT_NEAR(two_variable_zeta_numeric(log_u(), 0.5, 2.0).value.real(), 0.5 * std::pow(2.0, -1.5), 1e-12);
  EXPECT_NEAR(two_variable_zeta_numeric(one(), 2.0, 1.0).value.real(), 1.0, 1e-12);
  EXPECT_THROW(two_variable_zeta_numeric(u(), 0.0, 3.0), precondition_error);
  EXPECT_THROW(two_variable_zeta_numeric(u(2), 1.0, 1.5), precondition_error);
}

TEST(TwoVariable, NumericMatchesClosedOnGrid) {
  gen::Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = gen::powers(rng, {.max_terms = 4, .lambda_max = 3, .integer_coefficients = false});
    const double deg = to_double(n.degree());
    for (double w : {0.5, 1.0, 2.0})
      for (double ds : {1.0, 2.5}) {
        const cd s(deg + ds, 0.0);
        const auto closed = two_variable_zeta_closed(n, w, s);
        const auto numeric = two_variable_zeta_numeric(n, w, s);
        EXPECT_LE(std::abs(numeric.value - closed), 1e-8 * std::max(std::abs(closed), 1e-3))
            << to_expression(n) << " w=" << w << " s=" << s;
      }
  }
}

TEST(TwoVariable, DerivativeIdentity) {
  EXPECT_LT(rel(zeta_via_w_derivative(u(2), cd(0, 1)), 1.0 / cd(-2, 1)), 1e-14);
  EXPECT_LT(rel(zeta_via_w_derivative(log_u(), 2.0), std::exp(0.5)), 1e-14);
  EXPECT_LT(rel(zeta_via_w_derivative(power(one() - u(-1), 2), 1.0), 4.0 / 3.0), 1e-14);
  gen::Rng rng(72);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = gen::powers(rng);
    const cd s(3.7 + 0.01 * trial, 0.9);
    EXPECT_LT(rel(zeta_via_w_derivative(n, s), evaluate_zeta(zeta_of(n), s)), 1e-12) << to_expression(n);
  }
}

// numerical w-derivative of the closed form at w = 0 also gives log zeta
TEST(TwoVariable, FiniteDifferenceInW) {
  const auto n = parse_expression("u^2 - 3*u*log + 1/2");
  const cd s(5.0, 0.5);
  const double h = 1e-5;
  const cd derivative =
      (two_variable_zeta_closed(n, h, s) - two_variable_zeta_closed(n, -h, s)) / (2 * h);
  EXPECT_LT(rel(std::exp(derivative), evaluate_zeta(zeta_of(n), s)), 1e-8);
}

TEST(Spectral, RiemannValue) {
  const auto v = spectral_zeta(spectra::circle(), 2.0, 0.0);
  EXPECT_NEAR(v.value.real(), 2 * std::pow(pi, 4) / 90, 1e-12);
  EXPECT_NEAR(v.value.imag(), 0.0, 1e-15);
}

TEST(Spectral, BruteForceAtTwoOne) {
  const double brute = oracle::circle_zeta_brute(2.0, 1.0);
  const auto v = spectral_zeta(spectra::circle(), 2.0, 1.0);
  EXPECT_LE(v.error_bound, 1e-10);
  EXPECT_NEAR(v.value.real(), brute, 1e-10);
}

TEST(Spectral, CothClosedForm) {
  // sum_{n>=1} 2/(n^2 + a^2) = (pi a coth(pi a) - 1) / a^2
  for (double s : {0.25, 1.0, 4.0, 30.0}) {
    const double a = std::sqrt(s);
    const double expected = (pi * a / std::tanh(pi * a) - 1.0) / s;
    EXPECT_NEAR(spectral_zeta(spectra::circle(), 1.0, s).value.real(), expected, 1e-11 * expected);
  }
}

TEST(Spectral, ContinuationValuesAtZero) {
  // zeta(0) = 2 zeta_R(0) = -1 for the circle without shift; sum over n of (n^2+s)^0 regularized
  const auto v = spectral_zeta(spectra::circle(), 0.0, 0.0);
  EXPECT_NEAR(v.value.real(), -1.0, 1e-12);
  // at w = -1: 2 sum (n^2 + s) = 2 zeta_R(-2) + 2 s zeta_R(0) = -s
  EXPECT_NEAR(spectral_zeta(spectra::circle(), -1.0, 3.0).value.real(), -3.0, 1e-10);
}

TEST(Spectral, WDerivativeMatchesDeterminantPath) {
  for (double s : {0.5, 2.0}) {
    const double h = 1e-5;
    const double fd = (spectral_zeta(spectra::circle(), h, s).value.real() -
                       spectral_zeta(spectra::circle(), -h, s).value.real()) /
                      (2 * h);
    const auto d = spectral_zeta_derivative_at_zero(spectra::circle(), s);
    EXPECT_NEAR(-d.log_value, fd, 1e-8);
  }
}

TEST(Spectral, ShiftConsistency) {
  for (double s0 : {0.5, 2.0}) {
    const auto shifted = spectra::shifted(spectra::circle(), s0);
    for (cd w : {cd(2, 0), cd(0.8, 0.3), cd(-0.3, 0)})
      EXPECT_LT(rel(spectral_zeta(shifted, w, 0.0).value, spectral_zeta(spectra::circle(), w, s0).value), 1e-12);
    EXPECT_NEAR(regularized_det(shifted, 1.0).log_value,
                regularized_det(spectra::circle(), s0 + 1.0).log_value, 1e-10);
  }
  // the k = 1 binomial term puts a genuine pole at w = -1/2 once the spectrum is shifted
  EXPECT_THROW(spectral_zeta(spectra::shifted(spectra::circle(), 1.0), -0.5, 0.0), singularity_error);
}

// Z_N(w, s) of the truncated counting function by the t-integral, plus the tail
TEST(Spectral, TruncatedCountingFunctionChain) {
  const std::size_t levels = 40;
  const auto n = spectra::truncated_counting_function(spectra::circle(), levels);
  const auto head = two_variable_zeta_numeric(n, 2.0, 1.0);
  const auto closed = two_variable_zeta_closed(n, 2.0, 1.0);
  EXPECT_LT(rel(head.value, closed), 1e-10);
  const auto full = spectral_zeta(spectra::circle(), 2.0, 1.0);
  const double tail_bound = spectra::circle().tail_bound(levels, 2.0, 1.0);
  EXPECT_LE(std::abs(full.value - head.value), tail_bound + full.error_bound + 1e-10);
  EXPECT_GT(std::abs(full.value - head.value), 0.0);
}

TEST(Spectral, Preconditions) {
  EXPECT_THROW(spectral_zeta(spectra::circle(), 0.5, 1.0), singularity_error);
  EXPECT_THROW(spectral_zeta(spectra::circle(), 2.0, -1.5), precondition_error);
  EXPECT_THROW(spectra::by_name("torus"), parse_error);
  EXPECT_THROW(spectra::from_power_law("bad", {1.0, 0.0, 1.0, 0.0, 1.0, 1}), precondition_error);
}

TEST(Determinant, SinhProduct) {
  for (double s : {0.25, 1.0, 4.0, 0.01, 10.0}) {
    const auto d = regularized_det(spectra::circle(), s);
    EXPECT_NEAR(d.value / oracle::circle_det(s), 1.0, 1e-9) << s;
    EXPECT_LE(d.error_bound, 1e-12);
  }
  EXPECT_NEAR(regularized_det(spectra::circle(), 1.0).value, 533.49352, 1e-4);
}

TEST(Determinant, LimitAtZero) {
  EXPECT_NEAR(regularized_det_limit_at_zero(spectra::circle()), 4 * pi * pi, 1e-4);
  EXPECT_THROW(regularized_det(spectra::circle(), 0.0), precondition_error);
}

// a spectrum with a non-integer exponent: lambda_n = (n + 1/2)^3
TEST(Determinant, OtherPowerLaw) {
  const auto spec = spectra::from_power_law("cubic", {1.0, 0.5, 3.0, 0.0, 1.0, 1});
  const double s = 0.7;
  const auto v = spectral_zeta(spec, 1.5, s);
  double brute = 0;
  for (long n = 200000; n >= 1; --n) brute += std::pow(std::pow(n + 0.5, 3.0) + s, -1.5);
  brute += std::pow(200000.5, -3.5) / 3.5;
  EXPECT_NEAR(v.value.real(), brute, 1e-10);
  const double h = 1e-5;
  const double fd = (spectral_zeta(spec, h, s).value.real() - spectral_zeta(spec, -h, s).value.real()) / (2 * h);
  EXPECT_NEAR(-regularized_det(spec, s).log_value, fd, 1e-7);
}
