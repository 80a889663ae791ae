#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "f1zeta/errors.hpp"

namespace f1zeta::special {

using cplx = std::complex<double>;

// 1/Gamma(z), entire; Lanczos (g = 7, n = 9) with reflection for Re z < 1/2.
inline cplx rgamma(cplx z) {
  static constexpr std::array<double, 9> p = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double pi = std::numbers::pi;
  if (z.real() < 0.5) {
    // 1/Gamma(z) = sin(pi z) Gamma(1 - z) / pi
    if (z.imag() == 0.0 && z.real() == std::round(z.real())) return 0.0;
    const cplx s = std::sin(pi * z);
    return s / (pi * rgamma(1.0 - z));
  }
  z -= 1.0;
  cplx x = p[0];
  for (int i = 1; i < 9; ++i) x += p[i] / (z + static_cast<double>(i));
  const cplx t = z + 7.5;
  // Gamma(z+1) = sqrt(2 pi) t^{z+1/2} e^{-t} x
  return std::exp(t - (z + 0.5) * std::log(t)) / (std::sqrt(2.0 * pi) * x);
}

inline cplx gamma(cplx z) { return 1.0 / rgamma(z); }

// exp(z) - 1 without cancellation for small |z|.
inline cplx expm1(cplx z) {
  const double x = z.real(), y = z.imag();
  if (y == 0.0) return std::expm1(x);
  const double half_sin = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

// Rising factorial w (w+1) ... (w+m-1) = Gamma(w+m)/Gamma(w).
inline cplx rising(cplx w, int m) {
  cplx r = 1.0;
  for (int i = 0; i < m; ++i) r *= w + static_cast<double>(i);
  return r;
}

struct HurwitzValue {
  cplx value;       // zeta(sigma, a)
  cplx derivative;  // d/dsigma zeta(sigma, a)
  double error;     // bound on the Euler-Maclaurin remainder of either quantity
};

// Hurwitz zeta sum_{n>=0} (n+a)^{-sigma}, analytically continued, with its
// sigma-derivative. Euler-Maclaurin after `direct` explicit terms.
inline HurwitzValue hurwitz_zeta(cplx sigma, double a, int direct = -1) {
  if (!(a > 0)) throw precondition_error("hurwitz_zeta needs a > 0");
  if (sigma == 1.0) throw singularity_error("Hurwitz zeta has a pole at sigma = 1");
  // B_{2k} / (2k)!, k = 1..15
  static constexpr std::array<double, 15> b_over_fact = {
      0.083333333333333329, -0.0013888888888888889, 3.3068783068783071e-05,
      -8.2671957671957675e-07, 2.08767569878681e-08, -5.2841901386874932e-10,
      1.3382536530684679e-11, -3.3896802963225827e-13, 8.5860620562778452e-15,
      -2.1748686985580619e-16, 5.5090028283602295e-18, -1.3954464685812522e-19,
      3.5347070396294673e-21, -8.9535174270375463e-23, 2.2679524523376829e-24,
  };
  constexpr int kTerms = 14;
  if (direct < 0) {
    const double need = 20.0 + std::abs(sigma);
    direct = a >= need ? 0 : static_cast<int>(std::ceil(need - a));
  }
  HurwitzValue out{0.0, 0.0, 0.0};
  for (int n = 0; n < direct; ++n) {
    const double base = n + a;
    const double lb = std::log(base);
    const cplx term = std::exp(-sigma * lb);
    out.value += term;
    out.derivative -= lb * term;
  }
  const double x = direct + a;
  const double lx = std::log(x);
  const cplx x_pow = std::exp(-sigma * lx);  // x^{-sigma}
  const cplx sm1 = sigma - 1.0;
  out.value += x * x_pow / sm1 + 0.5 * x_pow;
  out.derivative += -lx * x * x_pow / sm1 - x * x_pow / (sm1 * sm1) - 0.5 * lx * x_pow;
  cplx poly = sigma;  // sigma (sigma+1) ... (sigma+2k-2)
  cplx dpoly = 1.0;
  cplx x_factor = x_pow / x;  // x^{-sigma-2k+1}
  const double inv_x2 = 1.0 / (x * x);
  for (int k = 1; k <= kTerms + 1; ++k) {
    const cplx term = b_over_fact[k - 1] * poly * x_factor;
    const cplx dterm = b_over_fact[k - 1] * (dpoly - lx * poly) * x_factor;
    if (k <= kTerms) {
      out.value += term;
      out.derivative += dterm;
    } else {
      out.error = 2.0 * std::max(std::abs(term), std::abs(dterm));
    }
    const cplx f1 = sigma + static_cast<double>(2 * k - 1);
    const cplx f2 = sigma + static_cast<double>(2 * k);
    dpoly = dpoly * f1 * f2 + poly * (f1 + f2);
    poly *= f1 * f2;
    x_factor *= inv_x2;
  }
  return out;
}

}  // namespace f1zeta::special
