#pragma once

// Double-exponential quadrature for complex-valued integrands: tanh-sinh on a
// finite interval (robust against algebraic endpoint singularities) and
// exp-sinh on a half line.

#include <cmath>
#include <complex>
#include <numbers>

namespace f1zeta::quadrature {

using cplx = std::complex<double>;

struct Result {
  cplx value = 0.0;
  double error = 0.0;  // difference between the last two refinement levels
  int levels = 0;
  bool converged = false;
};

namespace detail {

// Trapezoidal sums over t in [-t_max, t_max], halving the step per level.
template <class Node>
Result refine(Node&& node, double t_max, double rel_tol, double abs_tol, int max_levels) {
  Result r;
  double h = 1.0;
  cplx sum = 0.0;
  const int n0 = static_cast<int>(t_max / h);
  for (int j = -n0; j <= n0; ++j) sum += node(j * h);
  cplx previous = h * sum;
  for (int level = 1; level <= max_levels; ++level) {
    h *= 0.5;
    const int n = static_cast<int>(t_max / h);
    for (int j = -n; j <= n; ++j)
      if (j % 2 != 0) sum += node(j * h);
    const cplx current = h * sum;
    r.value = current;
    r.error = std::abs(current - previous);
    r.levels = level;
    if (level >= 3 && r.error <= std::max(abs_tol, rel_tol * std::abs(current))) {
      r.converged = true;
      return r;
    }
    previous = current;
  }
  return r;
}

}  // namespace detail

// int_a^b f(x) dx; f may be singular (integrably) at either endpoint.
template <class F>
Result tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-12, double abs_tol = 1e-300,
                 int max_levels = 11) {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  const double width = b - a;
  auto node = [&](double t) -> cplx {
    const double s = half_pi * std::sinh(t);
    const double e = std::exp(-2.0 * std::abs(s));
    const double gap = width * e / (1.0 + e);  // distance to the nearer endpoint
    if (gap <= 0.0) return 0.0;
    const double x = t < 0 ? a + gap : b - gap;
    if (x <= a || x >= b) return 0.0;
    const double ch = std::cosh(s);
    const double weight = 0.5 * width * half_pi * std::cosh(t) / (ch * ch);
    if (weight == 0.0) return 0.0;
    return weight * f(x);
  };
  return detail::refine(node, 6.5, rel_tol, abs_tol, max_levels);
}

// int_a^inf f(x) dx for f decaying at least like a power beyond 1.
template <class F>
Result exp_sinh(F&& f, double a, double rel_tol = 1e-12, double abs_tol = 1e-300,
                int max_levels = 11) {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  auto node = [&](double t) -> cplx {
    const double s = half_pi * std::sinh(t);
    if (s > 700.0) return 0.0;
    const double offset = std::exp(s);
    const double x = a + offset;
    if (x == a) return 0.0;
    const double weight = half_pi * std::cosh(t) * offset;
    const cplx v = f(x);
    if (v == 0.0) return 0.0;
    return weight * v;
  };
  return detail::refine(node, 6.0, rel_tol, abs_tol, max_levels);
}

}  // namespace f1zeta::quadrature
