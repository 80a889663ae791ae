#pragma once

// Two-variable zeta regularization
//
//     Z_N(w, s) = 1/Gamma(w) int_1^inf N(u) u^{-s-1} (log u)^{w-1} du,
//     zeta_N(s) = exp(d/dw Z_N(w, s) at w = 0),
//
// in closed form and by quadrature, and zeta-regularized determinants
// det'(Delta + s) = exp(-d/dw zeta_{Delta+s}(w) at w = 0) for explicit spectra.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "f1zeta/errors.hpp"
#include "f1zeta/powerlog.hpp"
#include "f1zeta/quadrature.hpp"
#include "f1zeta/rational.hpp"
#include "f1zeta/special.hpp"

namespace f1zeta {

using cplx = std::complex<double>;

// sum c Gamma(w+m)/Gamma(w) (s - lambda)^{-w-m}; the Gamma ratio is the rising factorial.
inline cplx two_variable_zeta_closed(const PowerLogSum& n, cplx w, cplx s) {
  cplx acc = 0.0;
  for (const auto& [k, c] : n.terms()) {
    const cplx x = s - to_double(k.lambda);
    if (x == 0.0) throw singularity_error("Z_N(w, s) is singular at s = " + k.lambda.str());
    acc += to_double(c) * special::rising(w, k.log_power) *
           std::exp(-(w + static_cast<double>(k.log_power)) * std::log(x));
  }
  return acc;
}

struct NumericValue {
  cplx value;
  double error = 0.0;
};

// Quadrature of 1/Gamma(w) int_0^inf N(e^t) e^{-st} t^{w-1} dt, split at t = 1.
inline NumericValue two_variable_zeta_numeric(const PowerLogSum& n, cplx w, cplx s,
                                              double rel_tol = 1e-12) {
  if (!(w.real() > 0)) throw precondition_error("Z_N(w, s) integral needs Re(w) > 0");
  if (n.is_zero()) return {0.0, 0.0};
  const Rational deg = n.degree();
  if (!(s.real() > to_double(deg)))
    throw precondition_error("Z_N(w, s) integral needs Re(s) > max exponent = " + deg.str());
  struct Term {
    double lambda;
    int m;
    double c;
  };
  std::vector<Term> terms;
  for (const auto& [k, c] : n.terms()) terms.push_back({to_double(k.lambda), k.log_power, to_double(c)});
  auto integrand = [&](double t) -> cplx {
    const double lt = std::log(t);
    cplx acc = 0.0;
    for (const auto& term : terms)
      acc += term.c * std::exp((term.lambda - s) * t + (w - 1.0 + static_cast<double>(term.m)) * lt);
    return acc;
  };
  const auto head = quadrature::tanh_sinh(integrand, 0.0, 1.0, rel_tol);
  const auto tail = quadrature::exp_sinh(integrand, 1.0, rel_tol);
  const cplx scale = special::rgamma(w);
  return {scale * (head.value + tail.value), std::abs(scale) * (head.error + tail.error)};
}

// exp of d/dw Z_N(w, s) at w = 0, taken term by term from the closed form:
// -c log(s - lambda) for m = 0 and c (m-1)! (s - lambda)^{-m} for m >= 1.
inline cplx zeta_via_w_derivative(const PowerLogSum& n, cplx s) {
  cplx log_zeta = 0.0;
  for (const auto& [k, c] : n.terms()) {
    const cplx x = s - to_double(k.lambda);
    if (x == 0.0) throw singularity_error("zeta_N is singular at s = " + k.lambda.str());
    if (k.log_power == 0)
      log_zeta -= to_double(c) * std::log(x);
    else
      log_zeta += to_double(c) * std::tgamma(static_cast<double>(k.log_power)) *
                  std::pow(x, -static_cast<double>(k.log_power));
  }
  return std::exp(log_zeta);
}

// ---------------------------------------------------------------------------
// Spectra

struct Eigenvalue {
  double value = 0.0;
  double multiplicity = 1.0;
};

// Exact asymptotic form of the spectrum: for index n >= start the n-th
// eigenvalue level is scale (n + shift)^exponent + offset with constant multiplicity.
struct PowerLawTail {
  double scale = 1.0;
  double shift = 0.0;
  double exponent = 2.0;
  double offset = 0.0;
  double multiplicity = 1.0;
  std::size_t start = 1;
};

struct SpectrumDescription {
  std::string name;
  // n >= 1 -> n-th eigenvalue level (nondecreasing, positive) with multiplicity
  std::function<Eigenvalue(std::size_t)> enumerator;
  // bound on sum_{n > J} mult_n (lambda_n + s)^{-w} for real w above the abscissa
  std::function<double(std::size_t, double, double)> tail_bound;
  PowerLawTail law;

  // Re(w) > 1/exponent
  double abscissa() const { return 1.0 / law.exponent; }
};

namespace spectra {

inline std::function<double(std::size_t, double, double)> power_law_tail_bound(PowerLawTail law) {
  return [law](std::size_t j, double w, double s) {
    const double x = law.exponent * w;
    if (!(x > 1.0)) throw precondition_error("tail bound needs w above the convergence abscissa");
    if (law.offset + s < 0) throw precondition_error("tail bound needs offset + s >= 0");
    const double base = static_cast<double>(j) + law.shift;
    return law.multiplicity * std::pow(law.scale, -w) * std::pow(base, 1.0 - x) / (x - 1.0);
  };
}

inline SpectrumDescription from_power_law(std::string name, PowerLawTail law) {
  if (!(law.scale > 0) || !(law.exponent > 0) || !(law.multiplicity > 0))
    throw precondition_error("power-law spectrum needs positive scale, exponent and multiplicity");
  const double inv = 1.0 / law.exponent;
  if (std::abs(inv - std::round(inv)) < 1e-12)
    throw precondition_error("power-law exponents with integral reciprocal are not supported");
  SpectrumDescription spec;
  spec.name = std::move(name);
  spec.law = law;
  spec.enumerator = [law](std::size_t n) {
    return Eigenvalue{law.scale * std::pow(static_cast<double>(n) + law.shift, law.exponent) + law.offset,
                      law.multiplicity};
  };
  spec.tail_bound = power_law_tail_bound(law);
  return spec;
}

// Laplacian on the circle of circumference 2 pi: eigenvalues n^2, multiplicity 2.
inline SpectrumDescription circle() {
  return from_power_law("circle", PowerLawTail{1.0, 0.0, 2.0, 0.0, 2.0, 1});
}

// mu_j = lambda_j + s0.
inline SpectrumDescription shifted(const SpectrumDescription& base, double s0) {
  SpectrumDescription spec = base;
  spec.name = base.name + "+" + std::to_string(s0);
  spec.law.offset += s0;
  spec.enumerator = [e = base.enumerator, s0](std::size_t n) {
    auto ev = e(n);
    ev.value += s0;
    return ev;
  };
  spec.tail_bound = [b = base.tail_bound, s0](std::size_t j, double w, double s) { return b(j, w, s + s0); };
  return spec;
}

inline SpectrumDescription by_name(const std::string& name) {
  if (name == "circle") return circle();
  throw parse_error("unknown spectrum '" + name + "' (built-in: circle)");
}

// N(u) = sum_{n <= J} mult_n u^{-lambda_n}.
inline PowerLogSum truncated_counting_function(const SpectrumDescription& spec, std::size_t levels) {
  PowerLogSum n;
  for (std::size_t i = 1; i <= levels; ++i) {
    const auto ev = spec.enumerator(i);
    n.add_term(-Rational(ev.value), 0, Rational(ev.multiplicity));
  }
  return n;
}

}  // namespace spectra

struct SpectralValue {
  cplx value;
  double error_bound = 0.0;
  std::size_t explicit_levels = 0;  // J
  int binomial_order = 0;           // K
};

namespace detail {

// Upper bound for the Hurwitz zeta sum_{n>=0} (n+b)^{-x}, x > 1.
inline double hurwitz_upper(double x, double b) { return std::pow(b, -x) * (1.0 + b / (x - 1.0)); }

struct TailPlan {
  std::size_t levels;
  double b;      // first tail index plus shift
  cplx sigma;    // offset + s
  double ratio;  // |sigma| / (scale b^gamma) <= 1/4
};

inline TailPlan plan_tail(const SpectrumDescription& spec, cplx s) {
  const auto& law = spec.law;
  const auto first = spec.enumerator(1);
  if (!(first.value + s.real() > 0))
    throw precondition_error("spectral zeta needs Re(s) > -lambda_1 = " + std::to_string(-first.value));
  TailPlan plan;
  plan.sigma = law.offset + s;
  std::size_t j = std::max<std::size_t>(law.start > 0 ? law.start - 1 : 0, 16);
  for (;; ++j) {
    const double b = static_cast<double>(j + 1) + law.shift;
    if (b > 0 && law.scale * std::pow(b, law.exponent) >= 4.0 * std::abs(plan.sigma)) {
      plan.levels = j;
      plan.b = b;
      break;
    }
    if (j > 100000000) throw convergence_error("spectral shift too large for the tail expansion", 0);
  }
  plan.ratio = std::abs(plan.sigma) / (law.scale * std::pow(plan.b, law.exponent));
  return plan;
}

inline void check_head(const SpectrumDescription& spec, std::size_t levels) {
  double previous = 0.0;
  for (std::size_t n = 1; n <= levels; ++n) {
    const auto ev = spec.enumerator(n);
    if (!(ev.value > 0)) throw precondition_error("eigenvalues must be positive");
    if (ev.value < previous) throw precondition_error("eigenvalues must be nondecreasing");
    if (!(ev.multiplicity > 0) || ev.multiplicity != std::round(ev.multiplicity))
      throw precondition_error("multiplicities must be positive integers");
    previous = ev.value;
  }
}

}  // namespace detail

// sum_j mult_j (lambda_j + s)^{-w}, analytically continued in w.
// The first J levels are summed directly; beyond them
//   (lambda + s)^{-w} = (scale mu)^{-w} sum_k binom(-w, k) (sigma / (scale mu))^k,
// and each sum over mu = (n + shift)^gamma is a Hurwitz zeta value.
inline SpectralValue spectral_zeta(const SpectrumDescription& spec, cplx w, cplx s, double tol = 1e-10) {
  const auto& law = spec.law;
  const auto plan = detail::plan_tail(spec, s);
  detail::check_head(spec, plan.levels);
  SpectralValue out;
  out.explicit_levels = plan.levels;
  for (std::size_t n = 1; n <= plan.levels; ++n) {
    const auto ev = spec.enumerator(n);
    out.value += ev.multiplicity * std::exp(-w * std::log(ev.value + s));
  }
  const double log_scale = std::log(law.scale);
  const double abs_w = std::abs(w);
  cplx binom = 1.0;   // binom(-w, k)
  cplx sig_pow = 1.0;  // sigma^k
  cplx tail = 0.0;
  double em_error = 0.0;
  int k = 0;
  for (;; ++k) {
    if (binom != 0.0) {
      const cplx x = law.exponent * (w + static_cast<double>(k));
      if (std::abs(x - 1.0) < 1e-14)
        throw singularity_error("spectral zeta has a pole at w = " + std::to_string(1.0 / law.exponent - k));
      const auto h = special::hurwitz_zeta(x, plan.b);
      const cplx coeff = binom * sig_pow * std::exp(-(w + static_cast<double>(k)) * log_scale);
      tail += coeff * h.value;
      em_error += std::abs(coeff) * h.error;
    }
    // bound on the next term
    const int next = k + 1;
    const double xr = law.exponent * (w.real() + next);
    double binom_bound = 1.0;
    for (int i = 0; i < next; ++i) binom_bound *= (abs_w + i) / (i + 1.0);
    const double next_bound = xr > 1.0 ? binom_bound * std::pow(std::abs(plan.sigma) / law.scale, next) *
                                             std::pow(law.scale, -w.real()) * detail::hurwitz_upper(xr, plan.b)
                                       : INFINITY;
    if (next >= 2 * abs_w + 2 && next_bound < 1e-18 * std::max(1.0, std::abs(out.value + law.multiplicity * tail))) {
      out.error_bound = law.multiplicity * (2.0 * next_bound + em_error);
      break;
    }
    if (k > 400) {
      out.error_bound = law.multiplicity * (2.0 * next_bound + em_error);
      break;
    }
    binom *= -(w + static_cast<double>(k)) / static_cast<double>(k + 1);
    sig_pow *= plan.sigma;
  }
  out.binomial_order = k;
  out.value += law.multiplicity * tail;
  if (!(out.error_bound <= tol * std::max(1.0, std::abs(out.value))))
    throw convergence_error("spectral zeta: error bound " + std::to_string(out.error_bound) +
                                " exceeds the tolerance",
                            out.error_bound);
  return out;
}

struct DeterminantValue {
  double value = 0.0;
  double log_value = 0.0;   // -zeta'(0)
  double error_bound = 0.0;  // on log_value
  std::size_t explicit_levels = 0;
  int binomial_order = 0;
};

// d/dw zeta_{Delta+s}(w) at w = 0. At w = 0 every k >= 1 term of the binomial
// tail contributes only through d/dw binom(-w, k) = (-1)^k / k.
inline DeterminantValue spectral_zeta_derivative_at_zero(const SpectrumDescription& spec, double s,
                                                         double tol = 1e-12) {
  const auto& law = spec.law;
  const auto plan = detail::plan_tail(spec, s);
  detail::check_head(spec, plan.levels);
  DeterminantValue out;
  out.explicit_levels = plan.levels;
  double derivative = 0.0;
  for (std::size_t n = 1; n <= plan.levels; ++n) {
    const auto ev = spec.enumerator(n);
    derivative -= ev.multiplicity * std::log(ev.value + s);
  }
  const double sigma = plan.sigma.real();
  const auto h0 = special::hurwitz_zeta(0.0, plan.b);
  double tail = -std::log(law.scale) * h0.value.real() + law.exponent * h0.derivative.real();
  double em_error = (std::abs(std::log(law.scale)) + law.exponent) * h0.error;
  double ratio_pow = 1.0;
  int k = 1;
  for (;; ++k) {
    ratio_pow *= -sigma / law.scale;
    const auto h = special::hurwitz_zeta(law.exponent * k, plan.b);
    const double coeff = ratio_pow / k;
    tail += coeff * h.value.real();
    em_error += std::abs(coeff) * h.error;
    const int next = k + 1;
    const double next_bound = std::pow(std::abs(sigma) / law.scale, next) / next *
                              detail::hurwitz_upper(law.exponent * next, plan.b);
    if (next_bound < 1e-18 || k > 400) {
      out.error_bound = law.multiplicity * (2.0 * next_bound + em_error);
      break;
    }
  }
  out.binomial_order = k;
  derivative += law.multiplicity * tail;
  out.log_value = -derivative;
  if (!(out.error_bound <= tol))
    throw convergence_error("determinant: error bound " + std::to_string(out.error_bound) +
                                " exceeds the tolerance",
                            out.error_bound);
  out.value = std::exp(out.log_value);
  return out;
}

// det'(Delta + s) = exp(-zeta'_{Delta+s}(0)), s > 0.
inline DeterminantValue regularized_det(const SpectrumDescription& spec, double s, double tol = 1e-12) {
  if (!(s > 0)) throw precondition_error("regularized determinant needs s > 0");
  return spectral_zeta_derivative_at_zero(spec, s, tol);
}

// s -> 0+ by linear Richardson extrapolation from s = h and h/2.
inline double regularized_det_limit_at_zero(const SpectrumDescription& spec, double h = 1e-4) {
  const double a = regularized_det(spec, h).value;
  const double b = regularized_det(spec, 0.5 * h).value;
  return 2.0 * b - a;
}

}  // namespace f1zeta
