#pragma once

// Factored zeta functions
//
//     zeta(s) = prod phi_m(s - lambda)^e,   phi_0(s) = 1/s,  phi_m(s) = exp((m-1)! s^{-m}),
//
// and the map N -> zeta_N for finite power-log counting functions.
//
// Orientation: a stored m = 0 factor with exponent e is (s - lambda)^{-e}, so
// e > 0 is a pole of order e at lambda and e < 0 a zero of order -e.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "f1zeta/errors.hpp"
#include "f1zeta/powerlog.hpp"
#include "f1zeta/quadrature.hpp"
#include "f1zeta/rational.hpp"
#include "f1zeta/special.hpp"

namespace f1zeta {

class FactoredZeta {
 public:
  using Map = std::map<PowerLogKey, Rational>;

  FactoredZeta() = default;

  void add_factor(const Rational& lambda, int m, const Rational& exponent) {
    if (m < 0) throw precondition_error("factor index m must be nonnegative");
    if (exponent == 0) return;
    auto [it, inserted] = factors_.try_emplace(PowerLogKey{lambda, m}, exponent);
    if (!inserted) {
      it->second += exponent;
      if (it->second == 0) factors_.erase(it);
    }
  }

  const Map& factors() const { return factors_; }
  bool is_constant_one() const { return factors_.empty(); }

  Rational exponent(const Rational& lambda, int m = 0) const {
    auto it = factors_.find(PowerLogKey{lambda, m});
    return it == factors_.end() ? Rational(0) : it->second;
  }

  bool operator==(const FactoredZeta&) const = default;

 private:
  Map factors_;
};

// zeta together with a constant sign, for identities like zeta(w - s) = -zeta(s).
struct SignedZeta {
  int sign = 1;
  FactoredZeta zeta;
  bool operator==(const SignedZeta&) const = default;
};

inline FactoredZeta zeta_of(const PowerLogSum& n) {
  FactoredZeta z;
  for (const auto& [k, c] : n.terms()) z.add_factor(k.lambda, k.log_power, c);
  return z;
}

inline FactoredZeta multiply_zeta(const FactoredZeta& a, const FactoredZeta& b) {
  FactoredZeta out = a;
  for (const auto& [k, e] : b.factors()) out.add_factor(k.lambda, k.log_power, e);
  return out;
}

// zeta(s)^c.
inline FactoredZeta power(const FactoredZeta& z, const Rational& c) {
  FactoredZeta out;
  for (const auto& [k, e] : z.factors()) out.add_factor(k.lambda, k.log_power, e * c);
  return out;
}

// s -> zeta(s + a).
inline FactoredZeta shift(const FactoredZeta& z, const Rational& a) {
  FactoredZeta out;
  for (const auto& [k, e] : z.factors()) out.add_factor(k.lambda - a, k.log_power, e);
  return out;
}

// s -> zeta(omega - s). Uses phi_0(-x) = -phi_0(x) and phi_m(-x) = phi_m(x)^{(-1)^m}.
inline SignedZeta reflect(const FactoredZeta& z, const Rational& omega) {
  SignedZeta out;
  for (const auto& [k, e] : z.factors()) {
    if (k.log_power == 0) {
      if (!is_integer(e))
        throw precondition_error("reflection of (s - " + k.lambda.str() + ")^{" + e.str() +
                                 "} has no canonical sign");
      out.sign *= sign_power(e);
      out.zeta.add_factor(omega - k.lambda, 0, e);
    } else {
      out.zeta.add_factor(omega - k.lambda, k.log_power, k.log_power % 2 ? Rational(-e) : e);
    }
  }
  return out;
}

// m = 0 factors with integral exponent are evaluated by repeated multiplication,
// the rest through principal powers.
inline std::complex<double> evaluate_zeta(const FactoredZeta& z, std::complex<double> s) {
  std::complex<double> acc = 1.0;
  double exp_sum_re = 0.0, exp_sum_im = 0.0;
  for (const auto& [k, e] : z.factors()) {
    const std::complex<double> x = s - to_double(k.lambda);
    if (x == 0.0) {
      if (k.log_power > 0)
        throw singularity_error("essential singularity of phi_" + std::to_string(k.log_power) +
                                " at s = " + k.lambda.str());
      if (e > 0)
        throw singularity_error("pole of order " + e.str() + " at s = " + k.lambda.str());
      return 0.0;
    }
    if (k.log_power == 0) {
      if (is_integer(e) && abs(num(e)) < 64) {
        const int n = num(e).convert_to<int>();
        std::complex<double> base = n > 0 ? 1.0 / x : x;
        for (int i = 0; i < std::abs(n); ++i) acc *= base;
      } else {
        acc *= std::exp(-to_double(e) * std::log(x));
      }
    } else {
      const std::complex<double> v = to_double(e) * std::tgamma(static_cast<double>(k.log_power)) *
                                     std::pow(x, -static_cast<double>(k.log_power));
      exp_sum_re += v.real();
      exp_sum_im += v.imag();
    }
  }
  return acc * std::exp(std::complex<double>(exp_sum_re, exp_sum_im));
}

inline std::complex<double> evaluate_zeta(const SignedZeta& z, std::complex<double> s) {
  return static_cast<double>(z.sign) * evaluate_zeta(z.zeta, s);
}

// Human-readable form, e.g. "(s-3)(s-2)/((s-4)(s-1))", "s/(s-1)", "exp(1/s)".
inline std::string to_pretty(const FactoredZeta& z) {
  auto linear = [](const Rational& lambda) -> std::string {
    if (lambda == 0) return "s";
    const bool neg = lambda < 0;
    return "(s" + std::string(neg ? "+" : "-") + to_compact(neg ? Rational(-lambda) : lambda) + ")";
  };
  auto with_power = [](std::string base, const Rational& e) {
    if (e == 1) return base;
    return base + "^" + (is_integer(e) ? to_compact(e) : "{" + to_compact(e) + "}");
  };
  std::vector<std::pair<Rational, Rational>> zeros, poles;  // (lambda, order)
  std::vector<std::string> exps;
  for (const auto& [k, e] : z.factors()) {
    if (k.log_power == 0) {
      if (e < 0)
        zeros.emplace_back(k.lambda, -e);
      else
        poles.emplace_back(k.lambda, e);
    } else {
      // phi_m(s - lambda)^e = exp(e (m-1)! / (s - lambda)^m)
      const Rational coeff = e * Rational(factorial(k.log_power - 1));
      std::string denom = with_power(linear(k.lambda), k.log_power);
      exps.push_back("exp(" + to_compact(coeff) + "/" + denom + ")");
    }
  }
  auto descending = [](const auto& a, const auto& b) { return a.first > b.first; };
  std::sort(zeros.begin(), zeros.end(), descending);
  std::sort(poles.begin(), poles.end(), descending);
  std::string top;
  for (const auto& [lambda, order] : zeros) top += with_power(linear(lambda), order);
  for (const auto& e : exps) top += (top.empty() ? "" : "*") + e;
  if (top.empty()) top = "1";
  if (poles.empty()) return top;
  std::string bottom;
  for (const auto& [lambda, order] : poles) bottom += with_power(linear(lambda), order);
  return top + "/" + (poles.size() == 1 ? bottom : "(" + bottom + ")");
}

inline std::string to_pretty(const SignedZeta& z) {
  return (z.sign < 0 ? "-" : "") + to_pretty(z.zeta);
}

// ---------------------------------------------------------------------------

struct EpsilonReport {
  int sign = 1;                    // (-1)^{N(1)}
  double numeric_residual = 0.0;   // max |zeta_{N*}(-s)/zeta_N(s) - sign| over the samples
  std::array<std::complex<double>, 3> samples{};
};

inline const std::array<std::complex<double>, 3>& epsilon_sample_points() {
  static const std::array<std::complex<double>, 3> pts = {
      std::complex<double>(0.37, 0.91), std::complex<double>(-1.13, 0.53),
      std::complex<double>(2.71, -0.67)};
  return pts;
}

inline EpsilonReport epsilon_factor(const PowerLogSum& n) {
  const Rational at_one = n.value_at_one();
  if (!is_integer(at_one))
    throw precondition_error("epsilon factor needs integral N(1), got " + at_one.str());
  EpsilonReport report;
  report.sign = sign_power(at_one);
  report.samples = epsilon_sample_points();
  const FactoredZeta z = zeta_of(n);
  const FactoredZeta zd = zeta_of(dual(n));
  for (const auto& s : report.samples) {
    const auto ratio = evaluate_zeta(zd, -s) / evaluate_zeta(z, s);
    report.numeric_residual =
        std::max(report.numeric_residual, std::abs(ratio - static_cast<double>(report.sign)));
  }
  return report;
}

struct ZetaFeReport {
  bool holds = false;
  int expected_sign = 1;  // (-1)^{N(1)}
  int observed_sign = 1;
  std::string identity;  // e.g. "zeta(5 - s) = zeta(s)^1"
  std::string details;
};

// zeta_N(omega - s) = (-1)^{N(1)} zeta_N(s)^c, checked on factored data.
inline ZetaFeReport verify_zeta_fe(const PowerLogSum& n, const FunctionalEquationWitness& w) {
  if (!satisfies_functional_equation(n, w))
    throw precondition_error("(c, omega) = (" + std::to_string(w.sign) + ", " + w.omega.str() +
                             ") is not a functional-equation witness of N");
  ZetaFeReport report;
  const Rational at_one = n.value_at_one();
  report.expected_sign = sign_power(at_one);
  const FactoredZeta z = zeta_of(n);
  const SignedZeta left = reflect(z, w.omega);
  const FactoredZeta right = power(z, w.sign);
  report.observed_sign = left.sign;
  std::ostringstream id;
  id << "zeta(" << to_compact(w.omega) << " - s) = " << (report.expected_sign < 0 ? "-" : "")
     << "zeta(s)^" << w.sign;
  report.identity = id.str();
  std::ostringstream det;
  for (const auto& [k, e] : left.zeta.factors()) {
    if (right.exponent(k.lambda, k.log_power) != e) {
      det << "factor (lambda=" << k.lambda << ", m=" << k.log_power << ") has exponent " << e
          << " on the left but " << right.exponent(k.lambda, k.log_power) << " on the right";
      break;
    }
  }
  if (det.str().empty())
    for (const auto& [k, e] : right.factors())
      if (left.zeta.exponent(k.lambda, k.log_power) != e) {
        det << "factor (lambda=" << k.lambda << ", m=" << k.log_power << ") missing on the left";
        break;
      }
  if (det.str().empty() && left.sign != report.expected_sign) det << "sign mismatch";
  report.holds = det.str().empty();
  report.details = report.holds ? "identity holds" : det.str();
  return report;
}

// ---------------------------------------------------------------------------

enum class IntegralRegion {
  upper,  // int_1^inf  N(u) / (u^{s+1} log u) du,  Re(s) > deg N;  exp(-I) = zeta_N(s)^{-1}
  lower,  // int_0^1    N(u) / (u^{s+1} log u) du,  Re(s) < min exponent;  exp(-I) = zeta_{N*}(-s)
};

struct IntegralValue {
  std::complex<double> value;
  double error = 0.0;
};

inline IntegralValue log_zeta_integral_form(const PowerLogSum& n, std::complex<double> s,
                                            IntegralRegion region, double rel_tol = 1e-12) {
  if (n.value_at_one() != 0)
    throw precondition_error("the integral needs N(1) = 0 (non-integrable at u = 1), N(1) = " +
                             n.value_at_one().str());
  if (n.is_zero()) return {0.0, 0.0};
  const bool upper = region == IntegralRegion::upper;
  if (upper) {
    const Rational deg = n.degree();
    if (!(s.real() > to_double(deg)))
      throw precondition_error("integral over (1, inf) needs Re(s) > deg N = " + deg.str());
  } else {
    const Rational low = n.min_exponent();
    if (!(s.real() < to_double(low)))
      throw precondition_error("integral over (0, 1) needs Re(s) < min exponent = " + low.str());
  }
  // With u = e^{+-t}: integrand g(t) = N(e^{+-t}) e^{-+st} / (+-t) on (0, inf).
  struct Term {
    double lambda;
    int m;
    double c;
  };
  std::vector<Term> terms;
  for (const auto& [k, c] : n.terms()) terms.push_back({to_double(k.lambda), k.log_power, to_double(c)});
  const double dir = upper ? 1.0 : -1.0;
  // Since the constant parts cancel (N(1) = 0), pure powers enter as c (e^{rate t} - 1).
  auto integrand = [&](double t) -> std::complex<double> {
    std::complex<double> acc = 0.0;
    for (const auto& term : terms) {
      const std::complex<double> rate = dir * (term.lambda - s);
      if (term.m == 0) {
        acc += term.c * special::expm1(rate * t);
      } else {
        const double sign = (dir < 0 && term.m % 2) ? -1.0 : 1.0;
        acc += sign * term.c * std::exp(rate * t + static_cast<double>(term.m) * std::log(t));
      }
    }
    return acc / (dir * t);
  };
  auto head = quadrature::tanh_sinh(integrand, 0.0, 1.0, rel_tol);
  auto tail = quadrature::exp_sinh(integrand, 1.0, rel_tol);
  return {head.value + tail.value, head.error + tail.error};
}

}  // namespace f1zeta
