#pragma once

// Local zeta functions Z(p, T) = exp(sum_n #X(F_{p^n}) T^n / n) of a monoid
// scheme, the torsion-smoothed factorization
//
//     Z~(p, T) = prod_r (1 - p^r T)^{e_r},
//     e_r = sum_x T(x) binom(R(x), r) (-1)^{R(x) - r - 1},
//
// its functional equation under T -> 1/(p^d T), and the limit p -> 1.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "f1zeta/arith.hpp"
#include "f1zeta/errors.hpp"
#include "f1zeta/rational.hpp"
#include "f1zeta/scheme.hpp"
#include "f1zeta/special.hpp"

namespace f1zeta {

struct TruncatedSeries {
  std::vector<Rational> coefficients;  // T^0 .. T^L
  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  bool operator==(const TruncatedSeries&) const = default;
};

// exp(S) for a series S without constant term, given through
// n * [T^n] S = weights[n]; uses n z_n = sum_{k=1}^n weights[k] z_{n-k}.
inline TruncatedSeries exp_series_from_log_derivative(const std::vector<Rational>& weights, int order) {
  TruncatedSeries z;
  z.coefficients.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  z.coefficients[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += weights[static_cast<std::size_t>(k)] * z.coefficients[static_cast<std::size_t>(n - k)];
    z.coefficients[static_cast<std::size_t>(n)] = acc / n;
  }
  return z;
}

inline TruncatedSeries local_weil_series(const MonoidScheme& scheme, std::int64_t p, int order) {
  if (order < 1) throw precondition_error("truncation order must be at least 1");
  if (!arith::is_prime(p)) throw precondition_error(std::to_string(p) + " is not prime");
  std::vector<Rational> counts(static_cast<std::size_t>(order) + 1, Rational(0));
  BigInt q = 1;
  for (int n = 1; n <= order; ++n) {
    q *= p;
    counts[static_cast<std::size_t>(n)] = Rational(exact_count(scheme, q));
  }
  return exp_series_from_log_derivative(counts, order);
}

// prod_r (1 - p^r T)^{e_r}; the exponents do not depend on p.
struct LocalFactoredZeta {
  std::map<int, BigInt> exponents;  // r -> e_r, zeros removed
  bool operator==(const LocalFactoredZeta&) const = default;
};

inline LocalFactoredZeta smoothed_local_zeta(const MonoidScheme& scheme) {
  LocalFactoredZeta z;
  for (const auto& x : scheme.points()) {
    const BigInt t = x.torsion_cardinality();
    for (int r = 0; r <= x.rank; ++r) {
      BigInt e = t * binomial(x.rank, r);
      if ((x.rank - r - 1) % 2 != 0) e = -e;
      z.exponents[r] += e;
    }
  }
  std::erase_if(z.exponents, [](const auto& kv) { return kv.second == 0; });
  return z;
}

namespace detail {

inline std::complex<double> int_power(std::complex<double> base, BigInt e) {
  if (e < 0) {
    base = 1.0 / base;
    e = -e;
  }
  std::complex<double> r = 1.0;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// 1 - p^{r-s}, accurate also for p close to 1.
inline std::complex<double> one_minus_power(double log_p, int r, std::complex<double> s) {
  return -special::expm1((static_cast<double>(r) - s) * log_p);
}

}  // namespace detail

// Z~(p, p^{-s}).
inline std::complex<double> evaluate_local(const LocalFactoredZeta& z, double p, std::complex<double> s) {
  if (!(p > 1)) throw precondition_error("local zeta needs p > 1");
  const double log_p = std::log1p(p - 1.0);
  std::complex<double> acc = 1.0;
  for (const auto& [r, e] : z.exponents) {
    const auto base = detail::one_minus_power(log_p, r, s);
    if (base == 0.0)
      throw singularity_error("factor (1 - p^{" + std::to_string(r) + "-s})^" + e.str() +
                              " vanishes at this s");
    acc *= detail::int_power(base, e);
  }
  return acc;
}

// Taylor expansion of the factored form at T = 0 for integral p.
inline TruncatedSeries expand_local(const LocalFactoredZeta& z, std::int64_t p, int order) {
  if (order < 1) throw precondition_error("truncation order must be at least 1");
  // log Z = -sum_r e_r sum_n (p^r T)^n / n, so n [T^n] log Z = -sum_r e_r p^{rn}.
  std::vector<Rational> weights(static_cast<std::size_t>(order) + 1, Rational(0));
  for (const auto& [r, e] : z.exponents) {
    BigInt pr = pow(BigInt(p), static_cast<std::uint64_t>(r));
    BigInt pw = 1;
    for (int n = 1; n <= order; ++n) {
      pw *= pr;
      weights[static_cast<std::size_t>(n)] -= Rational(e * pw);
    }
  }
  return exp_series_from_log_derivative(weights, order);
}

// N = sum_x sum_r T(x) binom(R(x), r) (-1)^{r - R(x)}.
inline BigInt pole_order(const MonoidScheme& scheme) {
  BigInt n = 0;
  for (const auto& x : scheme.points()) {
    const BigInt t = x.torsion_cardinality();
    for (int r = 0; r <= x.rank; ++r) {
      const BigInt term = t * binomial(x.rank, r);
      n += (x.rank - r) % 2 ? BigInt(-term) : term;
    }
  }
  return n;
}

inline std::vector<double> default_p_sequence() {
  std::vector<double> ps;
  for (int k = 1; k <= 6; ++k) ps.push_back(1.0 + std::pow(10.0, -k));
  return ps;
}

// (p-1)^N Z~(p, p^{-s}) along a sequence p -> 1+. Since sum_r e_r = -N the
// power of (p-1) is distributed over the factors.
inline std::vector<std::complex<double>> limit_p_to_1(const MonoidScheme& scheme, std::complex<double> s,
                                                      const std::vector<double>& p_sequence) {
  const LocalFactoredZeta z = smoothed_local_zeta(scheme);
  BigInt exponent_sum = 0;
  for (const auto& [r, e] : z.exponents) exponent_sum += e;
  if (exponent_sum != -pole_order(scheme))
    throw error("internal: exponent sum does not match the pole order");
  for (const auto& [r, e] : z.exponents)
    if (e > 0 && s == std::complex<double>(r, 0.0))
      throw singularity_error("s = " + std::to_string(r) + " is a pole of the limit (exponent " +
                              e.str() + ")");
  std::vector<std::complex<double>> out;
  double previous = 0;
  for (std::size_t i = 0; i < p_sequence.size(); ++i) {
    const double p = p_sequence[i];
    if (!(p > 1)) throw precondition_error("p-sequence entries must exceed 1");
    if (i > 0 && !(p < previous)) throw precondition_error("p-sequence must be strictly decreasing");
    previous = p;
    const double eps = p - 1.0;
    const double log_p = std::log1p(eps);
    std::complex<double> acc = 1.0;
    for (const auto& [r, e] : z.exponents) {
      const auto base = detail::one_minus_power(log_p, r, s);
      if (base == 0.0)
        throw singularity_error("factor (1 - p^{" + std::to_string(r) + "-s}) vanishes");
      acc *= detail::int_power(base / eps, e);
    }
    out.push_back(acc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact rational functions of the shape  constant * T^k * prod_a (1 - a T)^{e_a}.

struct LocalRationalFunction {
  Rational constant = 1;
  std::int64_t t_power = 0;
  std::map<Rational, BigInt> factors;  // a -> e_a, a != 0, zeros removed

  static LocalRationalFunction from(const LocalFactoredZeta& z, std::int64_t p) {
    LocalRationalFunction f;
    for (const auto& [r, e] : z.exponents) f.factors[Rational(pow(BigInt(p), static_cast<std::uint64_t>(r)))] += e;
    f.normalize();
    return f;
  }

  void normalize() {
    std::erase_if(factors, [](const auto& kv) { return kv.second == 0; });
  }

  // f(1 / (c T)) as a new function of T.
  LocalRationalFunction substitute_reciprocal(const Rational& c) const {
    if (c == 0) throw precondition_error("substitution T -> 1/(0 T)");
    LocalRationalFunction g;
    g.constant = constant * pow(c, -t_power);
    g.t_power = -t_power;
    for (const auto& [a, e] : factors) {
      // 1 - a/(cT) = (-a/c) T^{-1} (1 - (c/a) T)
      const auto ei = e.convert_to<std::int64_t>();
      g.constant *= pow(Rational(-a / c), ei);
      g.t_power -= ei;
      g.factors[c / a] += e;
    }
    g.normalize();
    return g;
  }

  LocalRationalFunction squared() const {
    LocalRationalFunction g = *this;
    g.constant *= constant;
    g.t_power *= 2;
    for (auto& [a, e] : g.factors) e *= 2;
    return g;
  }

  std::complex<double> evaluate(std::complex<double> t) const {
    std::complex<double> acc = to_double(constant) * std::pow(t, static_cast<double>(t_power));
    for (const auto& [a, e] : factors) acc *= detail::int_power(1.0 - to_double(a) * t, e);
    return acc;
  }

  std::string str() const {
    std::ostringstream os;
    os << to_compact(constant);
    if (t_power) os << "*T^" << t_power;
    for (const auto& [a, e] : factors) os << "*(1-" << to_compact(a) << "T)^" << e.str();
    return os.str();
  }

  bool operator==(const LocalRationalFunction&) const = default;
};

struct LocalFeReport {
  bool holds = false;
  BigInt chi = 0;
  bool squared_form = false;  // d*chi odd: identity checked after squaring
  std::optional<int> numeric_sign;
  std::string lhs;
  std::string rhs;
  std::string details;
};

// Z(p, 1/(p^d T)) = (-1)^chi p^{d chi / 2} T^chi Z(p, T) on the smoothed local zeta.
inline LocalFeReport local_fe_check(const MonoidScheme& scheme, std::int64_t p) {
  if (!scheme.smooth_projective())
    throw precondition_error("local functional equation needs a smooth projective scheme");
  if (!arith::is_prime(p)) throw precondition_error(std::to_string(p) + " is not prime");
  const LocalFactoredZeta z = smoothed_local_zeta(scheme);
  const auto zt = LocalRationalFunction::from(z, p);
  const int d = scheme.dimension();
  LocalFeReport report;
  for (const auto& [r, e] : z.exponents) report.chi -= e;
  const auto chi = report.chi.convert_to<std::int64_t>();
  const Rational pd = pow(Rational(p), std::int64_t{d});
  LocalRationalFunction lhs = zt.substitute_reciprocal(pd);
  LocalRationalFunction rhs = zt;
  rhs.t_power += chi;
  const int sign = chi % 2 ? -1 : 1;
  const std::int64_t dchi = d * chi;
  report.squared_form = dchi % 2 != 0;
  if (!report.squared_form) {
    rhs.constant *= sign * pow(Rational(p), dchi / 2);
  } else {
    rhs = rhs.squared();
    rhs.constant *= pow(Rational(p), dchi);
    lhs = lhs.squared();
    // sign from one evaluation at a generic point
    const std::complex<double> t0(0.3183098861837907 / std::pow(static_cast<double>(p), 0.5 * d), 0.0);
    const auto left = zt.substitute_reciprocal(pd).evaluate(t0);
    auto right = zt.evaluate(t0) * std::pow(t0, static_cast<double>(chi)) *
                 std::pow(static_cast<double>(p), 0.5 * static_cast<double>(dchi));
    const double ratio = (left / right).real();
    report.numeric_sign = ratio < 0 ? -1 : 1;
  }
  report.lhs = lhs.str();
  report.rhs = rhs.str();
  report.holds = lhs == rhs && (!report.numeric_sign || *report.numeric_sign == sign);
  if (!report.holds) {
    std::ostringstream os;
    if (lhs.constant != rhs.constant) os << "constant " << lhs.constant << " != " << rhs.constant << "; ";
    if (lhs.t_power != rhs.t_power) os << "T-power " << lhs.t_power << " != " << rhs.t_power << "; ";
    for (const auto& [a, e] : lhs.factors) {
      auto it = rhs.factors.find(a);
      if (it == rhs.factors.end() || it->second != e)
        os << "(1-" << a << "T)^" << e << " unmatched; ";
    }
    for (const auto& [a, e] : rhs.factors)
      if (!lhs.factors.count(a)) os << "(1-" << a << "T)^" << e << " missing on the left; ";
    if (report.numeric_sign && *report.numeric_sign != sign) os << "sign mismatch; ";
    report.details = os.str();
  } else {
    report.details = "identity holds";
  }
  return report;
}

}  // namespace f1zeta
