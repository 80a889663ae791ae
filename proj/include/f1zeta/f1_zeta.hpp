#pragma once

// The refined zeta function of a monoid scheme over F_1,
//
//     zeta_X(s) = prod_{r=0}^R (s - r)^{e_r},   e_r = sum_x T(x) binom(R(x), r) (-1)^{R(x)-r-1},
//
// its even Betti numbers b_{2l} = -e_l and the functional equation
// zeta_X(d - s) = (-1)^chi zeta_X(s) for smooth projective X.

#include <sstream>
#include <string>
#include <vector>

#include "f1zeta/errors.hpp"
#include "f1zeta/powerlog.hpp"
#include "f1zeta/rational.hpp"
#include "f1zeta/scheme.hpp"
#include "f1zeta/zeta_calculus.hpp"

namespace f1zeta {

inline FactoredZeta refined_zeta(const MonoidScheme& scheme) {
  FactoredZeta z;
  for (const auto& x : scheme.points()) {
    const BigInt t = x.torsion_cardinality();
    for (int r = 0; r <= x.rank; ++r) {
      BigInt e = t * binomial(x.rank, r);
      if ((x.rank - r - 1) % 2 != 0) e = -e;
      // stored exponents are negated: (s - r)^{e} is phi_0(s - r)^{-e}
      z.add_factor(r, 0, Rational(-e));
    }
  }
  return z;
}

// The smoothed counting function sum_x T(x) (u - 1)^R(x) as a power-log sum.
inline PowerLogSum counting_polynomial(const MonoidScheme& scheme) {
  const PowerLogSum u_minus_one = PowerLogSum::monomial(1) - PowerLogSum::constant(1);
  PowerLogSum n;
  for (const auto& x : scheme.points())
    n += power(u_minus_one, x.rank).scaled(Rational(x.torsion_cardinality()));
  return n;
}

// Soule's zeta s^{-a_0} (s-1)^{-a_1} ... for N(x) = sum a_j x^j.
inline FactoredZeta soule_zeta(const PowerLogSum& counting) {
  if (!counting.is_pure_power()) throw precondition_error("Soule zeta needs a polynomial");
  FactoredZeta z;
  for (const auto& [k, a] : counting.terms()) {
    if (!is_integer(k.lambda) || k.lambda < 0)
      throw precondition_error("Soule zeta needs a polynomial, found exponent " + k.lambda.str());
    z.add_factor(k.lambda, 0, a);
  }
  return z;
}

struct BettiProfile {
  std::vector<BigInt> values;  // b_{2l}, l = 0..d
  BigInt euler_characteristic = 0;
  bool nonnegative = true;
  bool symmetric = true;  // b_{2l} == b_{2(d-l)}
  std::vector<std::string> warnings;
};

inline BettiProfile betti_profile(const MonoidScheme& scheme) {
  const int d = scheme.dimension();
  BettiProfile profile;
  profile.values.assign(static_cast<std::size_t>(d) + 1, BigInt(0));
  for (const auto& x : scheme.points()) {
    const BigInt t = x.torsion_cardinality();
    for (int l = 0; l <= x.rank; ++l) {
      const BigInt term = binomial(x.rank, l) * t;
      profile.values[static_cast<std::size_t>(l)] += (l + x.rank) % 2 ? BigInt(-term) : term;
    }
  }
  for (int l = 0; l <= d; ++l) {
    const auto& b = profile.values[static_cast<std::size_t>(l)];
    profile.euler_characteristic += b;
    if (b < 0) profile.nonnegative = false;
    if (b != profile.values[static_cast<std::size_t>(d - l)]) profile.symmetric = false;
  }
  if (!scheme.smooth_projective())
    profile.warnings.push_back("scheme not asserted smooth projective; values need not be Betti numbers");
  if (!profile.nonnegative) profile.warnings.push_back("negative values present");
  if (scheme.smooth_projective() && !profile.symmetric)
    profile.warnings.push_back("asserted smooth projective but b_{2l} != b_{2(d-l)}");
  return profile;
}

struct GlobalFeReport {
  bool holds = false;
  BigInt chi = 0;
  int expected_sign = 1;  // (-1)^chi
  int observed_sign = 1;
  std::string details;
};

// zeta(d - s) = (-1)^chi zeta(s), compared as factor multisets.
inline GlobalFeReport global_fe_check(const MonoidScheme& scheme) {
  if (!scheme.smooth_projective())
    throw precondition_error("global functional equation needs a smooth projective scheme");
  const int d = scheme.dimension();
  const BettiProfile betti = betti_profile(scheme);
  const FactoredZeta z = refined_zeta(scheme);
  const SignedZeta reflected = reflect(z, d);
  GlobalFeReport report;
  report.chi = betti.euler_characteristic;
  report.expected_sign = is_odd(report.chi) ? -1 : 1;
  report.observed_sign = reflected.sign;
  report.holds = reflected.zeta == z && reflected.sign == report.expected_sign;
  std::ostringstream os;
  if (report.holds) {
    os << "zeta(" << d << " - s) = " << (report.expected_sign < 0 ? "-" : "") << "zeta(s)";
  } else {
    os << "functional equation fails:";
    for (int l = 0; l <= d; ++l) {
      const auto& a = betti.values[static_cast<std::size_t>(l)];
      const auto& b = betti.values[static_cast<std::size_t>(d - l)];
      if (l <= d - l && a != b) os << " b_" << 2 * l << " = " << a << " != b_" << 2 * (d - l) << " = " << b << ";";
    }
    if (reflected.sign != report.expected_sign) os << " sign mismatch;";
  }
  report.details = os.str();
  return report;
}

}  // namespace f1zeta
