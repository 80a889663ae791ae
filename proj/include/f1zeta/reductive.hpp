#pragma once

// Counting polynomials of split reductive groups,
//
//     N_G(q) = (q - 1)^r q^p sum_l b_{2l} q^l,
//
// with r the rank, p = (d - r)/2 the number of positive roots and b_{2l} the
// Betti numbers of the flag variety G/B, and the functional equations they induce.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "f1zeta/errors.hpp"
#include "f1zeta/powerlog.hpp"
#include "f1zeta/rational.hpp"
#include "f1zeta/zeta_calculus.hpp"

namespace f1zeta {

struct ReductiveGroupData {
  std::string name;
  int rank = 1;
  int dimension = 1;
  int positive_roots = 0;
  std::vector<BigInt> flag_betti{1};

  void validate() const {
    if (rank < 1) throw precondition_error("group rank must be positive");
    if (dimension < 1) throw precondition_error("group dimension must be positive");
    if ((dimension - rank) % 2 != 0 || dimension < rank)
      throw precondition_error("d - r must be even and nonnegative");
    if (positive_roots != (dimension - rank) / 2)
      throw precondition_error("positive roots must equal (d - r)/2 = " +
                               std::to_string((dimension - rank) / 2));
    if (flag_betti.size() != static_cast<std::size_t>(positive_roots) + 1)
      throw precondition_error("need p + 1 flag Betti numbers");
    for (std::size_t l = 0; l < flag_betti.size(); ++l) {
      if (flag_betti[l] < 0) throw precondition_error("flag Betti numbers must be nonnegative");
      if (flag_betti[l] != flag_betti[flag_betti.size() - 1 - l])
        throw precondition_error("flag Betti numbers are not palindromic at l = " + std::to_string(l));
    }
  }

  bool operator==(const ReductiveGroupData&) const = default;
};

inline PowerLogSum group_counting(const ReductiveGroupData& g) {
  g.validate();
  const PowerLogSum u_minus_one = PowerLogSum::monomial(1) - PowerLogSum::constant(1);
  PowerLogSum flag;
  for (std::size_t l = 0; l < g.flag_betti.size(); ++l)
    flag.add_term(static_cast<std::int64_t>(l), 0, Rational(g.flag_betti[l]));
  return power(u_minus_one, g.rank) * PowerLogSum::monomial(g.positive_roots) * flag;
}

// Coefficients of prod_{i=1}^r (1 + q + ... + q^{i-1}).
inline std::vector<BigInt> gaussian_factorial(int r) {
  std::vector<BigInt> poly{1};
  for (int i = 1; i <= r; ++i) {
    std::vector<BigInt> next(poly.size() + static_cast<std::size_t>(i) - 1, BigInt(0));
    for (std::size_t a = 0; a < poly.size(); ++a)
      for (int b = 0; b < i; ++b) next[a + static_cast<std::size_t>(b)] += poly[a];
    poly = std::move(next);
  }
  return poly;
}

inline ReductiveGroupData gl_group_data(int r) {
  if (r < 1) throw precondition_error("GL(r) needs r >= 1");
  ReductiveGroupData g;
  g.name = "GL:" + std::to_string(r);
  g.rank = r;
  g.dimension = r * r;
  g.positive_roots = r * (r - 1) / 2;
  g.flag_betti = gaussian_factorial(r);
  return g;
}

inline ReductiveGroupData gm_power_data(int r) {
  if (r < 1) throw precondition_error("Gm^r needs r >= 1");
  return {"Gm:" + std::to_string(r), r, r, 0, {1}};
}

inline ReductiveGroupData sl2_data() { return {"SL2", 1, 3, 1, {1, 1}}; }

// "GL:r", "Gm:r", "SL2".
inline ReductiveGroupData group_by_name(const std::string& name) {
  auto parse_rank = [&](std::size_t from) {
    const std::string digits = name.substr(from);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 4)
      throw parse_error("bad group rank in '" + name + "'");
    return std::stoi(digits);
  };
  if (name == "SL2" || name == "SL:2") return sl2_data();
  if (name.rfind("GL:", 0) == 0) return gl_group_data(parse_rank(3));
  if (name.rfind("Gm:", 0) == 0) return gm_power_data(parse_rank(3));
  throw parse_error("unknown group '" + name + "' (expected GL:r, Gm:r or SL2)");
}

struct GroupFeReport {
  bool holds = false;
  std::optional<FunctionalEquationWitness> witness;
  FunctionalEquationWitness expected;
  BigInt chi = 0;  // N_G(1)
  ZetaFeReport zeta_report;
  std::string details;
};

inline GroupFeReport group_fe_check(const ReductiveGroupData& g) {
  const PowerLogSum n = group_counting(g);
  GroupFeReport report;
  report.expected = {g.rank % 2 ? -1 : 1, Rational(g.dimension + g.positive_roots)};
  report.chi = num(n.value_at_one());
  report.witness = detect_functional_equation(n, true);
  std::ostringstream os;
  if (!report.witness || !(*report.witness == report.expected)) {
    const std::int64_t center = g.dimension + g.positive_roots;
    for (std::int64_t k = 0; k <= center; ++k) {
      const Rational a = n.coefficient(k);
      const Rational b = n.coefficient(center - k);
      if (a != Rational(report.expected.sign) * b) {
        os << "a_" << k << " = " << a << " but (-1)^r a_" << center - k << " = "
           << Rational(report.expected.sign) * b;
        break;
      }
    }
    if (os.str().empty()) os << "no witness detected";
    report.details = os.str();
    return report;
  }
  report.zeta_report = verify_zeta_fe(n, *report.witness);
  report.holds = report.zeta_report.holds;
  report.details = report.holds ? report.zeta_report.identity : report.zeta_report.details;
  return report;
}

enum class GroupFamily { gm_power, gl };

struct IdentityCheck {
  std::string label;
  bool holds = false;
  std::string lhs;
  std::string rhs;
};

struct KurokawaReport {
  bool holds = true;
  std::vector<IdentityCheck> checks;  // (a), (b), (c)
};

namespace detail {

inline IdentityCheck compare(std::string label, const SignedZeta& lhs, const SignedZeta& rhs) {
  return {std::move(label), lhs == rhs, to_pretty(lhs), to_pretty(rhs)};
}

}  // namespace detail

// Identities (a)-(c) relating N = (1 - u^{-1})^r resp. prod_{i<=r}(1 - u^{-i}) to
// the zeta function of G_m^r resp. GL(r).
inline KurokawaReport kurokawa_identities(int r, GroupFamily family) {
  if (r < 1) throw precondition_error("identities need r >= 1");
  const Rational parity = r % 2 ? -1 : 1;
  PowerLogSum n;
  ReductiveGroupData g;
  Rational shift_a, shift_b, center;
  if (family == GroupFamily::gm_power) {
    n = power(PowerLogSum::constant(1) - PowerLogSum::monomial(-1), r);
    g = gm_power_data(r);
    shift_a = r;
    shift_b = 0;
    center = r;
  } else {
    std::vector<Rational> omegas;
    for (int i = 1; i <= r; ++i) omegas.emplace_back(i);
    n = product_one_minus(omegas);
    g = gl_group_data(r);
    shift_a = r * r;
    shift_b = Rational(r * (r - 1), 2);
    center = Rational(r * (3 * r - 1), 2);
  }
  const FactoredZeta zg = zeta_of(group_counting(g));
  KurokawaReport report;
  report.checks.push_back(detail::compare("(a) zeta_N(s) = zeta_G(s + " + to_compact(shift_a) + ")",
                                          {1, zeta_of(n)}, {1, shift(zg, shift_a)}));
  report.checks.push_back(detail::compare(
      "(b) zeta_N*(s) = zeta_G(s + " + to_compact(shift_b) + ")^" + to_compact(parity),
      {1, zeta_of(dual(n))}, {1, power(shift(zg, shift_b), parity)}));
  report.checks.push_back(detail::compare(
      "(c) zeta_G(" + to_compact(center) + " - s) = zeta_G(s)^" + to_compact(parity), reflect(zg, center),
      {1, power(zg, parity)}));
  for (const auto& c : report.checks) report.holds = report.holds && c.holds;
  return report;
}

}  // namespace f1zeta
