#pragma once

// Command-line front end. run() is separate from main() so tests can drive it
// with captured streams.
//
// Exit codes: 0 ok, 1 internal error, 2 parse error, 3 precondition violated,
// 4 identity check failed, 5 numeric tolerance not met.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "f1zeta/errors.hpp"
#include "f1zeta/f1_zeta.hpp"
#include "f1zeta/io.hpp"
#include "f1zeta/powerlog.hpp"
#include "f1zeta/rational.hpp"
#include "f1zeta/reductive.hpp"
#include "f1zeta/regularize.hpp"
#include "f1zeta/scheme.hpp"
#include "f1zeta/weil_local.hpp"
#include "f1zeta/zeta_calculus.hpp"

namespace f1zeta::cli {

enum exit_code : int { ok = 0, internal = 1, parse = 2, precondition = 3, identity = 4, tolerance = 5 };

inline constexpr const char* tolerance_env = "F1ZETA_TOL";

enum class Format { pretty, records };

struct RunConfig {
  std::string command;
  std::optional<std::string> scheme, powers, group, spectrum, q, p, s, w;
  std::optional<std::int64_t> terms, torsion;
  std::optional<double> tol;
  Format format = Format::pretty;
};

// a check that did not hold; carries the exit code
struct check_failed : error {
  int code;
  check_failed(int c, const std::string& what) : error(what), code(c) {}
};

namespace detail {

inline double default_tolerance(double fallback) {
  if (const char* env = std::getenv(tolerance_env); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0))
      throw parse_error(std::string(tolerance_env) + " must be a positive number, got '" + env + "'");
    return v;
  }
  return fallback;
}

inline double tolerance(const RunConfig& c, double fallback) {
  if (c.tol) return *c.tol;
  return default_tolerance(fallback);
}

// --scheme accepts a JSON file or one of the built-ins "point", "P:n", "Gm:r".
inline MonoidScheme load_scheme(const std::string& spec) {
  if (std::filesystem::exists(spec)) return io::load_scheme(spec);
  static const std::regex builtin(R"((P|Gm):(\d{1,2}))");
  std::smatch m;
  if (spec == "point") return schemes::f1_point();
  if (std::regex_match(spec, m, builtin)) {
    const int n = std::stoi(m[2]);
    return m[1] == "P" ? schemes::projective_space(n) : schemes::torus(n);
  }
  throw parse_error("no scheme file '" + spec + "' (built-ins: point, P:n, Gm:r)");
}

inline PowerLogSum load_powers(const std::string& spec) {
  if (std::filesystem::exists(spec)) return io::powers_from_json(io::parse_json(io::read_file(spec), spec));
  return parse_expression(spec);
}

inline ReductiveGroupData load_group(const std::string& spec) {
  if (std::filesystem::exists(spec)) return io::group_from_json(io::parse_json(io::read_file(spec), spec));
  return group_by_name(spec);
}

inline std::int64_t parse_int(const std::string& text, const std::string& what) {
  const Rational r = parse_rational(text);
  if (!is_integer(r)) throw parse_error(what + " must be an integer, got '" + text + "'");
  return to_int64(r);
}

template <class T>
const T& need(const std::optional<T>& v, const char* flag, const std::string& command) {
  if (!v) throw parse_error(command + " needs " + flag);
  return *v;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string fmt(double x) { return io::format_double(x); }
inline std::string fmt(std::complex<double> z) { return io::format_complex(z); }

}  // namespace detail

// ---------------------------------------------------------------------------

inline int cmd_count(const RunConfig& c, std::ostream& out) {
  const MonoidScheme x = detail::load_scheme(detail::need(c.scheme, "--scheme", c.command));
  const BigInt q(detail::parse_int(detail::need(c.q, "--q", c.command), "--q"));
  if (q < 2) throw precondition_error("q must be at least 2");
  if (arith::factor(q.convert_to<std::int64_t>()).size() != 1)
    throw precondition_error(q.str() + " is not a prime power");
  const BigInt n = exact_count(x, q);
  if (c.format == Format::records)
    out << "q\t" << q << "\ncount\t" << n << "\nsmoothed\t" << to_fraction(smoothed_count(x, Rational(q))) << "\n";
  else
    out << n << "\n";
  return ok;
}

inline void print_zeta_records(const FactoredZeta& z, std::ostream& out) {
  for (const auto& [k, e] : z.factors())
    out << to_fraction(k.lambda) << "\t" << k.log_power << "\t" << to_fraction(e) << "\n";
}

inline int cmd_zeta(const RunConfig& c, std::ostream& out) {
  const int sources = !!c.scheme + !!c.group + !!c.powers;
  if (sources != 1) throw parse_error("zeta needs exactly one of --scheme, --group, --powers");
  std::optional<PowerLogSum> counting;
  FactoredZeta z;
  std::optional<MonoidScheme> scheme;
  if (c.scheme) {
    scheme = detail::load_scheme(*c.scheme);
    z = refined_zeta(*scheme);
  } else {
    counting = c.group ? group_counting(detail::load_group(*c.group)) : detail::load_powers(*c.powers);
    z = zeta_of(*counting);
  }

  if (c.format == Format::records) {
    print_zeta_records(z, out);
  } else {
    out << to_pretty(z) << "\n";
    if (scheme) {
      const BettiProfile betti = betti_profile(*scheme);
      out << "r\te_r\tb_2r\n";
      for (std::size_t r = 0; r < betti.values.size(); ++r)
        out << r << "\t" << -betti.values[r] << "\t" << betti.values[r] << "\n";
      for (const auto& w : betti.warnings) out << "warning: " << w << "\n";
    }
  }

  if (c.s) {
    const auto s = io::parse_complex(*c.s);
    if (c.w) {
      // two-variable zeta Z_N(w, s): closed form, cross-checked by quadrature
      if (!counting) counting = counting_polynomial(*scheme);
      const auto w = io::parse_complex(*c.w);
      const auto closed = two_variable_zeta_closed(*counting, w, s);
      const auto numeric = two_variable_zeta_numeric(*counting, w, s);
      const double rel = std::abs(numeric.value - closed) / std::max(std::abs(closed), 1e-300);
      out << "Z(w,s)\t" << detail::fmt(closed) << "\nquadrature\t" << detail::fmt(numeric.value)
          << "\nrelative_difference\t" << detail::fmt(rel) << "\n";
      if (rel > detail::tolerance(c, 1e-8)) throw check_failed(tolerance, "quadrature disagrees with closed form");
    } else {
      out << "zeta(s)\t" << detail::fmt(evaluate_zeta(z, s)) << "\n";
    }
  }
  return ok;
}

inline int cmd_fe_check(const RunConfig& c, std::ostream& out) {
  const int sources = !!c.scheme + !!c.group + !!c.powers;
  if (sources != 1) throw parse_error("fe-check needs exactly one of --scheme, --group, --powers");
  bool holds = true;
  if (c.scheme) {
    const MonoidScheme x = detail::load_scheme(*c.scheme);
    const GlobalFeReport g = global_fe_check(x);
    out << "global\t" << detail::yes_no(g.holds) << "\nchi\t" << g.chi << "\nsign\t" << g.expected_sign
        << "\ndetails\t" << g.details << "\n";
    holds = g.holds;
    if (c.p) {
      const LocalFeReport l = local_fe_check(x, detail::parse_int(*c.p, "--p"));
      out << "local\t" << detail::yes_no(l.holds) << "\nsquared_form\t" << detail::yes_no(l.squared_form) << "\n";
      if (l.numeric_sign) out << "numeric_sign\t" << *l.numeric_sign << "\n";
      out << "lhs\t" << l.lhs << "\nrhs\t" << l.rhs << "\n";
      if (!l.holds) out << "details\t" << l.details << "\n";
      holds = holds && l.holds;
    }
  } else if (c.group) {
    const GroupFeReport g = group_fe_check(detail::load_group(*c.group));
    out << "holds\t" << detail::yes_no(g.holds) << "\nexpected_witness\t" << g.expected.sign << "\t"
        << to_fraction(g.expected.omega) << "\nchi\t" << g.chi << "\ndetails\t" << g.details << "\n";
    holds = g.holds;
  } else {
    const PowerLogSum n = detail::load_powers(*c.powers);
    const auto w = detect_functional_equation(n, false);
    if (!w) {
      out << "witness\tnone\n";
      throw check_failed(identity, "N satisfies no functional equation N* = c u^{-omega} N");
    }
    const ZetaFeReport r = verify_zeta_fe(n, *w);
    out << "witness\t" << w->sign << "\t" << to_fraction(w->omega) << "\nholds\t" << detail::yes_no(r.holds)
        << "\nidentity\t" << r.identity << "\ndetails\t" << r.details << "\n";
    holds = r.holds;
  }
  if (!holds) throw check_failed(identity, "functional equation does not hold");
  return ok;
}

inline int cmd_local(const RunConfig& c, std::ostream& out) {
  const MonoidScheme x = detail::load_scheme(detail::need(c.scheme, "--scheme", c.command));
  const std::int64_t p = detail::parse_int(detail::need(c.p, "--p", c.command), "--p");
  const int order = static_cast<int>(c.terms.value_or(8));
  const TruncatedSeries series = local_weil_series(x, p, order);
  if (c.format == Format::pretty) {
    const LocalFactoredZeta z = smoothed_local_zeta(x);
    out << "smoothed\t" << LocalRationalFunction::from(z, p).str() << "\npole_order\t" << pole_order(x) << "\n";
  }
  for (std::size_t n = 0; n < series.coefficients.size(); ++n)
    out << n << "\t" << to_fraction(series.coefficients[n]) << "\n";
  return ok;
}

inline int cmd_limit(const RunConfig& c, std::ostream& out) {
  const MonoidScheme x = detail::load_scheme(detail::need(c.scheme, "--scheme", c.command));
  const auto s = io::parse_complex(detail::need(c.s, "--s", c.command));
  std::vector<double> ps = default_p_sequence();
  if (c.p) ps = {to_double(parse_rational(*c.p))};
  const auto values = limit_p_to_1(x, s, ps);
  const auto target = evaluate_zeta(refined_zeta(x), s);
  out << "pole_order\t" << pole_order(x) << "\nzeta(s)\t" << detail::fmt(target) << "\n";
  for (std::size_t i = 0; i < values.size(); ++i)
    out << detail::fmt(ps[i]) << "\t" << detail::fmt(values[i]) << "\t" << detail::fmt(std::abs(values[i] - target))
        << "\n";
  if (std::abs(values.back() - target) > detail::tolerance(c, 1e-4))
    throw check_failed(tolerance, "limit not within tolerance at the last p");
  return ok;
}

inline int cmd_dual(const RunConfig& c, std::ostream& out) {
  const PowerLogSum d = dual(detail::load_powers(detail::need(c.powers, "--powers", c.command)));
  if (c.format == Format::records)
    out << io::powers_to_json(d).dump() << "\n";
  else
    out << to_expression(d) << "\n";
  return ok;
}

inline int cmd_epsilon(const RunConfig& c, std::ostream& out) {
  const PowerLogSum n = detail::load_powers(detail::need(c.powers, "--powers", c.command));
  const EpsilonReport r = epsilon_factor(n);
  if (c.format == Format::records) {
    out << "sign\t" << r.sign << "\nresidual\t" << detail::fmt(r.numeric_residual) << "\n";
  } else {
    out << r.sign << "\n";
  }
  if (r.numeric_residual > detail::tolerance(c, 1e-9))
    throw check_failed(tolerance, "numeric residual " + detail::fmt(r.numeric_residual) + " exceeds tolerance");
  return ok;
}

inline int cmd_group(const RunConfig& c, std::ostream& out) {
  const ReductiveGroupData g = detail::load_group(detail::need(c.group, "--group", c.command));
  const PowerLogSum n = group_counting(g);
  const GroupFeReport fe = group_fe_check(g);
  out << "name\t" << g.name << "\nN(q)\t" << to_expression(n) << "\nzeta\t" << to_pretty(zeta_of(n))
      << "\nfe\t" << detail::yes_no(fe.holds) << "\t" << fe.details << "\n";
  bool holds = fe.holds;
  static const std::regex family(R"((GL|Gm):(\d+))");
  std::smatch m;
  if (std::regex_match(g.name, m, family)) {
    const KurokawaReport k =
        kurokawa_identities(std::stoi(m[2]), m[1] == "GL" ? GroupFamily::gl : GroupFamily::gm_power);
    for (const auto& id : k.checks)
      out << "identity\t" << detail::yes_no(id.holds) << "\t" << id.label << "\t" << id.lhs << "\t" << id.rhs << "\n";
    holds = holds && k.holds;
  }
  if (!holds) throw check_failed(identity, "group identities fail");
  return ok;
}

inline int cmd_regdet(const RunConfig& c, std::ostream& out) {
  const SpectrumDescription spec = spectra::by_name(c.spectrum.value_or("circle"));
  const auto s = io::parse_complex(detail::need(c.s, "--s", c.command));
  const double tol = detail::tolerance(c, 1e-10);
  if (c.w) {
    const SpectralValue v = spectral_zeta(spec, io::parse_complex(*c.w), s, tol);
    out << "zeta(w,s)\t" << detail::fmt(v.value) << "\nerror_bound\t" << detail::fmt(v.error_bound) << "\n";
    return ok;
  }
  if (s.imag() != 0.0) throw precondition_error("regdet takes a real --s");
  if (s.real() == 0.0) {
    out << "det'(0+)\t" << detail::fmt(regularized_det_limit_at_zero(spec)) << "\n";
    return ok;
  }
  const DeterminantValue d = regularized_det(spec, s.real(), std::min(tol, 1e-12));
  out << "det\t" << detail::fmt(d.value) << "\nlog_det\t" << detail::fmt(d.log_value) << "\nerror_bound\t"
      << detail::fmt(d.error_bound) << "\n";
  if (d.error_bound > tol * std::max(1.0, std::abs(d.log_value)))
    throw check_failed(tolerance, "determinant error bound exceeds tolerance");
  return ok;
}

inline int cmd_fourier(const RunConfig& c, std::ostream& out) {
  const std::int64_t p = detail::parse_int(detail::need(c.p, "--p", c.command), "--p");
  const double tol = detail::tolerance(c, 1e-10);
  if (c.torsion) {
    const std::int64_t t = *c.torsion;
    if (t < 2) throw precondition_error("--t must be at least 2");
    const std::int64_t n0 = gcd_sequence_period(t, p);
    const auto coeff = gcd_fourier_coefficients(t, p, n0);
    out << "period\t" << n0 << "\n";
    for (std::size_t nu = 0; nu < coeff.size(); ++nu) out << "c\t" << nu + 1 << "\t" << detail::fmt(coeff[nu]) << "\n";
    const auto d = gcd_inner_fourier(t);
    for (std::size_t a = 0; a < d.size(); ++a) out << "d\t" << a + 1 << "\t" << to_fraction(d[a]) << "\n";
    double worst = 0;
    for (std::int64_t n = 1; n <= c.terms.value_or(3 * n0); ++n)
      worst = std::max(worst, std::abs(fourier_reconstruct(coeff, n) - double(gcd_with_power_minus_one(t, p, n))));
    out << "max_reconstruction_error\t" << detail::fmt(worst) << "\n";
    if (worst > tol) throw check_failed(tolerance, "Fourier reconstruction error exceeds tolerance");
    return ok;
  }
  const MonoidScheme x = detail::load_scheme(detail::need(c.scheme, "--scheme or --t", c.command));
  const FourierData data = fourier_data(x, p);
  out << "period\t" << data.period << "\n";
  for (const auto& [idx, coeff] : data.coefficients)
    for (std::size_t nu = 0; nu < coeff.size(); ++nu)
      out << idx.first << "\t" << idx.second << "\t" << nu + 1 << "\t" << detail::fmt(coeff[nu]) << "\n";
  return ok;
}

// ---------------------------------------------------------------------------

inline int dispatch(const RunConfig& c, std::ostream& out) {
  if (c.command == "count") return cmd_count(c, out);
  if (c.command == "zeta") return cmd_zeta(c, out);
  if (c.command == "fe-check") return cmd_fe_check(c, out);
  if (c.command == "local") return cmd_local(c, out);
  if (c.command == "limit") return cmd_limit(c, out);
  if (c.command == "dual") return cmd_dual(c, out);
  if (c.command == "epsilon") return cmd_epsilon(c, out);
  if (c.command == "group") return cmd_group(c, out);
  if (c.command == "regdet") return cmd_regdet(c, out);
  if (c.command == "fourier") return cmd_fourier(c, out);
  throw parse_error("unknown command '" + c.command + "'");
}

inline int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.tol && !(*c.tol > 0)) throw parse_error("--tol must be positive");
    return dispatch(c, out);
  } catch (const check_failed& e) {
    err << "check failed: " << e.what() << "\n";
    return e.code;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return parse;
  } catch (const convergence_error& e) {
    err << "tolerance not met: " << e.what() << "\n";
    return tolerance;
  } catch (const precondition_error& e) {
    err << "precondition: " << e.what() << "\n";
    return precondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return internal;
  }
}

// args excludes the program name
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"zeta functions over F1: counting, refined zetas, functional equations, regularized determinants"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "pretty";
  bool pretty = false, records = false;

  struct Spec {
    const char* name;
    const char* help;
  };
  static const Spec commands[] = {
      {"count", "exact point count #X(F_q)"},
      {"zeta", "factored zeta of a scheme, group or counting function"},
      {"fe-check", "functional-equation checks"},
      {"local", "local zeta series coefficients at a prime"},
      {"limit", "(p-1)^N Z~(p, p^-s) as p -> 1"},
      {"dual", "dual counting function N*(u) = N(1/u)"},
      {"epsilon", "epsilon factor zeta_N*(-s)/zeta_N(s)"},
      {"group", "reductive group counting polynomial and identities"},
      {"regdet", "zeta-regularized determinant of a spectrum"},
      {"fourier", "Fourier data of gcd(t, p^n - 1)"},
  };
  for (const auto& spec : commands) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->callback([&config, name = std::string(spec.name)] { config.command = name; });
    sub->add_option("--scheme", config.scheme, "scheme JSON file or built-in (point, P:n, Gm:r)");
    sub->add_option("--powers", config.powers, "counting function: expression or record file");
    sub->add_option("--group", config.group, "GL:r, Gm:r, SL2 or group JSON file");
    sub->add_option("--spectrum", config.spectrum, "named spectrum (circle)");
    sub->add_option("--q", config.q, "field size");
    sub->add_option("--p", config.p, "prime, or real p > 1 for limit");
    sub->add_option("--s", config.s, "complex s, e.g. 3, 1/2, 3+1i");
    sub->add_option("--w", config.w, "complex w");
    sub->add_option("--t", config.torsion, "torsion order");
    sub->add_option("--terms", config.terms, "number of terms")->check(CLI::NonNegativeNumber);
    sub->add_option("--tol", config.tol, std::string("tolerance (default from ") + tolerance_env + ")");
    sub->add_option("--format", format, "pretty or records")->check(CLI::IsMember({"pretty", "records"}));
    sub->add_flag("--pretty", pretty, "same as --format pretty");
    sub->add_flag("--records", records, "same as --format records");
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return parse;
  }
  if (pretty && records) {
    err << "parse error: --pretty and --records are exclusive\n";
    return parse;
  }
  config.format = records || (!pretty && format == "records") ? Format::records : Format::pretty;
  return execute(config, out, err);
}

}  // namespace f1zeta::cli
