#pragma once

// Finite power-log counting functions N(u) = sum c(lambda, m) u^lambda (log u)^m
// with exact rational exponents and coefficients.

#include <cctype>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "f1zeta/errors.hpp"
#include "f1zeta/rational.hpp"

namespace f1zeta {

struct PowerLogKey {
  Rational lambda;
  int log_power = 0;

  auto operator<=>(const PowerLogKey& o) const {
    if (lambda != o.lambda) return lambda < o.lambda ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
    return log_power <=> o.log_power;
  }
  bool operator==(const PowerLogKey&) const = default;
};

class PowerLogSum {
 public:
  using Map = std::map<PowerLogKey, Rational>;

  PowerLogSum() = default;

  static PowerLogSum monomial(const Rational& lambda, int log_power = 0,
                              const Rational& coefficient = 1) {
    PowerLogSum n;
    n.add_term(lambda, log_power, coefficient);
    return n;
  }
  static PowerLogSum constant(const Rational& c) { return monomial(0, 0, c); }

  void add_term(const Rational& lambda, int log_power, const Rational& coefficient) {
    if (log_power < 0) throw precondition_error("log power must be nonnegative");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(PowerLogKey{lambda, log_power}, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Rational& lambda, int log_power = 0) const {
    auto it = terms_.find(PowerLogKey{lambda, log_power});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // N(1): only the pure powers survive.
  Rational value_at_one() const {
    Rational v = 0;
    for (const auto& [k, c] : terms_)
      if (k.log_power == 0) v += c;
    return v;
  }

  bool is_pure_power() const {
    for (const auto& [k, c] : terms_)
      if (k.log_power != 0) return false;
    return true;
  }

  bool has_integer_coefficients() const {
    for (const auto& [k, c] : terms_)
      if (!is_integer(c)) return false;
    return true;
  }

  int max_log_power() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.log_power);
    return m;
  }

  // Largest exponent in the support (the growth order at infinity).
  Rational degree() const {
    if (terms_.empty()) throw precondition_error("degree of the zero counting function");
    return terms_.rbegin()->first.lambda;
  }
  Rational min_exponent() const {
    if (terms_.empty()) throw precondition_error("support of the zero counting function");
    return terms_.begin()->first.lambda;
  }
  // True when some term at the maximal exponent carries a logarithm; the
  // integrals over (1, inf) then sit at the boundary of their convergence region.
  bool degree_has_log() const {
    const Rational d = degree();
    for (const auto& [k, c] : terms_)
      if (k.lambda == d && k.log_power > 0) return true;
    return false;
  }

  PowerLogSum& operator+=(const PowerLogSum& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.lambda, k.log_power, c);
    return *this;
  }
  PowerLogSum& operator-=(const PowerLogSum& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.lambda, k.log_power, -c);
    return *this;
  }
  friend PowerLogSum operator+(PowerLogSum a, const PowerLogSum& b) { return a += b; }
  friend PowerLogSum operator-(PowerLogSum a, const PowerLogSum& b) { return a -= b; }

  friend PowerLogSum operator*(const PowerLogSum& a, const PowerLogSum& b) {
    PowerLogSum out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        out.add_term(ka.lambda + kb.lambda, ka.log_power + kb.log_power, ca * cb);
    return out;
  }

  PowerLogSum scaled(const Rational& k) const {
    PowerLogSum out;
    if (k == 0) return out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, c * k);
    return out;
  }

  // u^omega * N(u).
  PowerLogSum shifted(const Rational& omega) const {
    PowerLogSum out;
    for (const auto& [key, c] : terms_)
      out.terms_.emplace(PowerLogKey{key.lambda + omega, key.log_power}, c);
    return out;
  }

  std::complex<double> evaluate(std::complex<double> u) const {
    if (u == 0.0) throw singularity_error("counting function evaluated at u = 0");
    const std::complex<double> log_u = std::log(u);
    std::complex<double> acc = 0.0;
    for (const auto& [k, c] : terms_) {
      std::complex<double> term = to_double(c) * std::exp(to_double(k.lambda) * log_u);
      for (int i = 0; i < k.log_power; ++i) term *= log_u;
      acc += term;
    }
    return acc;
  }

  double evaluate(double u) const {
    if (!(u > 0)) throw precondition_error("real evaluation needs u > 0");
    return evaluate(std::complex<double>(u, 0.0)).real();
  }

  bool operator==(const PowerLogSum&) const = default;

 private:
  Map terms_;
};

// N*(u) = N(1/u): (lambda, m, c) -> (-lambda, m, (-1)^m c).
inline PowerLogSum dual(const PowerLogSum& n) {
  PowerLogSum out;
  for (const auto& [k, c] : n.terms())
    out.add_term(-k.lambda, k.log_power, (k.log_power % 2) ? Rational(-c) : c);
  return out;
}

inline PowerLogSum power(const PowerLogSum& n, int exponent) {
  if (exponent < 0) throw precondition_error("negative power of a counting function");
  PowerLogSum out = PowerLogSum::constant(1);
  for (int i = 0; i < exponent; ++i) out = out * n;
  return out;
}

// prod_i (1 - u^{-omega_i}).
inline PowerLogSum product_one_minus(std::span<const Rational> omegas) {
  PowerLogSum out = PowerLogSum::constant(1);
  for (const auto& w : omegas)
    out = out * (PowerLogSum::constant(1) - PowerLogSum::monomial(-w));
  return out;
}

struct FunctionalEquationWitness {
  int sign = 1;        // c
  Rational omega = 0;  // N(1/u) = c u^{-omega} N(u)
  bool operator==(const FunctionalEquationWitness&) const = default;
};

// Checks N(1/u) == c u^{-omega} N(u) as an identity of power-log sums.
inline bool satisfies_functional_equation(const PowerLogSum& n, const FunctionalEquationWitness& w) {
  return dual(n) == n.shifted(-w.omega).scaled(w.sign);
}

// Coefficientwise the equation reads (-1)^m c(omega - alpha, m) = c * c(alpha, m).
// Matching the extremes of the support forces omega = min + max.
inline std::optional<FunctionalEquationWitness> detect_functional_equation(const PowerLogSum& n,
                                                                           bool restrict_to_powers) {
  if (n.is_zero()) throw precondition_error("functional equation of N = 0 is vacuous");
  if (restrict_to_powers && !n.is_pure_power())
    throw precondition_error("power-only detection requested for a sum with log terms");
  const Rational omega = n.min_exponent() + n.degree();
  const auto& [key, c] = *n.terms().begin();
  const Rational partner = n.coefficient(omega - key.lambda, key.log_power);
  Rational ratio = partner / c;
  if (key.log_power % 2) ratio = -ratio;
  if (ratio != 1 && ratio != -1) return std::nullopt;
  FunctionalEquationWitness w{ratio == 1 ? 1 : -1, omega};
  if (!satisfies_functional_equation(n, w)) return std::nullopt;
  return w;
}

// ---------------------------------------------------------------------------
// Inline syntax: terms c*u^{a/b}*log^m joined by + and -.
// Accepted spellings per term: "3", "u", "-u^2", "1/2*u^{-3/2}", "log", "2*log^3",
// "u^{1/2}*log^2". The printer emits the canonical form, which parses back.

inline std::string to_expression(const PowerLogSum& n) {
  if (n.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : n.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::vector<std::string> factors;
    const bool has_u = k.lambda != 0;
    const bool has_log = k.log_power > 0;
    if (mag != 1 || (!has_u && !has_log)) factors.push_back(to_compact(mag));
    if (has_u) {
      if (k.lambda == 1)
        factors.push_back("u");
      else if (is_integer(k.lambda) && k.lambda > 0)
        factors.push_back("u^" + to_compact(k.lambda));
      else
        factors.push_back("u^{" + to_compact(k.lambda) + "}");
    }
    if (has_log) factors.push_back(k.log_power == 1 ? "log" : "log^" + std::to_string(k.log_power));
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  }
  return out;
}

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  PowerLogSum parse() {
    PowerLogSum out;
    skip_ws();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(out, sign);
      skip_ws();
    }
    return out;
  }

 private:
  void parse_term(PowerLogSum& out, int sign) {
    Rational coefficient = 1;
    Rational lambda = 0;
    int log_power = 0;
    bool any = false;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
        coefficient *= parse_number();
      } else if (ch == 'u') {
        ++pos_;
        lambda += accept('^') ? parse_exponent() : Rational(1);
      } else if (text_.substr(pos_, 3) == "log") {
        pos_ += 3;
        log_power += accept('^') ? static_cast<int>(to_int64(parse_exponent())) : 1;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      any = true;
      skip_ws();
      if (!accept('*')) break;
    }
    if (!any) fail("empty term");
    if (log_power < 0) fail("negative log power");
    out.add_term(lambda, log_power, sign > 0 ? coefficient : Rational(-coefficient));
  }

  Rational parse_exponent() {
    skip_ws();
    if (accept('{')) {
      const auto close = text_.find('}', pos_);
      if (close == std::string_view::npos) fail("unterminated '{'");
      const auto body = text_.substr(pos_, close - pos_);
      pos_ = close + 1;
      return parse_rational(body);
    }
    std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
    if (pos_ == start) fail("missing exponent");
    return parse_rational(text_.substr(start, pos_ - start));
  }

  Rational parse_number() {
    std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
    // a '/' directly followed by a digit belongs to the coefficient
    if (!at_end() && peek() == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  bool accept(char ch) {
    if (!at_end() && peek() == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw parse_error("power-log expression '" + std::string(text_) + "': " + why + " at offset " +
                      std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline PowerLogSum parse_expression(std::string_view text) {
  return detail::ExpressionParser(text).parse();
}

}  // namespace f1zeta
