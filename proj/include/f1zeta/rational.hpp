#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "f1zeta/errors.hpp"

namespace f1zeta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

// Converts an integral rational to int64, throwing when it does not fit.
inline std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw precondition_error("expected an integer, got " + r.str());
  const BigInt n = num(r);
  if (n > std::numeric_limits<std::int64_t>::max() ||
      n < std::numeric_limits<std::int64_t>::min())
    throw precondition_error("integer out of range: " + n.str());
  return n.convert_to<std::int64_t>();
}

// Always "num/den", also for integers; used by record-style output.
inline std::string to_fraction(const Rational& r) { return num(r).str() + "/" + den(r).str(); }

// "3", "-1/2": denominators of one are dropped.
inline std::string to_compact(const Rational& r) { return r.str(); }

inline bool is_odd(const BigInt& n) { return boost::multiprecision::bit_test(abs(n), 0); }

// (-1)^n for an integral rational.
inline int sign_power(const Rational& n) {
  if (!is_integer(n)) throw precondition_error("sign (-1)^x needs integral x, got " + n.str());
  return is_odd(num(n)) ? -1 : 1;
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt factorial(std::int64_t n) {
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt pow(BigInt base, std::uint64_t e) {
  BigInt r = 1;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

// Integer power with a possibly negative exponent.
inline Rational pow(const Rational& base, std::int64_t e) {
  if (e < 0) {
    if (base == 0) throw singularity_error("0 raised to a negative power");
    return Rational(1) / pow(base, -e);
  }
  return Rational(pow(num(base), static_cast<std::uint64_t>(e)),
                  pow(den(base), static_cast<std::uint64_t>(e)));
}

// Accepts "7", "-3/4", "+2", "0.125", "-1.5e-3".
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw parse_error("not an exact rational: '" + std::string(text) + "'");
  };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) return fail();
  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }
  auto digits_at = [&](std::size_t from) {
    std::size_t end = from;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    return end;
  };
  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::size_t a = digits_at(pos);
    if (a != slash || a == pos) return fail();
    const std::size_t b = digits_at(slash + 1);
    if (b != s.size() || b == slash + 1) return fail();
    auto strip = [](std::string x) { return x.erase(0, std::min(x.find_first_not_of('0'), x.size() - 1)); };
    BigInt d(strip(s.substr(slash + 1)));
    if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    value = Rational(BigInt(strip(s.substr(pos, slash - pos))), d);
  } else {
    const std::size_t int_end = digits_at(pos);
    std::string mantissa = s.substr(pos, int_end - pos);
    std::size_t cur = int_end;
    std::int64_t scale = 0;
    if (cur < s.size() && s[cur] == '.') {
      const std::size_t frac_end = digits_at(cur + 1);
      mantissa += s.substr(cur + 1, frac_end - cur - 1);
      scale = -static_cast<std::int64_t>(frac_end - cur - 1);
      cur = frac_end;
    }
    if (mantissa.empty()) return fail();
    if (cur < s.size() && (s[cur] == 'e' || s[cur] == 'E')) {
      std::size_t exp_pos = cur + 1;
      bool exp_negative = false;
      if (exp_pos < s.size() && (s[exp_pos] == '+' || s[exp_pos] == '-')) {
        exp_negative = s[exp_pos] == '-';
        ++exp_pos;
      }
      const std::size_t exp_end = digits_at(exp_pos);
      if (exp_end == exp_pos || exp_end - exp_pos > 6) return fail();
      const std::int64_t e = std::stoll(s.substr(exp_pos, exp_end - exp_pos));
      scale += exp_negative ? -e : e;
      cur = exp_end;
    }
    if (cur != s.size()) return fail();
    // cpp_int reads a leading 0 as octal
    mantissa.erase(0, std::min(mantissa.find_first_not_of('0'), mantissa.size() - 1));
    value = Rational(BigInt(mantissa));
    value *= pow(Rational(10), scale);
  }
  return negative ? Rational(-value) : value;
}

}  // namespace f1zeta
