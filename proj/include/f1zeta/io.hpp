#pragma once

// File formats.
//
//   scheme:      {"name": "...", "dimension": 1, "smooth_projective": true,
//                 "points": [{"rank": 0, "torsion": [2, 3]}, ...]}
//   power-log:   [[lambda_num, lambda_den, m, c_num, c_den], ...]
//   zeta:        [[lambda_num, lambda_den, m, e_num, e_den], ...]
//   group:       {"name": "...", "rank": r, "dimension": d, "positive_roots": p,
//                 "flag_betti": [b_0, ..., b_2p]}
//
// Integers in records may be JSON numbers or decimal strings (for values
// beyond 64 bits).

#include <cctype>
#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "f1zeta/errors.hpp"
#include "f1zeta/powerlog.hpp"
#include "f1zeta/rational.hpp"
#include "f1zeta/reductive.hpp"
#include "f1zeta/scheme.hpp"
#include "f1zeta/zeta_calculus.hpp"

namespace f1zeta::io {

using json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(what + ": " + e.what());
  }
}

namespace detail {

inline BigInt to_bigint(const json& v) {
  if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw parse_error("not an integer: '" + s + "'");
    // strip the sign and leading zeros, cpp_int would read "07" as octal
    std::string digits = s.substr(start);
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    const BigInt n(digits);
    return s[0] == '-' ? BigInt(-n) : n;
  }
  throw parse_error("expected an integer, got " + v.dump());
}

inline json from_bigint(const BigInt& n) {
  if (n <= std::numeric_limits<std::int64_t>::max() && n >= std::numeric_limits<std::int64_t>::min())
    return json(n.convert_to<std::int64_t>());
  return json(n.str());
}

inline int to_small_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw parse_error(field + " must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw parse_error(field + " out of range");
  return static_cast<int>(x);
}

using Record = std::tuple<Rational, int, Rational>;

inline std::vector<Record> parse_records(const json& j, const std::string& what) {
  if (!j.is_array()) throw parse_error(what + ": expected a list of records");
  std::vector<Record> out;
  for (const auto& rec : j) {
    if (!rec.is_array() || rec.size() != 5)
      throw parse_error(what + ": each record needs 5 entries [num, den, m, num, den]");
    const BigInt ld = to_bigint(rec[1]), cd = to_bigint(rec[4]);
    if (ld == 0 || cd == 0) throw parse_error(what + ": zero denominator");
    const int m = to_small_int(rec[2], "m");
    if (m < 0) throw parse_error(what + ": negative log power");
    out.emplace_back(Rational(to_bigint(rec[0]), ld), m, Rational(to_bigint(rec[3]), cd));
  }
  return out;
}

inline json record(const Rational& lambda, int m, const Rational& c) {
  return json::array({from_bigint(num(lambda)), from_bigint(den(lambda)), m, from_bigint(num(c)),
                      from_bigint(den(c))});
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline MonoidScheme scheme_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("scheme: expected an object");
  if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
    throw parse_error("scheme: 'points' must be a nonempty list");
  std::vector<TorsionPoint> points;
  for (const auto& p : j["points"]) {
    if (!p.is_object() || !p.contains("rank")) throw parse_error("scheme: every point needs a rank");
    TorsionPoint x;
    x.rank = detail::to_small_int(p["rank"], "rank");
    if (x.rank < 0) throw parse_error("scheme: negative rank " + std::to_string(x.rank));
    if (p.contains("torsion")) {
      if (!p["torsion"].is_array()) throw parse_error("scheme: 'torsion' must be a list");
      for (const auto& t : p["torsion"]) {
        if (!t.is_number_integer()) throw parse_error("scheme: torsion orders must be integers");
        const auto order = t.get<std::int64_t>();
        if (order < 2) throw parse_error("scheme: torsion order " + std::to_string(order) + " < 2");
        x.torsion.push_back(order);
      }
    }
    points.push_back(std::move(x));
  }
  std::optional<int> dimension;
  if (j.contains("dimension") && !j["dimension"].is_null()) {
    dimension = detail::to_small_int(j["dimension"], "dimension");
    if (*dimension < 0) throw parse_error("scheme: negative dimension");
  }
  bool smooth = false;
  if (j.contains("smooth_projective")) {
    if (!j["smooth_projective"].is_boolean()) throw parse_error("scheme: smooth_projective must be a bool");
    smooth = j["smooth_projective"].get<bool>();
  }
  std::string name = j.value("name", std::string{});
  try {
    return MonoidScheme(std::move(points), dimension, smooth, std::move(name));
  } catch (const precondition_error& e) {
    throw parse_error(std::string("scheme: ") + e.what());
  }
}

inline json scheme_to_json(const MonoidScheme& s) {
  json pts = json::array();
  for (const auto& x : s.points()) pts.push_back({{"rank", x.rank}, {"torsion", x.torsion}});
  json j = {{"name", s.name()}, {"smooth_projective", s.smooth_projective()}, {"points", pts}};
  if (s.has_explicit_dimension()) j["dimension"] = s.dimension();
  return j;
}

inline MonoidScheme parse_scheme(std::string_view text) { return scheme_from_json(parse_json(text, "scheme")); }
inline MonoidScheme load_scheme(const std::string& path) { return parse_scheme(read_file(path)); }

// ---------------------------------------------------------------------------

inline PowerLogSum powers_from_json(const json& j) {
  PowerLogSum n;
  for (const auto& [lambda, m, c] : detail::parse_records(j, "counting function")) n.add_term(lambda, m, c);
  return n;
}

inline json powers_to_json(const PowerLogSum& n) {
  json out = json::array();
  for (const auto& [k, c] : n.terms()) out.push_back(detail::record(k.lambda, k.log_power, c));
  return out;
}

inline FactoredZeta zeta_from_json(const json& j) {
  FactoredZeta z;
  for (const auto& [lambda, m, e] : detail::parse_records(j, "factored zeta")) z.add_factor(lambda, m, e);
  return z;
}

inline json zeta_to_json(const FactoredZeta& z) {
  json out = json::array();
  for (const auto& [k, e] : z.factors()) out.push_back(detail::record(k.lambda, k.log_power, e));
  return out;
}

// ---------------------------------------------------------------------------

inline ReductiveGroupData group_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("group: expected an object");
  for (const char* field : {"rank", "dimension", "positive_roots", "flag_betti"})
    if (!j.contains(field)) throw parse_error(std::string("group: missing '") + field + "'");
  ReductiveGroupData g;
  g.name = j.value("name", std::string{"custom"});
  g.rank = detail::to_small_int(j["rank"], "rank");
  g.dimension = detail::to_small_int(j["dimension"], "dimension");
  g.positive_roots = detail::to_small_int(j["positive_roots"], "positive_roots");
  if (!j["flag_betti"].is_array()) throw parse_error("group: flag_betti must be a list");
  g.flag_betti.clear();
  for (const auto& b : j["flag_betti"]) g.flag_betti.push_back(detail::to_bigint(b));
  return g;
}

inline json group_to_json(const ReductiveGroupData& g) {
  json betti = json::array();
  for (const auto& b : g.flag_betti) betti.push_back(detail::from_bigint(b));
  return {{"name", g.name},
          {"rank", g.rank},
          {"dimension", g.dimension},
          {"positive_roots", g.positive_roots},
          {"flag_betti", betti}};
}

// ---------------------------------------------------------------------------

// "3", "-1/2", "2.5", "3+1i", "3-2.5i", "i", "-i", "0.5+i", "3,1" (re,im pair).
inline std::complex<double> parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw parse_error("empty complex number");
  if (auto comma = s.find(','); comma != std::string::npos)
    return {to_double(parse_rational(s.substr(0, comma))), to_double(parse_rational(s.substr(comma + 1)))};
  if (s.back() != 'i' && s.back() != 'j') return {to_double(parse_rational(s)), 0.0};
  s.pop_back();
  // split at the last sign that is not the leading one or part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  if (im.back() == '*') im.pop_back();
  return {re.empty() ? 0.0 : to_double(parse_rational(re)), to_double(parse_rational(im))};
}

inline std::string format_double(double x, int digits = 17) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

inline std::string format_complex(std::complex<double> z, int digits = 17) {
  if (z.imag() == 0.0) return format_double(z.real(), digits);
  std::string out = format_double(z.real(), digits);
  out += z.imag() < 0 ? "-" : "+";
  out += format_double(std::abs(z.imag()), digits) + "i";
  return out;
}

}  // namespace f1zeta::io
