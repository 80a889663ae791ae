#pragma once

// Point data of a monoid scheme of finite type and its counting functions.
//
// A scheme is ingested as the finite list of its points x, each carrying the
// rank R(x) of the unit group O_x^* and the orders t_{x,j} of the cyclic
// factors of its torsion part. Over F_q the number of points is
//
//     #X(F_q) = sum_x (q-1)^R(x) prod_j gcd(t_{x,j}, q-1),
//
// and the torsion-smoothed count replaces every gcd by t_{x,j}.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f1zeta/arith.hpp"
#include "f1zeta/errors.hpp"
#include "f1zeta/rational.hpp"

namespace f1zeta {

struct TorsionPoint {
  int rank = 0;
  std::vector<std::int64_t> torsion;  // empty means trivial torsion

  // T(x), the order of the torsion subgroup.
  BigInt torsion_cardinality() const {
    BigInt t = 1;
    for (auto order : torsion) t *= order;
    return t;
  }

  bool operator==(const TorsionPoint&) const = default;
};

class MonoidScheme {
 public:
  MonoidScheme(std::vector<TorsionPoint> points, std::optional<int> dimension = std::nullopt,
               bool smooth_projective = false, std::string name = {})
      : points_(std::move(points)), smooth_projective_(smooth_projective), name_(std::move(name)) {
    if (points_.empty()) throw precondition_error("a scheme needs at least one point");
    for (const auto& x : points_) {
      if (x.rank < 0) throw precondition_error("negative rank " + std::to_string(x.rank));
      for (auto t : x.torsion)
        if (t < 2) throw precondition_error("torsion order " + std::to_string(t) + " < 2");
      max_rank_ = std::max(max_rank_, x.rank);
    }
    dimension_ = dimension.value_or(max_rank_);
    explicit_dimension_ = dimension.has_value();
    if (dimension_ < max_rank_)
      throw precondition_error("dimension " + std::to_string(dimension_) +
                               " is smaller than the maximal rank " + std::to_string(max_rank_));
  }

  const std::vector<TorsionPoint>& points() const { return points_; }
  int dimension() const { return dimension_; }
  bool has_explicit_dimension() const { return explicit_dimension_; }
  int max_rank() const { return max_rank_; }
  bool smooth_projective() const { return smooth_projective_; }
  const std::string& name() const { return name_; }

  bool torsion_free() const {
    return std::all_of(points_.begin(), points_.end(),
                       [](const TorsionPoint& x) { return x.torsion.empty(); });
  }

  bool operator==(const MonoidScheme& o) const {
    return points_ == o.points_ && dimension_ == o.dimension_ &&
           smooth_projective_ == o.smooth_projective_ && name_ == o.name_;
  }

 private:
  std::vector<TorsionPoint> points_;
  int max_rank_ = 0;
  int dimension_ = 0;
  bool explicit_dimension_ = false;
  bool smooth_projective_ = false;
  std::string name_;
};

namespace schemes {

inline MonoidScheme f1_point() { return MonoidScheme({{0, {}}}, 0, true, "F1-point"); }

// G_m^r: a single point whose unit group is Z^r.
inline MonoidScheme torus(int r) {
  return MonoidScheme({{r, {}}}, r, false, "Gm^" + std::to_string(r));
}

// Projective n-space: binom(n+1, k+1) points of rank k, one per face of the simplex.
inline MonoidScheme projective_space(int n) {
  std::vector<TorsionPoint> pts;
  for (int k = 0; k <= n; ++k) {
    const auto count = binomial(n + 1, k + 1).convert_to<int>();
    for (int i = 0; i < count; ++i) pts.push_back({k, {}});
  }
  return MonoidScheme(std::move(pts), n, true, "P^" + std::to_string(n));
}

}  // namespace schemes

inline BigInt exact_count(const MonoidScheme& scheme, const BigInt& q) {
  if (q < 2) throw precondition_error("exact_count needs q >= 2");
  const BigInt m = q - 1;
  BigInt total = 0;
  for (const auto& x : scheme.points()) {
    BigInt term = pow(m, static_cast<std::uint64_t>(x.rank));
    for (auto t : x.torsion) {
      const auto residue = static_cast<std::int64_t>(m % t);
      term *= std::gcd(t, residue);
    }
    total += term;
  }
  return total;
}

// N(q) = sum_x T(x) (q-1)^R(x).
inline Rational smoothed_count(const MonoidScheme& scheme, const Rational& q) {
  Rational total = 0;
  for (const auto& x : scheme.points())
    total += Rational(x.torsion_cardinality()) * pow(Rational(q - 1), std::int64_t{x.rank});
  return total;
}

// n0: lcm of Euler phi over the prime-power parts of every torsion order.
inline std::int64_t fourier_period(const MonoidScheme& scheme) {
  std::int64_t n0 = 1;
  for (const auto& x : scheme.points())
    for (auto t : x.torsion)
      for (const auto& pp : arith::factor(t)) n0 = arith::lcm(n0, arith::euler_phi(pp.value));
  return n0;
}

// gcd(t, p^n - 1) for n >= 1.
inline std::int64_t gcd_with_power_minus_one(std::int64_t t, std::int64_t p, std::int64_t n) {
  const std::int64_t r = (arith::powmod(p, n, t) + t - 1) % t;
  return std::gcd(t, r);
}

// Minimal period of n -> gcd(t, p^n - 1).
inline std::int64_t gcd_sequence_period(std::int64_t t, std::int64_t p) {
  std::int64_t coprime_part = t;
  while (coprime_part % p == 0) coprime_part /= p;
  if (coprime_part == 1) return 1;
  std::int64_t order = 1;
  for (std::int64_t v = p % coprime_part; v != 1; v = arith::mulmod(v, p, coprime_part)) ++order;
  for (auto d : arith::divisors(order)) {
    bool periodic = true;
    for (std::int64_t n = 1; n <= order && periodic; ++n)
      periodic = gcd_with_power_minus_one(t, p, n) == gcd_with_power_minus_one(t, p, n + d);
    if (periodic) return d;
  }
  return order;
}

// xi^k for xi = exp(2 pi i / n0), with the exponent reduced exactly first.
inline std::complex<double> root_of_unity_power(std::int64_t k, std::int64_t n0) {
  k %= n0;
  if (k < 0) k += n0;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n0));
}

// c_nu(p), nu = 1..n0 (stored at index nu-1), such that
// gcd(t, p^n - 1) = sum_nu c_nu xi^{n nu}.
inline std::vector<std::complex<double>> gcd_fourier_coefficients(std::int64_t t, std::int64_t p,
                                                                  std::int64_t n0) {
  if (t < 2) throw precondition_error("torsion order must be >= 2");
  if (!arith::is_prime(p)) throw precondition_error(std::to_string(p) + " is not prime");
  if (n0 < 1) throw precondition_error("Fourier period must be positive");
  const std::int64_t period = gcd_sequence_period(t, p);
  if (n0 % period != 0)
    throw precondition_error("n0 = " + std::to_string(n0) + " is not a multiple of the period " +
                             std::to_string(period) + " of gcd(" + std::to_string(t) + ", " +
                             std::to_string(p) + "^n - 1)");
  std::vector<std::complex<double>> c(static_cast<std::size_t>(n0));
  for (std::int64_t nu = 1; nu <= n0; ++nu) {
    std::complex<double> acc = 0.0;
    for (std::int64_t n = 1; n <= n0; ++n)
      acc += static_cast<double>(gcd_with_power_minus_one(t, p, n)) *
             root_of_unity_power(-n * nu, n0);
    c[static_cast<std::size_t>(nu - 1)] = acc / static_cast<double>(n0);
  }
  return c;
}

inline std::complex<double> fourier_reconstruct(const std::vector<std::complex<double>>& c,
                                                std::int64_t n) {
  const auto n0 = static_cast<std::int64_t>(c.size());
  std::complex<double> acc = 0.0;
  for (std::int64_t nu = 1; nu <= n0; ++nu)
    acc += c[static_cast<std::size_t>(nu - 1)] * root_of_unity_power(n * nu, n0);
  return acc;
}

// d_alpha, alpha = 1..t (index alpha-1), with gcd(t, m) = sum_alpha d_alpha e^{2 pi i alpha m / t}.
// Each d_alpha = (1/t) sum_{d | t} d c_{t/d}(alpha) is rational (Ramanujan sums).
inline std::vector<Rational> gcd_inner_fourier(std::int64_t t) {
  if (t < 1) throw precondition_error("gcd_inner_fourier needs t >= 1");
  std::vector<Rational> d(static_cast<std::size_t>(t));
  const auto divs = arith::divisors(t);
  for (std::int64_t alpha = 1; alpha <= t; ++alpha) {
    BigInt acc = 0;
    for (auto g : divs) acc += BigInt(g) * arith::ramanujan_sum(t / g, alpha);
    d[static_cast<std::size_t>(alpha - 1)] = Rational(acc, t);
  }
  return d;
}

struct FourierData {
  std::int64_t period = 1;  // n0
  std::complex<double> root;
  std::int64_t prime = 0;
  // (point index, torsion index) -> c_{x,j,nu}(p)
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::complex<double>>> coefficients;
};

inline FourierData fourier_data(const MonoidScheme& scheme, std::int64_t p) {
  FourierData data;
  data.period = fourier_period(scheme);
  data.root = root_of_unity_power(1, data.period);
  data.prime = p;
  const auto& pts = scheme.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts[i].torsion.size(); ++j)
      data.coefficients[{i, j}] = gcd_fourier_coefficients(pts[i].torsion[j], p, data.period);
  return data;
}

}  // namespace f1zeta
