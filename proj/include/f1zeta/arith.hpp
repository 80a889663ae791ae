#pragma once

// Small elementary number theory on machine integers.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "f1zeta/errors.hpp"

namespace f1zeta::arith {

struct PrimePower {
  std::int64_t prime;
  int exponent;
  std::int64_t value;  // prime^exponent
};

inline std::vector<PrimePower> factor(std::int64_t n) {
  if (n < 1) throw precondition_error("factor: argument must be positive");
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t phi = n;
  for (const auto& pp : factor(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::int64_t powmod(std::int64_t base, std::int64_t e, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t r = 1;
  base %= m;
  if (base < 0) base += m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

inline std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

// Moebius function.
inline int mobius(std::int64_t n) {
  int mu = 1;
  for (const auto& pp : factor(n)) {
    if (pp.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

// Ramanujan sum c_q(n) = sum over k in [1,q] coprime to q of exp(2 pi i k n / q),
// via von Sterneck: mu(q/g) phi(q) / phi(q/g) with g = gcd(q, n). Always an integer.
inline std::int64_t ramanujan_sum(std::int64_t q, std::int64_t n) {
  const std::int64_t g = std::gcd(q, n);
  return mobius(q / g) * (euler_phi(q) / euler_phi(q / g));
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace f1zeta::arith
