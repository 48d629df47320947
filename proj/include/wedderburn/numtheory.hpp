#pragma once

// Small integer number theory used throughout: gcd/lcm, totients, prime
// tests, modular powers and multiplicative orders.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <optional>
#include <utility>
#include <vector>

#include "wedderburn/error.hpp"

namespace wedderburn::nt {

using i64 = std::int64_t;
using u64 = std::uint64_t;

inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline i64 lcm(i64 a, i64 b) { return a / std::gcd(a, b) * b; }

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::vector<i64> divisors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline i64 totient(i64 n) {
  i64 r = n;
  for (i64 p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline i64 invmod(i64 a, i64 m) {
  i64 g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1) {
    i64 q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) fail(ErrorKind::DivisionByZero, "no inverse modulo " + std::to_string(m));
  return mod(x, m);
}

/// Multiplicative order of a modulo m (gcd(a, m) = 1).
inline i64 mult_order(i64 a, i64 m) {
  if (m == 1) return 1;
  a = mod(a, m);
  i64 x = a, k = 1;
  while (x != 1) {
    x = mod(x * a, m);
    ++k;
    if (k > m) fail(ErrorKind::NonCoprime, "element not invertible");
  }
  return k;
}

/// Units of Z/m in increasing order.
inline std::vector<i64> units(i64 m) {
  std::vector<i64> out;
  for (i64 a = 0; a < m; ++a)
    if (std::gcd(a, m) == 1) out.push_back(m == 1 ? 0 : a);
  if (m == 1) out = {0};
  return out;
}

/// Decompose q = ell^r with ell prime; nullopt if q is not a prime power.
inline std::optional<std::pair<i64, i64>> prime_power(i64 q) {
  if (q < 2) return std::nullopt;
  auto ps = prime_factors(q);
  if (ps.size() != 1) return std::nullopt;
  i64 r = 0;
  while (q > 1) {
    q /= ps[0];
    ++r;
  }
  return std::make_pair(ps[0], r);
}

/// Least prime ell = 1 (mod u) with ell > lower_bound.
inline i64 prime_one_mod(i64 u, i64 lower_bound) {
  i64 k = lower_bound / u + 1;
  while (true) {
    i64 c = k * u + 1;
    if (c > lower_bound && is_prime(c)) return c;
    ++k;
  }
}

/// Smallest generator of (Z/ell)^* for prime ell.
inline u64 primitive_root(u64 ell) {
  if (ell == 2) return 1;
  auto ps = prime_factors(static_cast<i64>(ell - 1));
  for (u64 g = 2; g < ell; ++g) {
    bool ok = true;
    for (i64 p : ps)
      if (powmod(g, (ell - 1) / static_cast<u64>(p), ell) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  fail(ErrorKind::BadParams, "no primitive root");
}

/// Cyclic subgroup of (Z/m)^* generated by g, sorted.
inline std::vector<i64> cyclic_subgroup(i64 g, i64 m) {
  std::vector<i64> out;
  if (m == 1) return {0};
  i64 x = 1;
  do {
    out.push_back(x);
    x = mod(x * g, m);
  } while (x != 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wedderburn::nt
