#pragma once

// Dense univariate polynomials over any field type exposing the usual
// zero/one/add/sub/mul/inv/is_zero members. Coefficient i multiplies X^i and
// trailing zeros are always stripped, so the zero polynomial is empty.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "wedderburn/error.hpp"
#include "wedderburn/numtheory.hpp"
#include "wedderburn/prime_field.hpp"

namespace wedderburn {

template <class Fld>
using Poly = std::vector<typename Fld::Elem>;

namespace poly {

template <class Fld>
void trim(const Fld& F, Poly<Fld>& p) {
  while (!p.empty() && F.is_zero(p.back())) p.pop_back();
}

template <class Fld>
int degree(const Poly<Fld>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class Fld>
Poly<Fld> monomial(const Fld& F, int deg, const typename Fld::Elem& c) {
  if (F.is_zero(c)) return {};
  Poly<Fld> p(deg + 1, F.zero());
  p[deg] = c;
  return p;
}

template <class Fld>
Poly<Fld> x_minus(const Fld& F, const typename Fld::Elem& r) {
  return {F.neg(r), F.one()};
}

template <class Fld>
bool equal(const Fld& F, const Poly<Fld>& a, const Poly<Fld>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!F.equal(a[i], b[i])) return false;
  return true;
}

template <class Fld>
Poly<Fld> add(const Fld& F, const Poly<Fld>& a, const Poly<Fld>& b) {
  Poly<Fld> r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(F, r);
  return r;
}

template <class Fld>
Poly<Fld> sub(const Fld& F, const Poly<Fld>& a, const Poly<Fld>& b) {
  Poly<Fld> r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(F, r);
  return r;
}

template <class Fld>
Poly<Fld> scale(const Fld& F, const Poly<Fld>& a, const typename Fld::Elem& c) {
  Poly<Fld> r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(F.mul(x, c));
  trim(F, r);
  return r;
}

template <class Fld>
Poly<Fld> mul(const Fld& F, const Poly<Fld>& a, const Poly<Fld>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<Fld> r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(F, r);
  return r;
}

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
template <class Fld>
std::pair<Poly<Fld>, Poly<Fld>> divmod(const Fld& F, Poly<Fld> a, const Poly<Fld>& b) {
  if (b.empty()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  trim(F, a);
  const int db = degree<Fld>(b);
  if (degree<Fld>(a) < db) return {{}, a};
  auto lead_inv = F.inv(b.back());
  Poly<Fld> q(a.size() - b.size() + 1, F.zero());
  for (int i = degree<Fld>(a); i >= db; --i) {
    if (F.is_zero(a[i])) continue;
    auto c = F.mul(a[i], lead_inv);
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]));
  }
  trim(F, a);
  trim(F, q);
  return {q, a};
}

template <class Fld>
Poly<Fld> rem(const Fld& F, const Poly<Fld>& a, const Poly<Fld>& b) {
  return divmod(F, a, b).second;
}

/// Exact division; throws if b does not divide a.
template <class Fld>
Poly<Fld> exact_div(const Fld& F, const Poly<Fld>& a, const Poly<Fld>& b) {
  auto [q, r] = divmod(F, a, b);
  if (!r.empty()) fail(ErrorKind::DivisionByZero, "inexact polynomial division");
  return q;
}

template <class Fld>
Poly<Fld> monic(const Fld& F, const Poly<Fld>& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

template <class Fld>
bool is_monic(const Fld& F, const Poly<Fld>& a) {
  return !a.empty() && F.equal(a.back(), F.one());
}

/// Monic gcd (the gcd of two zero polynomials is zero).
template <class Fld>
Poly<Fld> gcd(const Fld& F, Poly<Fld> a, Poly<Fld> b) {
  trim(F, a);
  trim(F, b);
  while (!b.empty()) {
    auto r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class Fld>
std::tuple<Poly<Fld>, Poly<Fld>, Poly<Fld>> xgcd(const Fld& F, Poly<Fld> a, Poly<Fld> b) {
  Poly<Fld> s0{F.one()}, s1{}, t0{}, t1{F.one()};
  trim(F, a);
  trim(F, b);
  while (!b.empty()) {
    auto [q, r] = divmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
    auto s2 = sub(F, s0, mul(F, q, s1));
    auto t2 = sub(F, t0, mul(F, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) return {a, s0, t0};
  auto li = F.inv(a.back());
  return {scale(F, a, li), scale(F, s0, li), scale(F, t0, li)};
}

template <class Fld>
typename Fld::Elem eval(const Fld& F, const Poly<Fld>& p, const typename Fld::Elem& x) {
  auto acc = F.zero();
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

template <class Fld>
Poly<Fld> derivative(const Fld& F, const Poly<Fld>& p) {
  Poly<Fld> r;
  for (std::size_t i = 1; i < p.size(); ++i)
    r.push_back(F.mul(p[i], F.from_int(static_cast<long long>(i))));
  trim(F, r);
  return r;
}

/// base^e mod m.
template <class Fld>
Poly<Fld> powmod(const Fld& F, Poly<Fld> base, std::uint64_t e, const Poly<Fld>& m) {
  Poly<Fld> r{F.one()};
  r = rem(F, r, m);
  base = rem(F, base, m);
  while (e) {
    if (e & 1) r = rem(F, mul(F, r, base), m);
    base = rem(F, mul(F, base, base), m);
    e >>= 1;
  }
  return r;
}

/// Power sums P_0..P_{count-1} of the roots of a monic f, from its
/// coefficients by Newton's identities (no root extraction).
template <class Fld>
std::vector<typename Fld::Elem> power_sums(const Fld& F, const Poly<Fld>& f, int count) {
  if (!is_monic(F, f)) fail(ErrorKind::NotMonic, "power sums need a monic polynomial");
  const int d = degree<Fld>(f);
  // elementary symmetric e_i = (-1)^i * coeff of X^{d-i}
  std::vector<typename Fld::Elem> e(d + 1, F.zero());
  e[0] = F.one();
  for (int i = 1; i <= d; ++i) e[i] = (i % 2 == 0) ? f[d - i] : F.neg(f[d - i]);
  std::vector<typename Fld::Elem> P(std::max(count, 1), F.zero());
  P[0] = F.from_int(d);
  for (int t = 1; t < count; ++t) {
    auto acc = F.zero();
    for (int i = 1; i <= std::min(t - 1, d); ++i) {
      auto term = F.mul(e[i], P[t - i]);
      acc = (i % 2 == 1) ? F.add(acc, term) : F.sub(acc, term);
    }
    if (t <= d) {
      auto term = F.mul(F.from_int(t), e[t]);
      acc = (t % 2 == 1) ? F.add(acc, term) : F.sub(acc, term);
    }
    P[t] = acc;
  }
  P.resize(count);
  return P;
}

/// n-th cyclotomic polynomial with integer coefficients, by exact division
/// of X^n - 1 by Phi_d for every proper divisor d of n.
inline std::vector<mpz_class> cyclotomic_integer(long long n) {
  if (n < 1) fail(ErrorKind::BadParams, "cyclotomic index must be positive");
  RationalField Q;
  Poly<RationalField> p(n + 1, mpq_class(0));
  p[0] = -1;
  p[n] = 1;
  for (long long d = 1; d < n; ++d) {
    if (n % d) continue;
    auto sub_poly = cyclotomic_integer(d);
    Poly<RationalField> s;
    for (auto& c : sub_poly) s.push_back(mpq_class(c));
    p = exact_div(Q, p, s);
  }
  std::vector<mpz_class> out;
  for (auto& c : p) out.push_back(c.get_num());
  return out;
}

inline Poly<RationalField> cyclotomic_poly(long long n) {
  Poly<RationalField> p;
  for (auto& c : cyclotomic_integer(n)) p.push_back(mpq_class(c));
  return p;
}

// ---------------------------------------------------------------------------
// Factorization over a finite base field GF(q). The coefficient field type may
// be larger than GF(q) (an ambient extension); it must provide base_order(),
// random_base(rng) and frobenius(x) = x^q. Input must be squarefree.

namespace detail {

template <class Fld>
Poly<Fld> random_poly(const Fld& F, int deg_below, std::mt19937_64& rng) {
  Poly<Fld> r;
  for (int i = 0; i < deg_below; ++i) r.push_back(F.random_base(rng));
  trim(F, r);
  return r;
}

/// Apply x -> x^q coefficientwise is trivial on base coefficients, so the
/// q-power map on F_q[X]/(f) is the ordinary power; computed by square-multiply.
template <class Fld>
Poly<Fld> qpow(const Fld& F, const Poly<Fld>& a, const Poly<Fld>& f) {
  return powmod(F, a, static_cast<std::uint64_t>(F.base_order()), f);
}

template <class Fld>
void equal_degree(const Fld& F, const Poly<Fld>& f, int d, std::mt19937_64& rng,
                  std::vector<Poly<Fld>>& out) {
  const int n = degree<Fld>(f);
  if (n == d) {
    out.push_back(monic(F, f));
    return;
  }
  const std::uint64_t q = F.base_order();
  for (int attempt = 0; attempt < 4096; ++attempt) {
    auto a = random_poly(F, n, rng);
    if (degree<Fld>(a) < 1) continue;
    Poly<Fld> b;
    if (q % 2 == 1) {
      // a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q-1)/2}
      auto t = a, s = a;
      for (int i = 1; i < d; ++i) {
        t = qpow(F, t, f);
        s = rem(F, mul(F, s, t), f);
      }
      b = powmod(F, s, (q - 1) / 2, f);
      b = sub(F, b, Poly<Fld>{F.one()});
    } else {
      // trace to GF(2): sum_{i < r*d} a^{2^i}
      int r = 0;
      for (std::uint64_t x = q; x > 1; x >>= 1) ++r;
      auto t = rem(F, a, f);
      b = t;
      for (int i = 1; i < r * d; ++i) {
        t = rem(F, mul(F, t, t), f);
        b = add(F, b, t);
      }
    }
    auto g = gcd(F, f, b);
    if (degree<Fld>(g) > 0 && degree<Fld>(g) < n) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, exact_div(F, f, g), d, rng, out);
      return;
    }
  }
  fail(ErrorKind::SearchBudgetExhausted, "equal-degree splitting did not converge");
}

}  // namespace detail

/// Monic irreducible factors over GF(q) of a squarefree polynomial, sorted by
/// (degree, coefficient order supplied by less). Randomized with the given seed.
template <class Fld>
std::vector<Poly<Fld>> factor_squarefree_finite(const Fld& F, const Poly<Fld>& input,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto f = monic(F, input);
  std::vector<Poly<Fld>> out;
  if (degree<Fld>(f) < 1) return out;
  Poly<Fld> X{F.zero(), F.one()};
  auto h = rem(F, X, f);
  int d = 0;
  while (degree<Fld>(f) >= 2 * (d + 1)) {
    ++d;
    h = detail::qpow(F, h, f);
    auto g = gcd(F, f, sub(F, h, X));
    if (degree<Fld>(g) > 0) {
      detail::equal_degree(F, g, d, rng, out);
      f = exact_div(F, f, g);
      h = rem(F, h, f);
    }
  }
  if (degree<Fld>(f) > 0) out.push_back(monic(F, f));
  return out;
}

}  // namespace poly
}  // namespace wedderburn
