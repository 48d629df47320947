#pragma once

// GF(ell^M) by Zech-style exp/log tables. An element is its code
// sum c_i ell^i for the residue polynomial sum c_i X^i modulo a fixed monic
// irreducible (the lexicographically least one by code). The field carries a
// base subfield GF(q), q = ell^r, r | M, and an order N with N | ell^M - 1 so
// that zeta_N and the Galois action zeta_N -> zeta_N^a (a in <q> mod N) are
// available.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wedderburn/error.hpp"
#include "wedderburn/numtheory.hpp"
#include "wedderburn/poly.hpp"
#include "wedderburn/prime_field.hpp"

#include <json.hpp>

namespace wedderburn {

class FiniteField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint64_t kMaxOrder = 1u << 22;

  /// Smallest GF(ell^M) containing GF(q) and the N-th roots of unity.
  static FiniteField ambient(std::uint64_t q, int N) {
    auto pp = nt::prime_power(static_cast<nt::i64>(q));
    if (!pp) fail(ErrorKind::BadParams, "GF order must be a prime power");
    auto [ell, r] = *pp;
    if (std::gcd(static_cast<nt::i64>(N), ell) != 1)
      fail(ErrorKind::NonCoprime, "characteristic divides the root order");
    int M = static_cast<int>(nt::lcm(r, nt::mult_order(ell, N)));
    return FiniteField(static_cast<std::uint64_t>(ell), M, static_cast<int>(r), N);
  }

  FiniteField(std::uint64_t ell, int M, int r, int N) : ell_(ell), M_(M), r_(r), N_(N) {
    if (M % r != 0) fail(ErrorKind::BadParams, "base degree must divide the field degree");
    Q_ = 1;
    for (int i = 0; i < M; ++i) {
      Q_ *= ell;
      if (Q_ > kMaxOrder) fail(ErrorKind::OrderBoundExceeded, "finite field too large for tables");
    }
    q_ = 1;
    for (int i = 0; i < r; ++i) q_ *= ell;
    if ((Q_ - 1) % static_cast<std::uint64_t>(N) != 0)
      fail(ErrorKind::BadParams, "root order does not divide the unit group order");
    PrimeField P(ell);
    modulus_ = least_irreducible(P);
    build_tables(P);
    for (auto a = 1ULL % N_, i = 0ULL;; ++i) {
      base_.push_back(static_cast<int>(a));
      if (gal_.size() < static_cast<std::size_t>(N_)) gal_.assign(N_, -1);
      gal_[a] = static_cast<long long>(nt::powmod(q_, i, Q_ - 1));
      a = nt::mulmod(a, q_ % N_, N_);
      if (a == 1ULL % N_) break;
    }
    std::sort(base_.begin(), base_.end());
  }

  int root_order() const { return N_; }
  int characteristic() const { return static_cast<int>(ell_); }
  std::uint64_t order() const { return Q_; }
  std::uint64_t base_order() const { return q_; }
  int degree() const { return M_; }
  const std::vector<int>& base_group() const { return base_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  std::string name() const { return "GF(" + std::to_string(Q_) + ")"; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const { return static_cast<Elem>(nt::mod(v, static_cast<nt::i64>(ell_))); }
  Elem from_ratio(long long n, long long d) const { return mul(from_int(n), inv(from_int(d))); }

  Elem zeta(long long k) const {
    auto step = (Q_ - 1) / static_cast<std::uint64_t>(N_);
    return exp_[(static_cast<std::uint64_t>(nt::mod(k, N_)) * step) % (Q_ - 1)];
  }

  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  bool less(Elem a, Elem b) const { return a < b; }

  Elem add(Elem a, Elem b) const {
    if (ell_ == 2) return a ^ b;
    Elem r = 0, p = 1;
    for (int i = 0; i < M_; ++i) {
      r += static_cast<Elem>(((a % ell_) + (b % ell_)) % ell_) * p;
      a /= static_cast<Elem>(ell_);
      b /= static_cast<Elem>(ell_);
      p *= static_cast<Elem>(ell_);
    }
    return r;
  }
  Elem neg(Elem a) const {
    if (ell_ == 2) return a;
    Elem r = 0, p = 1;
    for (int i = 0; i < M_; ++i) {
      r += static_cast<Elem>((ell_ - a % ell_) % ell_) * p;
      a /= static_cast<Elem>(ell_);
      p *= static_cast<Elem>(ell_);
    }
    return r;
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (Q_ - 1)];
  }
  Elem mul_int(Elem a, long long k) const { return mul(a, from_int(k)); }
  Elem inv(Elem a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in " + name());
    return exp_[(Q_ - 1 - log_[a]) % (Q_ - 1)];
  }
  Elem pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[nt::mulmod(log_[a], e % (Q_ - 1), Q_ - 1)];
  }

  /// Automorphism zeta_N -> zeta_N^a; only a in <q> mod N fix the base field.
  Elem galois(long long a, Elem x) const {
    auto e = gal_[nt::mod(a, N_)];
    if (e < 0) fail(ErrorKind::NonCoprime, "no Frobenius power maps zeta to that exponent");
    if (x == 0) return 0;
    return pow(x, static_cast<std::uint64_t>(e));
  }
  Elem frobenius(Elem x) const { return pow(x, q_); }

  Elem random_base(std::mt19937_64& rng) const {
    auto j = std::uniform_int_distribution<std::uint64_t>(0, q_ - 1)(rng);
    if (j == q_ - 1) return 0;
    return exp_[j * ((Q_ - 1) / (q_ - 1))];
  }
  bool in_base(Elem x) const { return frobenius(x) == x; }

  Elem from_root_multiset(int u, const std::vector<int>& mult) const {
    Elem r = 0;
    const int step = N_ / u;
    for (int k = 0; k < u; ++k)
      if (mult[k] != 0) r = add(r, mul_int(zeta(static_cast<long long>(k) * step), mult[k]));
    return r;
  }

  std::vector<int> digits(Elem a) const {
    std::vector<int> d;
    for (int i = 0; i < M_; ++i) {
      d.push_back(static_cast<int>(a % ell_));
      a /= static_cast<Elem>(ell_);
    }
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
  }

  std::string format(Elem a) const {
    if (a < ell_) return std::to_string(a);
    auto d = digits(a);
    std::string s;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
      if (d[i] == 0) continue;
      if (!s.empty()) s += " + ";
      if (i == 0 || d[i] != 1) s += std::to_string(d[i]);
      if (i > 0) s += (i == 0 || d[i] != 1 ? "*a" : "a") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
  }

  nlohmann::json to_json(Elem a) const {
    if (a < ell_) return a;
    return digits(a);
  }

 private:
  std::vector<std::uint64_t> code_to_poly(std::uint64_t c) const {
    std::vector<std::uint64_t> p;
    for (int i = 0; i < M_; ++i) {
      p.push_back(c % ell_);
      c /= ell_;
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
  }
  Elem poly_to_code(const std::vector<std::uint64_t>& p) const {
    Elem c = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) c = c * static_cast<Elem>(ell_) + static_cast<Elem>(p[i]);
    return c;
  }

  // Rabin's test over GF(ell).
  bool irreducible(const PrimeField& P, const Poly<PrimeField>& f) const {
    const int n = poly::degree<PrimeField>(f);
    Poly<PrimeField> X{0, 1};
    auto frob_pow = [&](int k) {
      auto h = poly::rem(P, X, f);
      for (int i = 0; i < k; ++i) h = poly::powmod(P, h, ell_, f);
      return h;
    };
    if (!poly::equal(P, frob_pow(n), poly::rem(P, X, f))) return false;
    for (auto p : nt::prime_factors(n)) {
      auto g = poly::gcd(P, f, poly::sub(P, frob_pow(n / static_cast<int>(p)), X));
      if (poly::degree<PrimeField>(g) != 0) return false;
    }
    return true;
  }

  std::vector<std::uint64_t> least_irreducible(const PrimeField& P) const {
    std::uint64_t limit = Q_;
    for (std::uint64_t c = 0; c < limit; ++c) {
      auto f = code_to_poly(c);
      f.resize(M_ + 1, 0);
      f[M_] = 1;
      if (M_ == 1 || irreducible(P, f)) return f;
    }
    fail(ErrorKind::BadParams, "no irreducible modulus found");
  }

  void build_tables(const PrimeField& P) {
    exp_.assign(Q_ - 1, 0);
    log_.assign(Q_, 0);
    auto ps = nt::prime_factors(static_cast<nt::i64>(Q_ - 1));
    auto mulp = [&](const Poly<PrimeField>& a, const Poly<PrimeField>& b) {
      return poly::rem(P, poly::mul(P, a, b), modulus_);
    };
    Poly<PrimeField> gen;
    for (std::uint64_t c = 1; c < Q_; ++c) {
      auto g = code_to_poly(c);
      bool ok = true;
      for (auto p : ps) {
        auto h = poly::powmod(P, g, (Q_ - 1) / static_cast<std::uint64_t>(p), modulus_);
        if (h.size() == 1 && h[0] == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        gen = g;
        break;
      }
    }
    Poly<PrimeField> cur{1};
    for (std::uint64_t i = 0; i + 1 < Q_; ++i) {
      Elem code = poly_to_code(cur);
      exp_[i] = code;
      log_[code] = i;
      cur = mulp(cur, gen);
    }
  }

  std::uint64_t ell_;
  int M_, r_, N_;
  std::uint64_t Q_ = 1, q_ = 1;
  std::vector<std::uint64_t> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint64_t> log_;
  std::vector<long long> gal_;
  std::vector<int> base_;
};

}  // namespace wedderburn
