#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N), power basis modulo
// Phi_N. Elements are stored as an integer numerator vector over a common
// positive denominator, kept in lowest terms.
//
// The field also records a base subgroup A of (Z/N)^*; its fixed field is the
// base field F of the computation (Q for A = all units, Q(zeta_m) for
// A = {a = 1 mod m}). Every subfield used by the library is such a fixed field.

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "wedderburn/error.hpp"
#include "wedderburn/linalg.hpp"
#include "wedderburn/numtheory.hpp"
#include "wedderburn/poly.hpp"
#include "wedderburn/prime_field.hpp"

#include <json.hpp>

namespace wedderburn {

struct Cyc {
  std::vector<mpz_class> num;
  mpz_class den = 1;
};

class CyclotomicField {
 public:
  using Elem = Cyc;

  /// Q(zeta_N) with base field fixed by `base` (all units when empty).
  explicit CyclotomicField(int N, std::vector<int> base = {}) : N_(N) {
    if (N < 1) fail(ErrorKind::BadParams, "cyclotomic order must be positive");
    auto phi_poly = poly::cyclotomic_integer(N);
    phi_ = static_cast<int>(phi_poly.size()) - 1;
    rep_.resize(N);
    // X^k mod Phi_N for 0 <= k < N with small integer coefficients.
    std::vector<long long> cur(phi_, 0);
    cur[0] = 1;
    for (int k = 0; k < N; ++k) {
      if (phi_ == 0) break;
      for (int i = 0; i < phi_; ++i)
        if (cur[i] != 0) rep_[k].push_back({i, cur[i]});
      long long top = cur[phi_ - 1];
      for (int i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (int i = 0; i < phi_; ++i) cur[i] -= top * phi_poly[i].get_si();
    }
    if (base.empty())
      for (auto a : nt::units(N)) base.push_back(static_cast<int>(a));
    base_ = std::move(base);
    std::sort(base_.begin(), base_.end());
  }

  /// Q(zeta_N) over Q(zeta_m) (m | N). m = 1 gives base Q.
  static CyclotomicField over_cyclotomic(int N, int m) {
    std::vector<int> base;
    for (auto a : nt::units(N))
      if (nt::mod(a, m) == 1 % m) base.push_back(static_cast<int>(a));
    return CyclotomicField(N, base);
  }

  int root_order() const { return N_; }
  int degree() const { return phi_; }
  int characteristic() const { return 0; }
  std::uint64_t base_order() const { return 0; }
  const std::vector<int>& base_group() const { return base_; }

  std::string name() const { return "Q(zeta_" + std::to_string(N_) + ")"; }

  Elem zero() const { return Elem{std::vector<mpz_class>(phi_, 0), 1}; }
  Elem one() const { return from_int(1); }
  Elem from_int(long long v) const {
    Elem r = zero();
    r.num[0] = static_cast<long>(v);
    return r;
  }
  Elem from_ratio(long long n, long long d) const {
    if (d == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
    Elem r = zero();
    r.num[0] = static_cast<long>(n);
    r.den = static_cast<long>(d);
    normalize(r);
    return r;
  }
  Elem from_rational(const mpq_class& q) const {
    Elem r = zero();
    r.num[0] = q.get_num();
    r.den = q.get_den();
    return r;
  }

  /// zeta_N^k.
  Elem zeta(long long k) const {
    Elem r = zero();
    for (auto [i, c] : rep_[nt::mod(k, N_)]) r.num[i] = static_cast<long>(c);
    return r;
  }

  bool is_zero(const Elem& a) const {
    for (auto& x : a.num)
      if (sgn(x) != 0) return false;
    return true;
  }
  bool equal(const Elem& a, const Elem& b) const { return a.den == b.den && a.num == b.num; }
  bool is_rational(const Elem& a) const {
    for (int i = 1; i < phi_; ++i)
      if (sgn(a.num[i]) != 0) return false;
    return true;
  }
  mpq_class to_rational(const Elem& a) const {
    if (!is_rational(a)) fail(ErrorKind::CoercionFailed, "value is not rational");
    mpq_class q(a.num.empty() ? mpz_class(0) : a.num[0], a.den);
    q.canonicalize();
    return q;
  }
  mpq_class coordinate(const Elem& a, int i) const {
    mpq_class q(a.num[i], a.den);
    q.canonicalize();
    return q;
  }

  /// Total order: lexicographic on rational coordinates.
  bool less(const Elem& a, const Elem& b) const {
    for (int i = 0; i < phi_; ++i) {
      mpz_class l = a.num[i] * b.den, r = b.num[i] * a.den;
      if (l != r) return l < r;
    }
    return false;
  }

  Elem add(const Elem& a, const Elem& b) const { return combine(a, b, false); }
  Elem sub(const Elem& a, const Elem& b) const { return combine(a, b, true); }
  Elem neg(const Elem& a) const {
    Elem r = a;
    for (auto& x : r.num) x = -x;
    return r;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    if (is_rational(a)) return scale(b, a.num[0], a.den);
    if (is_rational(b)) return scale(a, b.num[0], b.den);
    std::vector<mpz_class> acc(2 * phi_ - 1, 0);
    for (int i = 0; i < phi_; ++i) {
      if (sgn(a.num[i]) == 0) continue;
      for (int j = 0; j < phi_; ++j)
        if (sgn(b.num[j]) != 0)
          mpz_addmul(acc[i + j].get_mpz_t(), a.num[i].get_mpz_t(), b.num[j].get_mpz_t());
    }
    Elem r{std::vector<mpz_class>(acc.begin(), acc.begin() + phi_), a.den * b.den};
    for (int k = phi_; k < 2 * phi_ - 1; ++k) {
      if (sgn(acc[k]) == 0) continue;
      for (auto [i, c] : rep_[k % N_]) mpz_addmul_si(r.num[i], acc[k], c);
    }
    normalize(r);
    return r;
  }

  Elem mul_int(const Elem& a, long long k) const { return scale(a, mpz_class(static_cast<long>(k)), 1); }

  Elem inv(const Elem& a) const {
    if (is_zero(a)) fail(ErrorKind::DivisionByZero, "inverse of zero in " + name());
    if (is_rational(a)) return scale(one(), a.den, a.num[0]);
    RationalField Q;
    linalg::Mat<RationalField> m(phi_, linalg::Vec<RationalField>(phi_));
    for (int j = 0; j < phi_; ++j) {
      Elem col = mul(a, zeta(j));
      for (int i = 0; i < phi_; ++i) m[i][j] = coordinate(col, i);
    }
    linalg::Vec<RationalField> rhs(phi_, mpq_class(0));
    rhs[0] = 1;
    auto y = linalg::solve(Q, m, rhs);
    return from_coordinates(y);
  }

  Elem pow(Elem a, unsigned long long e) const {
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Elem from_coordinates(const std::vector<mpq_class>& y) const {
    mpz_class den = 1;
    for (auto& q : y) den = lcm_z(den, q.get_den());
    Elem r = zero();
    r.den = den;
    for (int i = 0; i < phi_; ++i) r.num[i] = y[i].get_num() * (den / y[i].get_den());
    normalize(r);
    return r;
  }

  /// Galois automorphism zeta_N -> zeta_N^a (gcd(a, N) = 1).
  Elem galois(long long a, const Elem& x) const {
    a = nt::mod(a, N_);
    if (a == 1 % N_ || is_rational(x)) return x;
    if (std::gcd(a, static_cast<long long>(N_)) != 1)
      fail(ErrorKind::NonCoprime, "Galois exponent not a unit");
    Elem r = zero();
    r.den = x.den;
    for (int i = 0; i < phi_; ++i) {
      if (sgn(x.num[i]) == 0) continue;
      for (auto [j, c] : rep_[(a * i) % N_]) mpz_addmul_si(r.num[j], x.num[i], c);
    }
    normalize(r);
    return r;
  }

  /// Sum_k mult[k] zeta_u^k, for u | N.
  Elem from_root_multiset(int u, const std::vector<int>& mult) const {
    Elem r = zero();
    const int step = N_ / u;
    for (int k = 0; k < u; ++k) {
      if (mult[k] == 0) continue;
      for (auto [i, c] : rep_[(k * step) % N_]) r.num[i] += static_cast<long>(c) * mult[k];
    }
    return r;
  }

  std::string format(const Elem& a) const {
    if (is_zero(a)) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < phi_; ++i) {
      if (sgn(a.num[i]) == 0) continue;
      mpq_class c = coordinate(a, i);
      if (!first) os << (sgn(c) < 0 ? " - " : " + ");
      else if (sgn(c) < 0) os << "-";
      mpq_class ac = abs(c);
      if (i == 0) os << ac.get_str();
      else {
        if (ac != 1) os << ac.get_str() << "*";
        os << "zeta" << N_ << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

  nlohmann::json to_json(const Elem& a) const {
    if (is_rational(a)) return to_rational(a).get_str();
    nlohmann::json coeffs = nlohmann::json::array();
    for (int i = 0; i < phi_; ++i) coeffs.push_back(coordinate(a, i).get_str());
    return {{"zeta", N_}, {"coeffs", coeffs}};
  }

 private:
  static mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static void mpz_addmul_si(mpz_class& acc, const mpz_class& x, long long c) {
    if (c >= 0) mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(c));
    else mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-c));
  }

  Elem scale(const Elem& a, const mpz_class& n, const mpz_class& d) const {
    if (sgn(d) == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
    Elem r = a;
    for (auto& x : r.num) x *= n;
    r.den = a.den * d;
    normalize(r);
    return r;
  }

  Elem combine(const Elem& a, const Elem& b, bool subtract) const {
    Elem r;
    r.num.resize(phi_);
    if (a.den == b.den) {
      r.den = a.den;
      for (int i = 0; i < phi_; ++i) {
        if (subtract) r.num[i] = a.num[i] - b.num[i];
        else r.num[i] = a.num[i] + b.num[i];
      }
    } else {
      r.den = a.den * b.den;
      for (int i = 0; i < phi_; ++i) {
        r.num[i] = a.num[i] * b.den;
        if (subtract) mpz_submul(r.num[i].get_mpz_t(), b.num[i].get_mpz_t(), a.den.get_mpz_t());
        else mpz_addmul(r.num[i].get_mpz_t(), b.num[i].get_mpz_t(), a.den.get_mpz_t());
      }
    }
    normalize(r);
    return r;
  }

  static void normalize(Elem& r) {
    if (sgn(r.den) < 0) {
      r.den = -r.den;
      for (auto& x : r.num) x = -x;
    }
    if (r.den == 1) return;
    mpz_class g = r.den;
    for (auto& x : r.num) {
      if (sgn(x) == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
    bool all_zero = true;
    for (auto& x : r.num)
      if (sgn(x) != 0) all_zero = false;
    if (all_zero) {
      r.den = 1;
      return;
    }
    r.den /= g;
    for (auto& x : r.num) x /= g;
  }

  int N_;
  int phi_ = 0;
  std::vector<std::vector<std::pair<int, long long>>> rep_;
  std::vector<int> base_;
};

}  // namespace wedderburn
