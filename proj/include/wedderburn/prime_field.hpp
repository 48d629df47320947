#pragma once

// Coefficient fields without a Galois structure: the rationals (GMP) and the
// prime field GF(ell) for ell < 2^31. They back the generic polynomial and
// linear-algebra kernels and the modular character-table computation.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

#include "wedderburn/error.hpp"
#include "wedderburn/numtheory.hpp"

namespace wedderburn {

class RationalField {
 public:
  using Elem = mpq_class;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) fail(ErrorKind::DivisionByZero, "rational inverse of zero");
    return 1 / a;
  }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  int characteristic() const { return 0; }
};

class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t ell) : ell_(ell) {
    if (!nt::is_prime(static_cast<nt::i64>(ell)) || ell >= (1ULL << 31))
      fail(ErrorKind::BadParams, "prime field needs a prime below 2^31");
  }

  std::uint64_t modulus() const { return ell_; }
  std::uint64_t base_order() const { return ell_; }
  int characteristic() const { return static_cast<int>(ell_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % ell_; }
  Elem from_int(long long v) const {
    return static_cast<Elem>(nt::mod(v, static_cast<nt::i64>(ell_)));
  }
  Elem add(Elem a, Elem b) const { return (a + b) % ell_; }
  Elem sub(Elem a, Elem b) const { return (a + ell_ - b) % ell_; }
  Elem neg(Elem a) const { return (ell_ - a) % ell_; }
  Elem mul(Elem a, Elem b) const { return (a * b) % ell_; }
  Elem pow(Elem a, std::uint64_t e) const { return nt::powmod(a, e, ell_); }
  Elem inv(Elem a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in GF(p)");
    return nt::powmod(a, ell_ - 2, ell_);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem random_base(std::mt19937_64& rng) const {
    return std::uniform_int_distribution<std::uint64_t>(0, ell_ - 1)(rng);
  }
  /// x -> x^q, the generator of the Galois group over the base field.
  Elem frobenius(Elem a) const { return a; }

  /// Symmetric residue in (-ell/2, ell/2].
  long long centered(Elem a) const {
    return a > ell_ / 2 ? static_cast<long long>(a) - static_cast<long long>(ell_)
                        : static_cast<long long>(a);
  }

 private:
  std::uint64_t ell_;
};

}  // namespace wedderburn
