#include <gtest/gtest.h>

#include <random>

#include "wedderburn/cyclotomic.hpp"
#include "wedderburn/finite_field.hpp"
#include "wedderburn/poly.hpp"

using namespace wedderburn;

namespace {

std::vector<long> as_longs(const std::vector<mpz_class>& v) {
  std::vector<long> out;
  for (auto& x : v) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST(Cyclotomic, SmallIndices) {
  EXPECT_EQ(as_longs(poly::cyclotomic_integer(1)), (std::vector<long>{-1, 1}));
  EXPECT_EQ(as_longs(poly::cyclotomic_integer(12)), (std::vector<long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(as_longs(poly::cyclotomic_integer(7)), std::vector<long>(7, 1));
  // Phi_105 is the first with a coefficient outside {-1,0,1}
  auto c = as_longs(poly::cyclotomic_integer(105));
  EXPECT_EQ(*std::min_element(c.begin(), c.end()), -2);
}

TEST(Cyclotomic, GcdAndExactDivision) {
  RationalField Q;
  auto phi4 = poly::cyclotomic_poly(4);
  Poly<RationalField> x2p1{1, 0, 1};
  EXPECT_TRUE(poly::equal(Q, poly::gcd(Q, phi4, x2p1), x2p1));
  Poly<RationalField> xp(6, mpq_class(0));
  xp[0] = -1;
  xp[5] = 1;
  EXPECT_TRUE(poly::equal(Q, poly::exact_div(Q, xp, Poly<RationalField>{-1, 1}), poly::cyclotomic_poly(5)));
  EXPECT_THROW(poly::exact_div(Q, xp, Poly<RationalField>{1, 1}), Error);
}

TEST(CyclotomicField, FieldAxiomsAndInverse) {
  CyclotomicField K(12);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = K.zero();
    for (int i = 0; i < K.degree(); ++i) a = K.add(a, K.mul(K.from_ratio(d(rng), 1 + trial % 3), K.zeta(i)));
    if (K.is_zero(a)) continue;
    EXPECT_TRUE(K.equal(K.mul(a, K.inv(a)), K.one()));
  }
  EXPECT_TRUE(K.equal(K.pow(K.zeta(1), 12), K.one()));
  EXPECT_FALSE(K.equal(K.pow(K.zeta(1), 6), K.one()));
  EXPECT_TRUE(K.equal(K.mul(K.zeta(3), K.zeta(3)), K.from_int(-1)));
}

TEST(CyclotomicField, GaloisIsAHomomorphismAndComposes) {
  CyclotomicField K(15);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  auto rand_elem = [&] {
    auto a = K.zero();
    for (int i = 0; i < K.degree(); ++i) a = K.add(a, K.mul(K.from_int(d(rng)), K.zeta(i)));
    return a;
  };
  auto units = nt::units(15);
  for (int t = 0; t < 100; ++t) {
    auto x = rand_elem(), y = rand_elem();
    auto a = units[t % units.size()], b = units[(3 * t + 1) % units.size()];
    EXPECT_TRUE(K.equal(K.galois(a, K.mul(x, y)), K.mul(K.galois(a, x), K.galois(a, y))));
    EXPECT_TRUE(K.equal(K.galois(a, K.galois(b, x)), K.galois(a * b, x)));
  }
  // zeta + zeta^-1 is fixed by a = -1 but not by a = 2
  auto c = K.add(K.zeta(1), K.zeta(14));
  EXPECT_TRUE(K.equal(K.galois(14, c), c));
  EXPECT_FALSE(K.equal(K.galois(2, c), c));
}

TEST(FiniteField, SmallFieldsAndRoots) {
  auto F8 = FiniteField::ambient(2, 7);
  EXPECT_EQ(F8.order(), 8u);
  EXPECT_EQ(F8.base_group(), (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(F8.pow(F8.zeta(1), 7), F8.one());
  EXPECT_NE(F8.zeta(1), F8.one());
  // modulus is the least irreducible cubic, X^3 + X + 1
  EXPECT_EQ(F8.modulus(), (std::vector<std::uint64_t>{1, 1, 0, 1}));
  auto F9 = FiniteField::ambient(9, 4);
  EXPECT_EQ(F9.order(), 9u);
  EXPECT_EQ(F9.modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
  for (std::uint32_t a = 1; a < 9; ++a) EXPECT_EQ(F9.mul(a, F9.inv(a)), 1u);
  EXPECT_THROW(FiniteField::ambient(4, 6), Error);
}

TEST(FiniteField, PhiSevenOverGF2) {
  auto K = FiniteField::ambient(2, 7);
  Poly<FiniteField> phi7(8 - 1, K.one());
  auto fs = poly::factor_squarefree_finite(K, phi7, 0);
  ASSERT_EQ(fs.size(), 2u);
  std::sort(fs.begin(), fs.end());
  EXPECT_EQ(fs[0], (Poly<FiniteField>{1, 0, 1, 1}));
  EXPECT_EQ(fs[1], (Poly<FiniteField>{1, 1, 0, 1}));
  // power sums of X^3+X+1 agree with direct sums over its roots in GF(8)
  auto P = poly::power_sums(K, fs[0], 7);
  std::vector<std::uint32_t> roots;
  for (std::uint32_t z = 0; z < 8; ++z)
    if (poly::eval(K, fs[0], z) == 0) roots.push_back(z);
  ASSERT_EQ(roots.size(), 3u);
  for (int t = 0; t < 7; ++t) {
    std::uint32_t s = 0;
    for (auto r : roots) s = K.add(s, K.pow(r, t));
    EXPECT_EQ(P[t], s) << "t=" << t;
  }
}

TEST(FiniteField, CubeRootsOfUnityInGF4) {
  auto K = FiniteField::ambient(4, 3);
  EXPECT_EQ(K.order(), 4u);
  Poly<FiniteField> f{K.neg(1), 0, 0, 1};
  auto fs = poly::factor_squarefree_finite(K, f, 5);
  ASSERT_EQ(fs.size(), 3u);
  for (auto& g : fs) EXPECT_EQ(poly::degree<FiniteField>(g), 1);
}

TEST(PowerSums, NewtonAgreesWithCyclotomicRoots) {
  RationalField Q;
  auto P = poly::power_sums(Q, poly::cyclotomic_poly(3), 3);
  EXPECT_EQ(P, (std::vector<mpq_class>{2, -1, -1}));
  auto P1 = poly::power_sums(Q, Poly<RationalField>{-1, 1}, 5);
  for (auto& x : P1) EXPECT_EQ(x, 1);
  EXPECT_THROW(poly::power_sums(Q, Poly<RationalField>{1, 2}, 3), Error);
  // Phi_p for p <= 13 checked against explicit sums in Q(zeta_p)
  for (int p : {2, 3, 5, 7, 11, 13}) {
    CyclotomicField K(p);
    auto Pp = poly::power_sums(Q, poly::cyclotomic_poly(p), p);
    for (int t = 0; t < p; ++t) {
      auto s = K.zero();
      for (int j = 1; j < p; ++j) s = K.add(s, K.zeta(static_cast<long long>(j) * t));
      EXPECT_EQ(K.to_rational(s), Pp[t]) << p << " " << t;
    }
  }
}
