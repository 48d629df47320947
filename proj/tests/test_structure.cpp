#include <gtest/gtest.h>

#include <map>

#include "wedderburn/catalog.hpp"
#include "wedderburn/structure.hpp"

using namespace wedderburn;

namespace {

template <class K>
struct Fixture {
  Group G;
  CharacterTable T;
  K F;
  std::vector<CentralIdempotent<K>> es;
  Fixture(Group g, K f) : G(std::move(g)), T(ordinary_table(G)), F(std::move(f)) {
    es = pcis(F, G, T, f_classes(F, G, T));
  }
};

Fixture<CyclotomicField> over_q(const std::string& name, std::vector<int> params) {
  auto G = catalog(name, params);
  auto u = ordinary_table(G).u;
  return {G, CyclotomicField::over_cyclotomic(u, 1)};
}

// (delta, psi(1), n, m) for each component
template <class K>
std::multiset<std::tuple<int, int, int, int>> shape(const Fixture<K>& S) {
  std::multiset<std::tuple<int, int, int, int>> out;
  for (auto& e : S.es) {
    auto W = simple_module_and_commutant(S.F, S.G, S.T, e, 1);
    out.insert({W.delta, W.psi_degree, W.n, W.m});
  }
  return out;
}

}  // namespace

TEST(Structure, CentersOverQ) {
  auto C4 = over_q("C", {4});
  std::multiset<int> deltas;
  for (auto& e : C4.es) {
    auto Z = center_of_component(C4.F, C4.G, C4.T, e);
    deltas.insert(Z.delta);
    EXPECT_EQ(poly::degree<CyclotomicField>(Z.minpoly), Z.delta);
    EXPECT_TRUE(C4.F.is_zero(poly::eval(C4.F, Z.minpoly, Z.theta_value)));
  }
  EXPECT_EQ(deltas, (std::multiset<int>{1, 1, 2}));

  auto C7 = over_q("C", {7});
  deltas.clear();
  for (auto& e : C7.es) deltas.insert(center_of_component(C7.F, C7.G, C7.T, e).delta);
  EXPECT_EQ(deltas, (std::multiset<int>{1, 6}));
}

TEST(Structure, CenterEmbeddingRoundTrip) {
  auto S = over_q("C7:C3", {});
  for (auto& e : S.es) {
    auto Z = center_of_component(S.F, S.G, S.T, e);
    // omega_psi is a ring map on Z e
    auto C = oracle::class_algebra(S.G, S.T.classes);
    for (auto& b : Z.basis) {
      auto prod = oracle::cmul(S.F, C, b, Z.theta);
      EXPECT_TRUE(S.F.equal(Z.from_algebra(S.F, prod), S.F.mul(Z.from_algebra(S.F, b), Z.theta_value)));
      auto back = Z.to_algebra(S.F, Z.from_algebra(S.F, b));
      for (std::size_t k = 0; k < b.size(); ++k) EXPECT_TRUE(S.F.equal(back[k], b[k]));
    }
  }
}

TEST(Structure, BaseChangeSplitCounts) {
  std::multiset<int> lengths;
  for (auto [name, params] : std::vector<std::pair<std::string, std::vector<int>>>{{"C", {4}}, {"C", {7}}}) {
    auto S = over_q(name, params);
    for (auto& e : S.es) {
      auto Z = center_of_component(S.F, S.G, S.T, e);
      auto bc = base_change_split(S.F, S.G, S.T, e, Z);
      EXPECT_TRUE(bc.simply_transitive);
      lengths.insert(bc.orbit_length);
    }
  }
  EXPECT_EQ(lengths, (std::multiset<int>{1, 1, 2, 1, 6}));
}

TEST(Structure, QuaternionDivisionAlgebra) {
  auto S = over_q("Q8", {});
  EXPECT_EQ(shape(S), (std::multiset<std::tuple<int, int, int, int>>{
                          {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 2, 1, 2}}));
  for (auto& e : S.es)
    if (S.T.degrees[e.orbit[0]] == 2) {
      auto W = simple_module_and_commutant(S.F, S.G, S.T, e);
      EXPECT_EQ(W.dim_D, 4);
      EXPECT_EQ(W.dim_V, 4);
      EXPECT_EQ(W.certificate, "definite-quaternion");
    }
  // over Q(i) the quaternions split
  auto G = catalog("Q8", {});
  Fixture<CyclotomicField> Si(G, CyclotomicField(4, {1}));
  EXPECT_EQ(shape(Si), (std::multiset<std::tuple<int, int, int, int>>{
                           {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 2, 2, 1}}));
}

TEST(Structure, DihedralAndFrobeniusOverQ) {
  // D8: the degree-2 component is M_2(Q)
  auto D = over_q("D", {4});
  EXPECT_EQ(shape(D), (std::multiset<std::tuple<int, int, int, int>>{
                          {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 2, 2, 1}}));
  auto S = over_q("C7:C3", {});
  EXPECT_EQ(shape(S), (std::multiset<std::tuple<int, int, int, int>>{{1, 1, 1, 1}, {2, 1, 1, 1}, {2, 3, 3, 1}}));
}

TEST(Structure, FiniteFieldsHaveSchurIndexOne) {
  for (auto [name, params, q] : std::vector<std::tuple<std::string, std::vector<int>, std::uint64_t>>{
           {"Q8", {}, 3}, {"C7:C3", {}, 2}, {"SL23", {}, 5}, {"D", {5}, 3}}) {
    auto G = catalog(name, params);
    Fixture<FiniteField> S(G, FiniteField::ambient(q, ordinary_table(G).u));
    int total = 0;
    for (auto& e : S.es) {
      auto W = simple_module_and_commutant(S.F, S.G, S.T, e, 7);
      EXPECT_EQ(W.m, 1) << name;
      total += W.dim_I;
    }
    EXPECT_EQ(total, G.order()) << name;
  }
}

TEST(Structure, BinaryTetrahedralOverQ) {
  // one rational quaternion component, one M_2 over Q(sqrt -3)
  auto S = over_q("SL23", {});
  EXPECT_EQ(shape(S), (std::multiset<std::tuple<int, int, int, int>>{
                          {1, 1, 1, 1}, {2, 1, 1, 1}, {1, 2, 1, 2}, {2, 2, 2, 1}, {1, 3, 3, 1}}));
}

TEST(Structure, SplitSearchSkipsRepeatedFactors) {
  // M_2(GF(3)) has plenty of w with minimal polynomial (X - a)^2; every seed must get past them
  auto G = catalog("Q8", {});
  Fixture<FiniteField> S(G, FiniteField::ambient(3, ordinary_table(G).u));
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    for (auto& e : S.es) {
      auto W = simple_module_and_commutant(S.F, S.G, S.T, e, seed);
      EXPECT_EQ(W.m, 1) << seed;
      EXPECT_EQ(W.n, W.psi_degree) << seed;
    }
}
