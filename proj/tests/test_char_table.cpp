#include <gtest/gtest.h>

#include <set>

#include "wedderburn/catalog.hpp"
#include "wedderburn/char_table.hpp"

using namespace wedderburn;

namespace {

struct Named {
  std::string name;
  std::vector<int> params;
};

const std::vector<Named> kGroups = {{"C", {1}},  {"C", {4}},      {"C", {6}},    {"C", {7}},   {"C", {12}},
                                    {"CxC", {2}}, {"CxC", {3}},   {"CxC", {5}},  {"D", {3}},   {"D", {4}},
                                    {"D", {5}},  {"Q8", {}},      {"C7:C3", {}}, {"Cp2", {2}}, {"Cp2", {3}},
                                    {"Cp2", {5}}, {"Q8oC4", {}},  {"SL23", {}}};

// Regular character decomposition: multiplicity of psi in the regular
// character is psi(1), which pins down degrees independently of the lift.
int regular_multiplicity(const CyclotomicField& K, const CharacterTable& T, int i) {
  ClassFunction<CyclotomicField> reg(T.class_count(), K.zero());
  reg[0] = K.from_int(T.order);
  auto psi = T.embed(K, i);
  return static_cast<int>(K.to_rational(inner_product(K, T, reg, psi)).get_num().get_si());
}

}  // namespace

TEST(CharTable, KnownDegrees) {
  auto q8 = ordinary_table(catalog("Q8", {}));
  EXPECT_EQ(q8.degrees, (std::vector<int>{1, 1, 1, 1, 2}));
  auto sl = ordinary_table(catalog("SL23", {}));
  EXPECT_EQ(sl.degrees, (std::vector<int>{1, 1, 1, 2, 2, 2, 3}));
  auto c4 = ordinary_table(catalog("C", {4}));
  CyclotomicField K(4);
  std::set<std::string> vals;
  for (int i = 0; i < 4; ++i)
    for (auto& v : c4.values[i]) vals.insert(K.format(v));
  EXPECT_EQ(vals, (std::set<std::string>{"1", "-1", "zeta4^1", "-zeta4^1"}));
}

TEST(CharTable, OrthogonalityAndDegreesDivide) {
  for (auto& g : kGroups) {
    auto G = catalog(g.name, g.params);
    auto T = ordinary_table(G);
    CyclotomicField K(T.u);
    ASSERT_EQ(T.count(), T.class_count()) << g.name;
    long long sumsq = 0;
    for (int i = 0; i < T.count(); ++i) {
      sumsq += static_cast<long long>(T.degrees[i]) * T.degrees[i];
      EXPECT_EQ(G.order() % T.degrees[i], 0);
      EXPECT_EQ(regular_multiplicity(K, T, i), T.degrees[i]);
    }
    EXPECT_EQ(sumsq, G.order());
    // column orthogonality: sum_i psi_i(g_k) psi_i(g_l^-1) = |C_G(g_k)| delta_kl
    for (int k = 0; k < T.class_count(); ++k)
      for (int l = 0; l < T.class_count(); ++l) {
        auto acc = K.zero();
        for (int i = 0; i < T.count(); ++i)
          acc = K.add(acc, K.mul(T.values[i][k], T.values[i][T.inverse_class[l]]));
        auto expect = k == l ? K.from_int(G.order() / T.classes.sizes[k]) : K.zero();
        EXPECT_TRUE(K.equal(acc, expect)) << g.name << " " << k << " " << l;
      }
  }
}

TEST(CharTable, IndependentOfPrimeAndSeed) {
  auto G = catalog("SL23", {});
  auto a = ordinary_table(G, 0), b = ordinary_table(G, 17), c = ordinary_table(G, 0, 1000);
  EXPECT_EQ(a.roots, b.roots);
  EXPECT_NE(a.ell, c.ell);
  EXPECT_EQ(a.roots, c.roots);
}

TEST(CharTable, RestrictInduceAndReciprocity) {
  auto G = catalog("Q8", {});
  auto TG = ordinary_table(G);
  auto subs = prime_index_normal_subgroups(G, 2);
  auto& H = subs[auto_subgroup(G, subs)];
  auto TH = ordinary_table(H.group);
  CyclotomicField K(4);
  // degree-2 character restricted to C4 is the sum of the two faithful linear characters
  auto res = restrict_to<CyclotomicField>(TG, H, TH, TG.embed(K, 4));
  int faithful = 0;
  for (int j = 0; j < TH.count(); ++j) {
    auto c = K.to_rational(inner_product(K, TH, res, TH.embed(K, j)));
    bool is_faithful = TH.roots[j][TH.classes.class_of[H.from_parent[G.find("x")]]][2] == 1;
    EXPECT_EQ(c, is_faithful ? 1 : 0);
    faithful += is_faithful;
  }
  EXPECT_EQ(faithful, 2);
  // Ind of a faithful linear character is the degree-2 character
  for (int j = 0; j < TH.count(); ++j) {
    auto ind = induce(K, TG, H, TH, TH.embed(K, j));
    EXPECT_TRUE(K.equal(ind[0], K.from_int(2)));
    // Frobenius reciprocity against every row of G
    for (int i = 0; i < TG.count(); ++i) {
      auto lhs = inner_product(K, TG, ind, TG.embed(K, i));
      auto rhs = inner_product(K, TH, TH.embed(K, j), restrict_to<CyclotomicField>(TG, H, TH, TG.embed(K, i)));
      EXPECT_TRUE(K.equal(lhs, rhs));
    }
  }
  // brute-force conjugation-sum formula for induction on SL2(3) / Q8
  auto S = catalog("SL23", {});
  auto TS = ordinary_table(S);
  auto ss = all_prime_index_normal_subgroups(S);
  auto& Q = ss[auto_subgroup(S, ss)];
  auto TQ = ordinary_table(Q.group);
  CyclotomicField K12(12);
  for (int j = 0; j < TQ.count(); ++j) {
    auto f = TQ.embed(K12, j);
    auto ind = induce(K12, TS, Q, TQ, f);
    for (int k = 0; k < TS.class_count(); ++k) {
      auto acc = K12.zero();
      int g = TS.classes.representatives[k];
      for (int t = 0; t < S.order(); ++t) {
        int c = S.mul(t, S.mul(g, S.inv(t)));
        if (Q.contains(c)) acc = K12.add(acc, f[TQ.classes.class_of[Q.from_parent[c]]]);
      }
      acc = K12.mul(acc, K12.from_ratio(1, Q.group.order()));
      EXPECT_TRUE(K12.equal(acc, ind[k]));
    }
  }
}

TEST(CharTable, GaloisImagePermutesRows) {
  auto T = ordinary_table(catalog("C7:C3", {}));
  for (long long a : nt::units(21)) {
    std::set<int> img;
    for (int i = 0; i < T.count(); ++i) img.insert(T.galois_image(i, a));
    EXPECT_EQ(static_cast<int>(img.size()), T.count());
  }
  int trivial = -1;
  for (int i = 0; i < T.count(); ++i) {
    bool all_one = T.degrees[i] == 1;
    for (int k = 0; k < T.class_count(); ++k) all_one = all_one && T.roots[i][k][0] == 1;
    if (all_one) trivial = i;
  }
  ASSERT_GE(trivial, 0);
  EXPECT_EQ(T.galois_image(trivial, 2), trivial);

}
