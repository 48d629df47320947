#pragma once

// Splitting of a pci e of F[H] in F[G] for H normal of prime index p, and the
// decomposition of the induced representation.
//
// Conventions: x is a lift of a generator of G/H, C(x) its class sum in F[G],
// Z the realized center of F[H]e (embedded through psi, see structure.hpp).
// Elements of Z are handled as their omega_psi images in the ambient field.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wedderburn/algebra.hpp"
#include "wedderburn/char_table.hpp"
#include "wedderburn/error.hpp"
#include "wedderburn/f_theory.hpp"
#include "wedderburn/field_spec.hpp"
#include "wedderburn/oracle.hpp"
#include "wedderburn/poly.hpp"
#include "wedderburn/structure.hpp"

namespace wedderburn {

/// Everything about (G, H, F) shared by the per-pci analyses.
template <class K>
struct BermanSetting {
  K F;
  Group G;
  Subgroup H;
  int p = 0;
  CharacterTable TG, TH;
  FClassPartition PG, PH;
  std::vector<CentralIdempotent<K>> pcis_G, pcis_H;
  std::vector<AlgebraElement<K>> lifted_H;  ///< pcis of F[H] inside F[G]
  std::vector<std::vector<typename K::Elem>> oracle_G;
  std::uint64_t seed = 0;
  CyclotomicField exact;  ///< Q(zeta_u) for multiplicities, whatever F is

  mutable std::map<int, WedderburnComponent<K>> structure_G, structure_H;

  const WedderburnComponent<K>& component_G(int i) const {
    auto it = structure_G.find(i);
    if (it == structure_G.end())
      it = structure_G.emplace(i, simple_module_and_commutant(F, G, TG, pcis_G[i], seed)).first;
    return it->second;
  }
  const WedderburnComponent<K>& component_H(int j) const {
    auto it = structure_H.find(j);
    if (it == structure_H.end())
      it = structure_H.emplace(j, simple_module_and_commutant(F, H.group, TH, pcis_H[j], seed)).first;
    return it->second;
  }
};

template <class K>
BermanSetting<K> berman_setting(const K& F, const Group& G, const Subgroup& H, std::uint64_t seed = 0) {
  if (!is_normal(G, H) || !nt::is_prime(H.index)) fail(ErrorKind::BadParams, "subgroup is not normal of prime index");
  auto TG = ordinary_table(G);
  CyclotomicField exact(TG.u, {1});
  BermanSetting<K> S{F, G, H, H.index, std::move(TG), ordinary_table(H.group), {}, {}, {}, {}, {}, {}, seed, exact, {}, {}};
  S.PG = f_classes(F, G, S.TG);
  S.PH = f_classes(F, H.group, S.TH);
  S.pcis_G = pcis(F, G, S.TG, S.PG);
  S.pcis_H = pcis(F, H.group, S.TH, S.PH);
  for (auto& e : S.pcis_H) S.lifted_H.push_back(algebra::embed_subgroup(F, G, H, e.element));
  S.oracle_G = oracle::pcis(F, G, S.TG.classes, seed).idempotents;
  return S;
}

namespace berman_detail {

template <class K>
int find_element(const K& F, const std::vector<AlgebraElement<K>>& list, const AlgebraElement<K>& a) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (algebra::equal(F, list[i], a)) return static_cast<int>(i);
  return -1;
}

template <class K>
int find_pci(const BermanSetting<K>& S, const AlgebraElement<K>& a) {
  for (std::size_t i = 0; i < S.pcis_G.size(); ++i)
    if (algebra::equal(S.F, S.pcis_G[i].element, a)) return static_cast<int>(i);
  return -1;
}

/// Element of F[G] supported on H, read back in F[H].
template <class K>
AlgebraElement<K> to_subgroup(const BermanSetting<K>& S, const AlgebraElement<K>& a) {
  AlgebraElement<K> r(S.H.members.size(), S.F.zero());
  for (int g = 0; g < S.G.order(); ++g) {
    if (S.F.is_zero(a[g])) continue;
    if (!S.H.contains(g)) fail(ErrorKind::NotInCenter, "element is not supported on the subgroup");
    r[S.H.from_parent[g]] = a[g];
  }
  return r;
}

/// z e in F[G] for z in the realized center.
template <class K>
AlgebraElement<K> center_element(const BermanSetting<K>& S, const RealizedCenter<K>& Z, const typename K::Elem& z) {
  auto c = Z.to_algebra(S.F, z);
  return algebra::embed_subgroup(S.F, S.G, S.H, algebra::from_class_coeffs(S.F, S.H.group, S.TH.classes, c));
}

inline int exact_integer(const CyclotomicField& Q, const Cyc& v) {
  if (!Q.is_rational(v)) fail(ErrorKind::ConsistencyCheckFailed, "multiplicity is not rational");
  mpq_class q = Q.to_rational(v);
  if (q.get_den() != 1) fail(ErrorKind::ConsistencyCheckFailed, "multiplicity is not an integer");
  return static_cast<int>(q.get_num().get_si());
}

}  // namespace berman_detail

/// Index of the pci x e x^-1 of F[H].
template <class K>
int conjugate_pci(const BermanSetting<K>& S, int j, int x) {
  int i = berman_detail::find_element(S.F, S.lifted_H, algebra::conjugate<K>(S.G, S.lifted_H[j], x));
  if (i < 0) fail(ErrorKind::NotAPci, "conjugate is not a pci of the subgroup algebra");
  return i;
}

template <class K>
struct LambdaSearch {
  std::optional<typename K::Elem> lambda;  ///< first nonzero value found
  int lift = -1;                           ///< element giving it
  bool exhausted = false;                  ///< every lift gave zero
};

/// omega_psi(C(x)^p e) for one lift x; fails with NotInCenter when the
/// product is not a multiple of e by the center.
template <class K>
typename K::Elem lambda_at(const BermanSetting<K>& S, int j, const RealizedCenter<K>& Z, int x) {
  const auto& F = S.F;
  auto cx = algebra::class_sum(F, S.G, S.TG.classes, S.TG.classes.class_of[x]);
  auto c = algebra::mul(F, S.G, cx, S.lifted_H[j]);
  auto cp = algebra::power(F, S.G, c, S.p);
  auto coeffs = algebra::class_coeffs(F, S.TH.classes, berman_detail::to_subgroup(S, cp));
  auto lambda = Z.from_algebra(F, coeffs);
  auto back = Z.to_algebra(F, lambda);
  for (std::size_t k = 0; k < back.size(); ++k)
    if (!F.equal(back[k], coeffs[k])) fail(ErrorKind::NotInCenter, "C(x)^p e is not in the center times e");
  return lambda;
}

/// Search over G \ H in element order (one lift per class of G).
template <class K>
LambdaSearch<K> lambda_eigenvalue(const BermanSetting<K>& S, int j, const RealizedCenter<K>& Z) {
  LambdaSearch<K> out;
  std::set<int> tried;
  for (int x = 0; x < S.G.order(); ++x) {
    if (S.H.contains(x) || !tried.insert(S.TG.classes.class_of[x]).second) continue;
    auto l = lambda_at(S, j, Z, x);
    if (!S.F.is_zero(l)) {
      out.lambda = l;
      out.lift = x;
      return out;
    }
  }
  out.exhausted = true;
  return out;
}

struct Constituent {
  int pci = 0;           ///< index among the pcis of F[G]
  int multiplicity = 0;  ///< in the induced representation
  int degree = 0;        ///< F-degree
  int delta = 1, n = 1, m = 1;
};

struct InductionRecord {
  int eta_degree = 0, eta_m = 1, eta_n = 1, eta_delta = 1;
  std::vector<Constituent> constituents;
  std::string shape;  ///< irreducible | p_rho | distinct | rho0_plus_s
  int s = 0;          ///< case C multiplicity
  bool matches_split = false;  ///< constituents are exactly the split pcis
  bool degree_sum = false;     ///< sum of multiplicity * degree = p deg(eta)
  bool schur = false;          ///< Schur index bookkeeping
  bool dk = true;              ///< d k = p - 1 (case C)
  bool s_divides = true;       ///< s | gcd(m, d) (case C)
  bool degrees = true;         ///< s deg(rho_i) = d deg(eta) (case C)
  bool consistent() const { return matches_split && degree_sum && schur && dk && s_divides && degrees; }
};

template <class K>
struct BermanReport {
  int pci = 0;  ///< index among the pcis of F[H]
  int p = 0;
  bool stable = false;
  std::vector<int> conjugates;  ///< x-orbit of the pci, starting with it
  bool eta1_stable = false;
  std::string kase;  ///< unstable | 1 | A | B | C
  std::optional<typename K::Elem> lambda;
  int lift = -1;
  bool lambda_exhausted = false;
  std::vector<typename K::Elem> roots;
  int d = 0, k = 0;
  std::vector<int> split;  ///< indices among the pcis of F[G], in emission order
  std::vector<AlgebraElement<K>> split_elements;
  IdempotentChecks checks;
  bool primitive = false;     ///< every emitted idempotent is a pci (oracle)
  bool count_ok = false;      ///< 1, p or 1 + k as the case demands
  int alternative_lifts = 0;  ///< other lifts re-run
  bool lifts_agree = true;
  InductionRecord induction;

  bool ok() const { return checks.all() && primitive && count_ok && lifts_agree && induction.consistent(); }
};

namespace berman_detail {

/// (1/p) sum_t w_t c^t with c^0 = e.
template <class K>
AlgebraElement<K> averaged_powers(const BermanSetting<K>& S, const AlgebraElement<K>& e, const AlgebraElement<K>& c,
                                  const std::vector<AlgebraElement<K>>& weights) {
  const auto& F = S.F;
  auto acc = algebra::zero(F, S.G);
  auto ct = e;
  for (int t = 0; t < S.p; ++t) {
    acc = algebra::add(F, acc, algebra::mul(F, S.G, weights[t], ct));
    ct = algebra::mul(F, S.G, ct, c);
  }
  return algebra::scale(F, acc, F.inv(F.from_int(S.p)));
}

/// One p-th root of lambda in the ambient field, from an extension of psi to G:
/// omega_chi(C(x)) for chi restricting to psi.
template <class K>
typename K::Elem extension_root(const BermanSetting<K>& S, const RealizedCenter<K>& Z, int x) {
  const auto& Q = S.exact;
  auto psi = S.TH.embed(Q, Z.psi);
  for (int i = 0; i < S.TG.count(); ++i) {
    if (S.TG.degrees[i] != Z.psi_degree) continue;
    auto res = restrict_to<CyclotomicField>(S.TG, S.H, S.TH, S.TG.embed(Q, i));
    if (Q.is_zero(inner_product(Q, S.TH, res, psi))) continue;
    auto chi = S.TG.embed(S.F, i);
    int k = S.TG.classes.class_of[x];
    return S.F.mul(S.F.mul_int(chi[k], S.TG.classes.sizes[k]), S.F.inv(S.F.from_int(S.TG.degrees[i])));
  }
  fail(ErrorKind::VerificationFailed, "stable character has no extension");
}

}  // namespace berman_detail

/// Case analysis and splitting of pci j of F[H]. A lift of -1 searches for
/// one with nonzero lambda; otherwise the given lift is used as is.
template <class K>
BermanReport<K> split(const BermanSetting<K>& S, int j, int lift = -1) {
  using namespace berman_detail;
  const auto& F = S.F;
  BermanReport<K> R;
  R.pci = j;
  R.p = S.p;
  const int x0 = S.H.lift;
  const auto& e = S.lifted_H[j];

  R.conjugates = {j};
  for (int t = 1, i = j; t < S.p; ++t) {
    i = conjugate_pci(S, i, x0);
    R.conjugates.push_back(i);
  }
  R.stable = R.conjugates[1] == j;
  auto total = e;
  std::vector<AlgebraElement<K>> es;
  if (!R.stable) {
    std::set<int> distinct(R.conjugates.begin(), R.conjugates.end());
    if (static_cast<int>(distinct.size()) != S.p) fail(ErrorKind::VerificationFailed, "conjugation orbit is not of length p");
    R.kase = "unstable";
    total = algebra::zero(F, S.G);
    for (int i : R.conjugates) total = algebra::add(F, total, S.lifted_H[i]);
    es = {total};
  } else {
    auto Z = center_of_component(F, S.H.group, S.TH, S.pcis_H[j]);
    auto bc = base_change_split(F, S.H.group, S.TH, S.pcis_H[j], Z);
    auto e1 = algebra::embed_subgroup(F, S.G, S.H, bc.pcis[0].element);
    R.eta1_stable = algebra::equal(F, algebra::conjugate<K>(S.G, e1, x0), e1);
    LambdaSearch<K> L;
    if (lift >= 0) {
      if (S.H.contains(lift)) fail(ErrorKind::BadParams, "lift lies in the subgroup");
      auto l = lambda_at(S, j, Z, lift);
      if (!F.is_zero(l)) L.lambda = l, L.lift = lift;
      else L.exhausted = true;
    } else if (R.eta1_stable) {
      L = lambda_eigenvalue(S, j, Z);
    } else {
      // C(x)^p e vanishes for every x outside H; confirm on the first lift
      L.lift = x0;
      if (!F.is_zero(lambda_at(S, j, Z, x0))) fail(ErrorKind::VerificationFailed, "lambda nonzero for an unstable constituent");
      L.exhausted = true;
    }
    R.lambda = L.lambda;
    R.lift = L.lift;
    R.lambda_exhausted = L.exhausted;
    if (!R.eta1_stable || !L.lambda) {
      R.kase = "1";
      es = {e};
    } else {
      const int x = L.lift;
      auto kappa = extension_root(S, Z, x);
      R.roots = pth_roots_from(F, *L.lambda, S.p, kappa, Z.stabilizer);
      auto cx = algebra::mul(F, S.G, algebra::class_sum(F, S.G, S.TG.classes, S.TG.classes.class_of[x]), e);
      auto weight = [&](const typename K::Elem& z) { return center_element(S, Z, z); };
      if (R.roots.empty()) {
        R.kase = "A";
        es = {e};
      } else if (static_cast<int>(R.roots.size()) == S.p) {
        R.kase = "B";
        if (!fixed_by(F, Z.stabilizer, F.zeta(F.root_order() / S.p)))
          fail(ErrorKind::VerificationFailed, "p distinct roots without zeta_p in the center");
        std::vector<AlgebraElement<K>> ones(S.p, e);
        for (auto& mu : R.roots) {
          auto c = algebra::mul(F, S.G, cx, weight(F.inv(mu)));
          es.push_back(averaged_powers(S, e, c, ones));
        }
      } else if (R.roots.size() == 1) {
        R.kase = "C";
        auto c = algebra::mul(F, S.G, cx, weight(F.inv(R.roots[0])));
        std::vector<AlgebraElement<K>> ones(S.p, e);
        es.push_back(averaged_powers(S, e, c, ones));
        auto cf = factor_cyclotomic(F, S.p, Z.stabilizer);
        R.d = cf.d;
        R.k = cf.k;
        for (auto& f : cf.factors) {
          auto P = poly::power_sums(F, f, S.p);
          // sum over the roots zeta of f of (c / zeta)^t gives P_{-t}
          std::vector<AlgebraElement<K>> w;
          for (int t = 0; t < S.p; ++t) w.push_back(weight(P[(S.p - t) % S.p]));
          es.push_back(averaged_powers(S, e, c, w));
        }
      } else {
        fail(ErrorKind::VerificationFailed, "number of p-th roots is neither 0, 1 nor p");
      }
    }
  }

  for (auto& a : es)
    if (!algebra::over_base(F, a)) fail(ErrorKind::CoercionFailed, "split idempotent outside F[G]");
  R.split_elements = es;
  R.checks = check_idempotents(F, S.G, es, total);
  R.primitive = true;
  for (auto& a : es) {
    int i = find_pci(S, a);
    R.split.push_back(i);
    if (i < 0) {
      R.primitive = false;
      continue;
    }
    bool in_oracle = false;
    for (auto& o : S.oracle_G) {
      bool same = true;
      for (std::size_t c = 0; c < o.size() && same; ++c) same = F.equal(o[c], S.pcis_G[i].coeffs[c]);
      in_oracle = in_oracle || same;
    }
    R.primitive = R.primitive && in_oracle;
  }
  const int n = static_cast<int>(es.size());
  if (R.kase == "B") R.count_ok = n == S.p;
  else if (R.kase == "C") R.count_ok = n == 1 + R.k && R.d * R.k == S.p - 1;
  else R.count_ok = n == 1;
  return R;
}

/// Decomposition of the induced representation against the split pcis, with
/// the Schur index bookkeeping checked against recomputed structure.
template <class K>
InductionRecord induced_decomposition(const BermanSetting<K>& S, const BermanReport<K>& R) {
  using namespace berman_detail;
  const auto& Q = S.exact;
  InductionRecord I;
  const auto& eta = S.pcis_H[R.pci];
  const auto& We = S.component_H(R.pci);
  I.eta_m = We.m;
  I.eta_n = We.n;
  I.eta_delta = We.delta;
  I.eta_degree = We.dim_V;
  if (I.eta_degree != We.m * static_cast<int>(eta.orbit.size()) * S.TH.degrees[eta.orbit[0]])
    fail(ErrorKind::ConsistencyCheckFailed, "F-degree of eta differs from m times the orbit degree");

  // <Ind tau_eta, psi'> = m_eta sum_{psi in orbit} <psi, Res psi'>
  for (std::size_t i = 0; i < S.pcis_G.size(); ++i) {
    int rep = S.pcis_G[i].orbit[0];
    auto res = restrict_to<CyclotomicField>(S.TG, S.H, S.TH, S.TG.embed(Q, rep));
    int total = 0;
    for (int a : eta.orbit) total += exact_integer(Q, inner_product(Q, S.TH, S.TH.embed(Q, a), res));
    if (total == 0) continue;
    const auto& W = S.component_G(static_cast<int>(i));
    if ((total * I.eta_m) % W.m != 0) fail(ErrorKind::ConsistencyCheckFailed, "multiplicity is not integral");
    I.constituents.push_back({static_cast<int>(i), total * I.eta_m / W.m, W.dim_V, W.delta, W.n, W.m});
  }

  std::vector<int> got, want(R.split);
  for (auto& c : I.constituents) got.push_back(c.pci);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  I.matches_split = got == want;
  int sum = 0;
  for (auto& c : I.constituents) sum += c.multiplicity * c.degree;
  I.degree_sum = sum == S.p * I.eta_degree;

  const int p = S.p, m = I.eta_m;
  auto by_pci = [&](int pci) -> const Constituent* {
    for (auto& c : I.constituents)
      if (c.pci == pci) return &c;
    return nullptr;
  };
  if (R.kase == "unstable" || R.kase == "1" || R.kase == "A") {
    if (I.constituents.size() != 1) {
      I.schur = false;
      return I;
    }
    const auto& c = I.constituents[0];
    if (c.multiplicity == 1) I.shape = "irreducible";
    else if (c.multiplicity == p) I.shape = "p_rho";
    else I.shape = "other";
    if (R.kase == "unstable") {
      // M_n(D) for eta becomes M_{np}(D)
      I.schur = c.multiplicity == 1 && c.m == m && c.delta == I.eta_delta && c.n == I.eta_n * p;
    } else if (R.kase == "1") {
      I.schur = (c.multiplicity == 1 && c.m == m * p) || (c.multiplicity == p && c.m == m);
    } else {
      I.schur = (c.multiplicity == 1 && c.m == m) || (c.multiplicity == p && m % p == 0 && c.m == m / p);
    }
  } else if (R.kase == "B") {
    I.shape = "distinct";
    I.schur = static_cast<int>(I.constituents.size()) == p;
    for (auto& c : I.constituents) I.schur = I.schur && c.multiplicity == 1 && c.m == m;
  } else {
    I.shape = "rho0_plus_s";
    const Constituent* rho0 = R.split.empty() ? nullptr : by_pci(R.split[0]);
    I.schur = rho0 && rho0->multiplicity == 1 && rho0->m == m;
    I.s = 0;
    for (std::size_t t = 1; t < R.split.size(); ++t) {
      const Constituent* c = by_pci(R.split[t]);
      if (!c) {
        I.schur = false;
        continue;
      }
      if (I.s == 0) I.s = c->multiplicity;
      I.schur = I.schur && c->multiplicity == I.s && I.s > 0 && m % I.s == 0 && c->m == m / I.s;
      I.degrees = I.degrees && I.s * c->degree == R.d * I.eta_degree;
    }
    I.dk = R.d * R.k == p - 1;
    I.s_divides = I.s > 0 && std::gcd(m, R.d) % I.s == 0;
  }
  return I;
}

/// split + induced_decomposition, and for case (2) re-runs with up to three
/// other lifts x h (h in H) having nonzero lambda.
template <class K>
BermanReport<K> analyze(const BermanSetting<K>& S, int j, int alternatives = 3) {
  auto R = split(S, j);
  R.induction = induced_decomposition(S, R);
  if (R.lambda) {
    std::set<int> mine(R.split.begin(), R.split.end());
    auto Z = center_of_component(S.F, S.H.group, S.TH, S.pcis_H[j]);
    for (int h = 1; h < S.H.group.order() && R.alternative_lifts < alternatives; ++h) {
      int x = S.G.mul(R.lift, S.H.to_parent(h));
      if (S.F.is_zero(lambda_at(S, j, Z, x))) continue;
      auto A = split(S, j, x);
      ++R.alternative_lifts;
      R.lifts_agree = R.lifts_agree && A.kase == R.kase && std::set<int>(A.split.begin(), A.split.end()) == mine;
    }
  }
  return R;
}

}  // namespace wedderburn
