#pragma once

// F-conjugacy classes, F-characters (Galois orbit sums of ordinary
// characters) and the primitive central idempotents of F[G].
//
// The field F is the fixed field of the ambient field's base group, which is
// a subgroup of (Z/N)^* with u | N. Its image mod u is the group A acting on
// classes by C(g) -> C(g^a) and on characters by psi -> psi o (g -> g^a).

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "wedderburn/algebra.hpp"
#include "wedderburn/char_table.hpp"
#include "wedderburn/error.hpp"
#include "wedderburn/field_spec.hpp"
#include "wedderburn/group.hpp"

namespace wedderburn {

struct FClass {
  std::vector<int> classes;  ///< ordinary classes, sorted
  std::vector<int> members;  ///< sorted element indices
  int representative = 0;    ///< representative of the first ordinary class
  int order = 1;             ///< order of the representative
  std::vector<int> r_sequence;
};

struct FClassPartition {
  int u = 1;
  std::vector<int> A;  ///< image of the Galois group in (Z/u)^*
  std::vector<FClass> classes;
  std::vector<int> of_class;  ///< ordinary class -> F-class
  std::vector<int> inverse;   ///< F-class of the inverses
  int count() const { return static_cast<int>(classes.size()); }
};

template <class K>
void require_admissible(const K& F, const Group& G, const CharacterTable& T) {
  if (F.root_order() % T.u != 0) fail(ErrorKind::BadParams, "ambient field lacks the u-th roots of unity");
  if (F.characteristic() != 0 && G.order() % F.characteristic() == 0)
    fail(ErrorKind::NonCoprime, "characteristic divides the group order");
}

template <class K>
FClassPartition f_classes(const K& F, const Group& G, const CharacterTable& T) {
  require_admissible(F, G, T);
  FClassPartition P;
  P.u = T.u;
  P.A = reduce_group(F.base_group(), T.u);
  const int s = T.class_count();
  P.of_class.assign(s, -1);
  std::map<int, std::vector<int>> r_cache;
  for (int k = 0; k < s; ++k) {
    if (P.of_class[k] >= 0) continue;
    std::set<int> orb;
    for (int a : P.A) orb.insert(T.power[k][a]);
    FClass L;
    L.classes.assign(orb.begin(), orb.end());
    for (int c : L.classes) {
      P.of_class[c] = P.count();
      for (int g : T.classes.classes[c]) L.members.push_back(g);
    }
    std::sort(L.members.begin(), L.members.end());
    L.representative = T.classes.representatives[k];
    L.order = G.element_order(L.representative);
    auto it = r_cache.find(L.order);
    if (it == r_cache.end()) it = r_cache.emplace(L.order, factor_cyclotomic(F, L.order).r_sequence).first;
    L.r_sequence = it->second;
    // the F-class is the union of C(x^r) over the r-sequence
    std::set<int> from_r;
    for (int r : L.r_sequence) from_r.insert(T.classes.class_of[G.pow(L.representative, r)]);
    if (from_r != orb) fail(ErrorKind::VerificationFailed, "F-class differs from the union over the r-sequence");
    P.classes.push_back(std::move(L));
  }
  for (auto& L : P.classes) P.inverse.push_back(P.of_class[T.inverse_class[L.classes[0]]]);
  return P;
}

/// A-orbits of ordinary characters, each sorted, ordered by minimal row.
inline std::vector<std::vector<int>> character_orbits(const CharacterTable& T, const std::vector<int>& A) {
  std::vector<int> seen(T.count(), 0);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < T.count(); ++i) {
    if (seen[i]) continue;
    std::set<int> orb;
    for (int a : A) orb.insert(T.galois_image(i, a));
    for (int j : orb) seen[j] = 1;
    out.emplace_back(orb.begin(), orb.end());
  }
  return out;
}

template <class K>
struct FCharTable {
  std::vector<std::vector<int>> orbits;
  std::vector<int> degrees;  ///< tau(1)
  /// values[j][i] = tau_j on the F-class i
  std::vector<std::vector<typename K::Elem>> values;
  /// tau_j on ordinary classes
  std::vector<ClassFunction<K>> on_classes;
  std::vector<int> schur_index;  ///< 0 until computed
  int count() const { return static_cast<int>(orbits.size()); }
};

template <class K>
ClassFunction<K> orbit_sum(const K& F, const CharacterTable& T, const std::vector<int>& orbit) {
  ClassFunction<K> tau(T.class_count(), F.zero());
  for (int i : orbit) {
    auto psi = T.embed(F, i);
    for (int k = 0; k < T.class_count(); ++k) tau[k] = F.add(tau[k], psi[k]);
  }
  return tau;
}

template <class K>
FCharTable<K> f_char_table(const K& F, const CharacterTable& T, const FClassPartition& P) {
  FCharTable<K> X;
  X.orbits = character_orbits(T, P.A);
  if (X.count() != P.count())
    fail(ErrorKind::CountMismatch, "number of F-characters differs from the number of F-classes");
  for (auto& O : X.orbits) {
    auto tau = orbit_sum(F, T, O);
    std::vector<typename K::Elem> row;
    for (auto& L : P.classes) {
      for (int c : L.classes)
        if (!F.equal(tau[c], tau[L.classes[0]]))
          fail(ErrorKind::VerificationFailed, "F-character not constant on an F-class");
      if (!fixed_by(F, F.base_group(), tau[L.classes[0]]))
        fail(ErrorKind::CoercionFailed, "F-character value outside F");
      row.push_back(tau[L.classes[0]]);
    }
    X.degrees.push_back(T.degrees[O[0]] * static_cast<int>(O.size()));
    X.values.push_back(std::move(row));
    X.on_classes.push_back(std::move(tau));
    X.schur_index.push_back(0);
  }
  return X;
}

// ---------------------------------------------------------------------------
// Primitive central idempotents.

template <class K>
struct CentralIdempotent {
  int id = 0;
  std::vector<int> orbit;  ///< ordinary characters covered
  std::vector<typename K::Elem> coeffs;  ///< per ordinary class
  AlgebraElement<K> element;
};

/// e_O = (1/|G|) sum_{psi in O} psi(1) sum_g psi(g^-1) g, checked to lie in F[G].
template <class K>
CentralIdempotent<K> orbit_idempotent(const K& F, const Group& G, const CharacterTable& T,
                                      const std::vector<int>& orbit, const std::vector<int>& base) {
  CentralIdempotent<K> e;
  e.orbit = orbit;
  e.coeffs.assign(T.class_count(), F.zero());
  for (int i : orbit) {
    auto psi = T.embed(F, i);
    for (int k = 0; k < T.class_count(); ++k)
      e.coeffs[k] = F.add(e.coeffs[k], F.mul_int(psi[T.inverse_class[k]], T.degrees[i]));
  }
  auto inv_n = F.inv(F.from_int(G.order()));
  for (auto& c : e.coeffs) {
    c = F.mul(c, inv_n);
    if (!fixed_by(F, base, c)) fail(ErrorKind::CoercionFailed, "idempotent coefficient outside the base field");
  }
  e.element = algebra::from_class_coeffs(F, G, T.classes, e.coeffs);
  return e;
}

struct IdempotentChecks {
  bool idempotent = true, central = true, orthogonal = true, complete = true;
  bool all() const { return idempotent && central && orthogonal && complete; }
};

/// e^2 = e, central, pairwise orthogonal and summing to `total`. Pairwise
/// orthogonality follows from e_k (e_1 + ... + e_{k-1}) = 0 for every k once
/// each e_k is a central idempotent.
template <class K>
IdempotentChecks check_idempotents(const K& F, const Group& G, const std::vector<AlgebraElement<K>>& es,
                                   const AlgebraElement<K>& total) {
  IdempotentChecks c;
  auto partial = algebra::zero(F, G);
  for (auto& e : es) {
    if (!algebra::equal(F, algebra::mul(F, G, e, e), e)) c.idempotent = false;
    if (!algebra::is_central(F, G, e)) c.central = false;
    if (!algebra::is_zero(F, algebra::mul(F, G, e, partial))) c.orthogonal = false;
    partial = algebra::add(F, partial, e);
  }
  if (!algebra::equal(F, partial, total)) c.complete = false;
  return c;
}

template <class K>
std::vector<CentralIdempotent<K>> pcis(const K& F, const Group& G, const CharacterTable& T,
                                       const FClassPartition& P) {
  std::vector<CentralIdempotent<K>> out;
  for (auto& O : character_orbits(T, P.A)) {
    out.push_back(orbit_idempotent(F, G, T, O, F.base_group()));
    out.back().id = static_cast<int>(out.size()) - 1;
  }
  std::vector<AlgebraElement<K>> es;
  for (auto& e : out) es.push_back(e.element);
  if (!check_idempotents(F, G, es, algebra::one(F, G)).all())
    fail(ErrorKind::VerificationFailed, "central idempotents fail verification");
  return out;
}

/// e'' = sum_x chi(x^-1) x with chi = m tau satisfies e''^2 = (|G|/n) e''.
/// Returns n. In positive characteristic the ratio is only known mod ell, so
/// n is taken as the least divisor of |G| that matches.
template <class K>
int reduced_dimension_check(const K& F, const Group& G, const CharacterTable& T, const CentralIdempotent<K>& e,
                            const ClassFunction<K>& tau, int m) {
  ClassFunction<K> chi;
  for (int k = 0; k < T.class_count(); ++k) chi.push_back(F.mul_int(tau[T.inverse_class[k]], m));
  auto epp = algebra::from_class_coeffs(F, G, T.classes, chi);
  auto sq = algebra::mul(F, G, epp, epp);
  int pivot = -1;
  for (int g = 0; g < G.order() && pivot < 0; ++g)
    if (!F.is_zero(epp[g])) pivot = g;
  if (pivot < 0) fail(ErrorKind::NotScalarMultiple, "e'' vanishes");
  auto ratio = F.mul(sq[pivot], F.inv(epp[pivot]));
  if (!algebra::equal(F, sq, algebra::scale(F, epp, ratio)))
    fail(ErrorKind::NotScalarMultiple, "e''^2 is not a multiple of e''");
  for (auto n : nt::divisors(G.order())) {
    if (!F.equal(F.mul_int(ratio, n), F.from_int(G.order()))) continue;
    // e = (n/|G|) e''
    if (!algebra::equal(F, algebra::scale(F, epp, F.from_ratio(n, G.order())), e.element))
      fail(ErrorKind::NotScalarMultiple, "e'' is not a multiple of e");
    return static_cast<int>(n);
  }
  fail(ErrorKind::NotScalarMultiple, "|G| / ratio is not a divisor of |G|");
}

}  // namespace wedderburn
