#pragma once

// Elements of the group algebra K[G] as dense coefficient vectors indexed by
// the element numbering of G.

#include <vector>

#include "wedderburn/error.hpp"
#include "wedderburn/group.hpp"

namespace wedderburn {

template <class K>
using AlgebraElement = std::vector<typename K::Elem>;

namespace algebra {

template <class K>
AlgebraElement<K> zero(const K& F, const Group& G) {
  return AlgebraElement<K>(G.order(), F.zero());
}

template <class K>
AlgebraElement<K> one(const K& F, const Group& G) {
  auto r = zero(F, G);
  r[0] = F.one();
  return r;
}

template <class K>
AlgebraElement<K> basis(const K& F, const Group& G, int g) {
  auto r = zero(F, G);
  r[g] = F.one();
  return r;
}

template <class K>
AlgebraElement<K> add(const K& F, const AlgebraElement<K>& a, const AlgebraElement<K>& b) {
  AlgebraElement<K> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

template <class K>
AlgebraElement<K> sub(const K& F, const AlgebraElement<K>& a, const AlgebraElement<K>& b) {
  AlgebraElement<K> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

template <class K>
AlgebraElement<K> scale(const K& F, const AlgebraElement<K>& a, const typename K::Elem& c) {
  AlgebraElement<K> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return r;
}

/// Convolution: (ab)(gh) += a(g) b(h).
template <class K>
AlgebraElement<K> mul(const K& F, const Group& G, const AlgebraElement<K>& a, const AlgebraElement<K>& b) {
  const int n = G.order();
  auto r = zero(F, G);
  std::vector<int> nzb;
  for (int h = 0; h < n; ++h)
    if (!F.is_zero(b[h])) nzb.push_back(h);
  for (int g = 0; g < n; ++g) {
    if (F.is_zero(a[g])) continue;
    for (int h : nzb) {
      int gh = G.mul(g, h);
      r[gh] = F.add(r[gh], F.mul(a[g], b[h]));
    }
  }
  return r;
}

template <class K>
AlgebraElement<K> power(const K& F, const Group& G, const AlgebraElement<K>& a, int e) {
  auto r = one(F, G);
  for (int i = 0; i < e; ++i) r = mul(F, G, r, a);
  return r;
}

template <class K>
bool equal(const K& F, const AlgebraElement<K>& a, const AlgebraElement<K>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!F.equal(a[i], b[i])) return false;
  return true;
}

template <class K>
bool is_zero(const K& F, const AlgebraElement<K>& a) {
  for (auto& c : a)
    if (!F.is_zero(c)) return false;
  return true;
}

/// g a, as a coefficient permutation.
template <class K>
AlgebraElement<K> left_translate(const Group& G, int g, const AlgebraElement<K>& a) {
  AlgebraElement<K> r(a.size());
  for (int h = 0; h < G.order(); ++h) r[G.mul(g, h)] = a[h];
  return r;
}

/// a g.
template <class K>
AlgebraElement<K> right_translate(const Group& G, int g, const AlgebraElement<K>& a) {
  AlgebraElement<K> r(a.size());
  for (int h = 0; h < G.order(); ++h) r[G.mul(h, g)] = a[h];
  return r;
}

/// x a x^-1.
template <class K>
AlgebraElement<K> conjugate(const Group& G, const AlgebraElement<K>& a, int x) {
  AlgebraElement<K> r(a.size());
  for (int h = 0; h < G.order(); ++h) r[G.mul(x, G.mul(h, G.inv(x)))] = a[h];
  return r;
}

/// a g = g a for every generator g (hence for all of G).
template <class K>
bool is_central(const K& F, const Group& G, const AlgebraElement<K>& a) {
  for (int g : G.generators())
    if (!equal(F, left_translate<K>(G, g, a), right_translate<K>(G, g, a))) return false;
  return true;
}

template <class K>
AlgebraElement<K> class_sum(const K& F, const Group& G, const ConjugacyClasses& cc, int k) {
  auto r = zero(F, G);
  for (int g : cc.classes[k]) r[g] = F.one();
  return r;
}

/// sum_k c_k C_k.
template <class K>
AlgebraElement<K> from_class_coeffs(const K& F, const Group& G, const ConjugacyClasses& cc,
                                    const std::vector<typename K::Elem>& c) {
  auto r = zero(F, G);
  for (int k = 0; k < cc.count(); ++k)
    for (int g : cc.classes[k]) r[g] = c[k];
  return r;
}

/// Per-class coefficients of a class-constant element; fails otherwise.
template <class K>
std::vector<typename K::Elem> class_coeffs(const K& F, const ConjugacyClasses& cc, const AlgebraElement<K>& a) {
  std::vector<typename K::Elem> out;
  for (int k = 0; k < cc.count(); ++k) {
    const auto& c = a[cc.representatives[k]];
    for (int g : cc.classes[k])
      if (!F.equal(a[g], c)) fail(ErrorKind::NotInCenter, "element is not constant on conjugacy classes");
    out.push_back(c);
  }
  return out;
}

/// Image under the ring embedding K[H] -> K[G] of a subgroup.
template <class K>
AlgebraElement<K> embed_subgroup(const K& F, const Group& G, const Subgroup& H, const AlgebraElement<K>& a) {
  auto r = zero(F, G);
  for (int h = 0; h < H.group.order(); ++h) r[H.to_parent(h)] = a[h];
  return r;
}

/// Coefficientwise Galois action.
template <class K>
AlgebraElement<K> galois(const K& F, long long s, const AlgebraElement<K>& a) {
  AlgebraElement<K> r;
  r.reserve(a.size());
  for (auto& c : a) r.push_back(F.galois(s, c));
  return r;
}

template <class K>
bool over_base(const K& F, const AlgebraElement<K>& a) {
  for (auto& c : a)
    for (int s : F.base_group())
      if (!F.equal(F.galois(s, c), c)) return false;
  return true;
}

}  // namespace algebra
}  // namespace wedderburn
