#pragma once

// Named groups built from their defining presentations. Each group is realized
// by permutations (matrices and affine maps act on their point sets) and the
// presentation relations are checked before the Cayley table is formed.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "wedderburn/error.hpp"
#include "wedderburn/group.hpp"
#include "wedderburn/numtheory.hpp"

namespace wedderburn {

namespace catalog_detail {

inline Perm pmul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}
inline Perm pinv(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}
inline Perm pid(int n) {
  Perm r(n);
  for (int i = 0; i < n; ++i) r[i] = i;
  return r;
}
inline Perm ppow(const Perm& a, int k) {
  Perm r = pid(static_cast<int>(a.size()));
  for (int i = 0; i < k; ++i) r = pmul(r, a);
  return r;
}
inline Perm pconj(const Perm& a, const Perm& g) { return pmul(pmul(pinv(g), a), g); }

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::BadParams, "presentation relation failed: " + what);
}

inline Perm cycle(int degree, int start, int len) {
  Perm p = pid(degree);
  for (int i = 0; i < len; ++i) p[start + i] = start + (i + 1) % len;
  return p;
}

using Mat2 = std::array<int, 4>;  // row-major 2x2 over Z/ell

/// Right action v -> v M on the ell^2 row vectors, so matrix products match
/// permutation products.
inline Perm mat_perm(const Mat2& m, int ell) {
  Perm p(ell * ell);
  for (int a = 0; a < ell; ++a)
    for (int b = 0; b < ell; ++b) {
      int c = (a * m[0] + b * m[2]) % ell, d = (a * m[1] + b * m[3]) % ell;
      p[a * ell + b] = c * ell + d;
    }
  return p;
}

inline std::vector<Mat2> special_linear(int ell) {
  std::vector<Mat2> out;
  for (int a = 0; a < ell; ++a)
    for (int b = 0; b < ell; ++b)
      for (int c = 0; c < ell; ++c)
        for (int d = 0; d < ell; ++d)
          if (nt::mod(a * d - b * c, ell) == 1) out.push_back({a, b, c, d});
  return out;
}

/// Q8 = <x, y, z | x^2 = 1, y^2 = x, z^2 = y^2, z^-1 y z = x y> inside SL2(ell).
inline std::array<Perm, 3> quaternion_gens(int ell, Perm* minus_one = nullptr) {
  Perm x = mat_perm({ell - 1, 0, 0, ell - 1}, ell);
  Perm y = mat_perm({0, ell - 1, 1, 0}, ell);
  const Perm e = pid(ell * ell);
  for (auto& m : special_linear(ell)) {
    Perm z = mat_perm(m, ell);
    if (pmul(z, z) == pmul(y, y) && pconj(y, z) == pmul(x, y)) {
      require(pmul(x, x) == e && pmul(y, y) == x, "Q8");
      if (minus_one) *minus_one = x;
      return {x, y, z};
    }
  }
  fail(ErrorKind::BadParams, "no quaternion generator found");
}

}  // namespace catalog_detail

/// Catalog names: C n | CxC p [q] | D n | Q8 | C7:C3 | Cp2 p | Q8oC4 | SL23.
inline Group catalog(const std::string& name, const std::vector<int>& params) {
  using namespace catalog_detail;
  auto want = [&](std::size_t k) {
    if (params.size() != k) fail(ErrorKind::BadParams, name + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "C") {
    want(1);
    int n = params[0];
    if (n < 1) fail(ErrorKind::BadParams, "C n needs n >= 1");
    return from_permutations(n, {cycle(n, 0, n)}, {"x"}, "C" + std::to_string(n));
  }
  if (name == "CxC") {
    if (params.empty() || params.size() > 2) fail(ErrorKind::BadParams, "CxC expects p or p q");
    int a = params[0], b = params.size() == 2 ? params[1] : params[0];
    if (a < 1 || b < 1) fail(ErrorKind::BadParams, "CxC needs positive orders");
    Perm x = cycle(a + b, 0, a), y = cycle(a + b, a, b);
    require(pmul(x, y) == pmul(y, x), "xy = yx");
    return from_permutations(a + b, {x, y}, {"x", "y"}, "C" + std::to_string(a) + "xC" + std::to_string(b));
  }
  if (name == "D") {
    want(1);
    int n = params[0];
    if (n < 3) fail(ErrorKind::BadParams, "D n needs n >= 3");
    Perm x = cycle(n, 0, n), y(n);
    for (int i = 0; i < n; ++i) y[i] = static_cast<int>(nt::mod(-i, n));
    require(pmul(y, y) == pid(n) && pconj(x, y) == pinv(x), "y^-1 x y = x^-1");
    return from_permutations(n, {x, y}, {"x", "y"}, "D" + std::to_string(2 * n));
  }
  if (name == "Q8") {
    want(0);
    auto [x, y, z] = quaternion_gens(5);
    return from_permutations(25, {x, y, z}, {"x", "y", "z"}, "Q8");
  }
  if (name == "Q8oC4") {
    want(0);
    auto [x, y, z] = quaternion_gens(5);
    Perm t = mat_perm({2, 0, 0, 2}, 5);
    require(pmul(t, t) == x, "t^2 = x");
    for (auto& g : {x, y, z}) require(pconj(g, t) == g, "t central");
    return from_permutations(25, {x, y, z, t}, {"x", "y", "z", "t"}, "Q8oC4");
  }
  if (name == "SL23") {
    want(0);
    auto [x, y, z] = quaternion_gens(3);
    for (auto& m : special_linear(3)) {
      Perm t = mat_perm(m, 3);
      if (ppow(t, 3) == pid(9) && pconj(y, t) == z && pconj(z, t) == pmul(y, z))
        return from_permutations(9, {x, y, z, t}, {"x", "y", "z", "t"}, "SL2(3)");
    }
    fail(ErrorKind::BadParams, "no order-3 generator found for SL2(3)");
  }
  if (name == "C7:C3") {
    want(0);
    Perm x = cycle(7, 0, 7);
    for (int c = 2; c < 7; ++c) {
      Perm y(7);
      for (int v = 0; v < 7; ++v) y[v] = (c * v) % 7;
      if (ppow(y, 3) == pid(7) && pconj(x, y) == pmul(x, x))
        return from_permutations(7, {x, y}, {"x", "y"}, "C7:C3");
    }
    fail(ErrorKind::BadParams, "no y with y^-1 x y = x^2");
  }
  if (name == "Cp2") {
    want(1);
    int p = params[0];
    if (!nt::is_prime(p)) fail(ErrorKind::BadParams, "Cp2 needs a prime");
    Perm y = cycle(p * p, 0, p * p), x = ppow(y, p);
    require(ppow(x, p) == pid(p * p), "x^p = 1");
    return from_permutations(p * p, {x, y}, {"x", "y"}, "C" + std::to_string(p * p));
  }
  fail(ErrorKind::UnknownName, "unknown catalog group: " + name);
}

struct CatalogEntry {
  std::string name;
  std::vector<int> params;
};

/// The groups every acceptance and verify sweep runs over.
inline std::vector<CatalogEntry> standard_catalog() {
  return {{"C", {4}},   {"C", {6}},  {"C", {12}},    {"D", {4}},     {"D", {5}},   {"D", {6}},
          {"Q8", {}},   {"C7:C3", {}}, {"Cp2", {2}}, {"Cp2", {3}},   {"Cp2", {5}}, {"Q8oC4", {}},
          {"CxC", {2}}, {"CxC", {3}}, {"CxC", {5}},  {"SL23", {}}};
}

}  // namespace wedderburn
