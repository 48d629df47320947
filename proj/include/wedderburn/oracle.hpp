#pragma once

// Primitive central idempotents without characters: the identity of the
// center Z(F[G]) is split by minimal polynomials of class sums.
//
// The center is handled in class-sum coordinates with integer structure
// constants. Over GF(q) the splitting runs directly over the base field. In
// characteristic 0 it runs over GF(ell) with ell = 1 mod N, where the center
// splits completely; each absolutely primitive idempotent is lifted to
// Q(zeta_N) from the values at all Galois-conjugate classes (the coefficient
// at g^j is the image of the coefficient at g under zeta -> zeta^j), and the
// lifts are summed over orbits of the base Galois group.

#include <cstdlib>
#include <random>
#include <vector>

#include "wedderburn/algebra.hpp"
#include "wedderburn/cyclotomic.hpp"
#include "wedderburn/error.hpp"
#include "wedderburn/f_theory.hpp"
#include "wedderburn/finite_field.hpp"
#include "wedderburn/group.hpp"
#include "wedderburn/linalg.hpp"
#include "wedderburn/poly.hpp"
#include "wedderburn/prime_field.hpp"

namespace wedderburn {
namespace oracle {

/// a[(j * s + k) * s + l] = #{(x, y) in C_j x C_k : x y = g_l}.
struct ClassAlgebra {
  int s = 0;
  std::vector<int> a;
  int at(int j, int k, int l) const { return a[(static_cast<std::size_t>(j) * s + k) * s + l]; }
};

inline ClassAlgebra class_algebra(const Group& G, const ConjugacyClasses& cc) {
  ClassAlgebra C;
  C.s = cc.count();
  const int s = C.s;
  C.a.assign(static_cast<std::size_t>(s) * s * s, 0);
  for (int j = 0; j < s; ++j)
    for (int x : cc.classes[j])
      for (int l = 0; l < s; ++l) {
        int k = cc.class_of[G.mul(G.inv(x), cc.representatives[l])];
        ++C.a[(static_cast<std::size_t>(j) * s + k) * s + l];
      }
  return C;
}

template <class Fo>
std::vector<typename Fo::Elem> cmul(const Fo& F, const ClassAlgebra& C, const std::vector<typename Fo::Elem>& x,
                                    const std::vector<typename Fo::Elem>& y) {
  const int s = C.s;
  std::vector<typename Fo::Elem> r(s, F.zero());
  for (int j = 0; j < s; ++j) {
    if (F.is_zero(x[j])) continue;
    for (int k = 0; k < s; ++k) {
      if (F.is_zero(y[k])) continue;
      auto c = F.mul(x[j], y[k]);
      for (int l = 0; l < s; ++l)
        if (int n = C.at(j, k, l)) r[l] = F.add(r[l], F.mul(c, F.from_int(n)));
    }
  }
  return r;
}

namespace detail {

template <class Fo>
using CVec = std::vector<typename Fo::Elem>;

/// Minimal polynomial of b inside the algebra with unit eps.
template <class Fo>
Poly<Fo> minimal_polynomial(const Fo& F, const ClassAlgebra& C, const CVec<Fo>& eps, const CVec<Fo>& b) {
  linalg::Mat<Fo> powers{eps};
  while (true) {
    auto next = cmul(F, C, powers.back(), b);
    auto ech = linalg::rref(F, powers, C.s);
    bool inside = false;
    linalg::coordinates(F, ech, next, &inside);
    if (inside) {
      // express next in the original power basis: solve sum c_i powers_i = next
      const int t = static_cast<int>(powers.size());
      linalg::Mat<Fo> sys;
      for (int l = 0; l < C.s; ++l) {
        linalg::Vec<Fo> row;
        for (int i = 0; i < t; ++i) row.push_back(powers[i][l]);
        row.push_back(next[l]);
        sys.push_back(row);
      }
      auto e = linalg::rref(F, sys, t + 1);
      Poly<Fo> f(t + 1, F.zero());
      f[t] = F.one();
      for (std::size_t r = 0; r < e.pivots.size(); ++r) f[e.pivots[r]] = F.neg(e.rows[r][t]);
      return f;
    }
    powers.push_back(std::move(next));
  }
}

template <class Fo>
CVec<Fo> evaluate(const Fo& F, const ClassAlgebra& C, const Poly<Fo>& f, const CVec<Fo>& eps, const CVec<Fo>& b) {
  CVec<Fo> r(C.s, F.zero());
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    r = cmul(F, C, r, b);
    for (int l = 0; l < C.s; ++l) r[l] = F.add(r[l], F.mul(f[i], eps[l]));
  }
  return r;
}

}  // namespace detail

/// Primitive idempotents of Z(F[G]) over the base field GF(q) of Fo, in
/// class-sum coordinates. Each result is certified by an element whose
/// minimal polynomial is irreducible of degree dim(eps Z).
template <class Fo>
std::vector<std::vector<typename Fo::Elem>> split_center(const Fo& F, const ClassAlgebra& C, std::uint64_t seed,
                                                         int budget = 200) {
  using V = std::vector<typename Fo::Elem>;
  const int s = C.s;
  std::mt19937_64 rng(seed);
  auto class_vec = [&](int j) {
    V v(s, F.zero());
    v[j] = F.one();
    return v;
  };
  std::vector<V> todo{class_vec(0)}, done;
  while (!todo.empty()) {
    V eps = todo.back();
    todo.pop_back();
    linalg::Mat<Fo> span;
    for (int j = 0; j < s; ++j) span.push_back(cmul(F, C, class_vec(j), eps));
    const int dim = linalg::rank(F, span, s);
    bool settled = false;
    for (int attempt = 0; attempt < s + budget && !settled; ++attempt) {
      V b(s, F.zero());
      if (attempt < s) b = span[attempt];
      else
        for (int j = 0; j < s; ++j)
          for (int l = 0; l < s; ++l) b[l] = F.add(b[l], F.mul(F.random_base(rng), span[j][l]));
      auto f = detail::minimal_polynomial(F, C, eps, b);
      auto factors = poly::factor_squarefree_finite(F, f, rng());
      if (factors.size() < 2) {
        if (poly::degree<Fo>(f) == dim) {
          done.push_back(eps);
          settled = true;
        }
        continue;
      }
      for (auto& fi : factors) {
        auto gi = poly::exact_div(F, f, fi);
        auto [g, si, ti] = poly::xgcd(F, gi, fi);
        (void)ti;
        if (poly::degree<Fo>(g) != 0) fail(ErrorKind::VerificationFailed, "minimal polynomial is not squarefree");
        auto Ei = poly::mul(F, gi, si);
        todo.push_back(detail::evaluate(F, C, Ei, eps, b));
      }
      settled = true;
    }
    if (!settled) fail(ErrorKind::SearchBudgetExhausted, "center splitting did not certify a field component");
  }
  return done;
}

template <class K>
struct Result {
  std::vector<std::vector<typename K::Elem>> idempotents;  ///< class coordinates over F
  std::uint64_t ell = 0;                                   ///< splitting prime (characteristic 0)
};

inline Result<FiniteField> pcis(const FiniteField& F, const Group& G, const ConjugacyClasses& cc,
                                std::uint64_t seed = 0) {
  auto C = class_algebra(G, cc);
  Result<FiniteField> r;
  r.idempotents = split_center(F, C, seed);
  return r;
}

inline Result<CyclotomicField> pcis(const CyclotomicField& K, const Group& G, const ConjugacyClasses& cc,
                                    std::uint64_t seed = 0) {
  const int N = K.root_order(), phi = K.degree(), n = G.order();
  long long bound = 1;
  for (int k = 0; k < N; ++k)
    for (auto& c : K.zeta(k).num) bound = std::max<long long>(bound, std::abs(c.get_si()));
  auto ell = static_cast<std::uint64_t>(nt::prime_one_mod(N, std::max<long long>(1LL << 20, 4LL * n * bound)));
  PrimeField P(ell);
  auto C = class_algebra(G, cc);
  auto absolute = split_center(P, C, seed);

  // zeta_N -> w; Vandermonde over the units j mod N
  const auto w = P.pow(nt::primitive_root(ell), (ell - 1) / static_cast<std::uint64_t>(N));
  auto U = nt::units(N);
  if (static_cast<int>(U.size()) != phi) fail(ErrorKind::VerificationFailed, "unit count differs from degree");
  linalg::Mat<PrimeField> V;
  for (auto j : U) {
    linalg::Vec<PrimeField> row;
    for (int i = 0; i < phi; ++i) row.push_back(P.pow(w, static_cast<std::uint64_t>(nt::mod(j * i, N))));
    V.push_back(row);
  }
  auto Vinv = linalg::inverse(P, V);

  const int s = cc.count();
  std::vector<std::vector<Cyc>> lifted;
  for (auto& eps : absolute) {
    std::vector<Cyc> coeffs;
    for (int k = 0; k < s; ++k) {
      linalg::Vec<PrimeField> b;
      for (auto j : U) b.push_back(eps[cc.class_of[G.pow(cc.representatives[k], j)]]);
      std::vector<mpq_class> y(phi);
      for (int i = 0; i < phi; ++i) {
        std::uint64_t acc = 0;
        for (int t = 0; t < phi; ++t) acc = P.add(acc, P.mul(Vinv[i][t], b[t]));
        y[i] = mpq_class(static_cast<long>(P.centered(P.mul(acc, P.from_int(n)))), static_cast<unsigned long>(n));
        y[i].canonicalize();
      }
      coeffs.push_back(K.from_coordinates(y));
    }
    lifted.push_back(std::move(coeffs));
  }

  // orbit sums under the base group
  std::vector<int> used(lifted.size(), 0);
  Result<CyclotomicField> r;
  r.ell = ell;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    if (used[i]) continue;
    std::vector<Cyc> sum(s, K.zero());
    for (std::size_t j = 0; j < lifted.size(); ++j) {
      if (used[j]) continue;
      bool conj = false;
      for (int a : K.base_group()) {
        bool same = true;
        for (int k = 0; k < s && same; ++k) same = K.equal(K.galois(a, lifted[i][k]), lifted[j][k]);
        if (same) conj = true;
        if (conj) break;
      }
      if (!conj) continue;
      used[j] = 1;
      for (int k = 0; k < s; ++k) sum[k] = K.add(sum[k], lifted[j][k]);
    }
    r.idempotents.push_back(std::move(sum));
  }
  return r;
}

/// Exact checks of an idempotent family in F[G]; the class coordinates must
/// lie in the base field.
template <class K>
IdempotentChecks verify(const K& F, const Group& G, const ConjugacyClasses& cc, const Result<K>& r) {
  std::vector<AlgebraElement<K>> es;
  for (auto& c : r.idempotents) {
    for (auto& x : c)
      if (!fixed_by(F, F.base_group(), x)) fail(ErrorKind::CoercionFailed, "oracle idempotent outside F[G]");
    es.push_back(algebra::from_class_coeffs(F, G, cc, c));
  }
  return check_idempotents(F, G, es, algebra::one(F, G));
}

/// Set equality of two idempotent families in class coordinates.
template <class K>
bool same_set(const K& F, const std::vector<std::vector<typename K::Elem>>& a,
              const std::vector<std::vector<typename K::Elem>>& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> hit(b.size(), 0);
  for (auto& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (hit[j]) continue;
      bool eq = true;
      for (std::size_t k = 0; k < x.size() && eq; ++k) eq = F.equal(x[k], b[j][k]);
      if (eq) hit[j] = 1, found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace oracle
}  // namespace wedderburn
