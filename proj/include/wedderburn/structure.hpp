#pragma once

// Wedderburn data of one component I = F[G]e: the center Z = Z(F[G])e as a
// field with a primitive element embedded in the ambient field, a simple
// module V = F[G]f for an idempotent f in I, its commutant D = fF[G]f (the
// opposite ring of End(V)), and the numbers delta, n, m.

#include <random>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "wedderburn/algebra.hpp"
#include "wedderburn/char_table.hpp"
#include "wedderburn/error.hpp"
#include "wedderburn/f_theory.hpp"
#include "wedderburn/field_spec.hpp"
#include "wedderburn/linalg.hpp"
#include "wedderburn/oracle.hpp"
#include "wedderburn/poly.hpp"

namespace wedderburn {

template <class K>
struct RealizedCenter {
  using E = typename K::Elem;
  int delta = 1;
  std::vector<std::vector<E>> basis;  ///< class coordinates of independent C_k e
  std::vector<int> basis_classes;
  std::vector<int> theta_combination;  ///< integer coefficients of theta over basis
  std::vector<E> theta;                ///< class coordinates
  Poly<K> minpoly;                     ///< over F, degree delta
  int psi = 0;                         ///< absolute character fixing the embedding
  int psi_degree = 1;
  E theta_value;                       ///< omega_psi(theta)
  std::vector<int> stabilizer;         ///< B = Stab(psi), residues mod N
  std::vector<int> coset_reps;         ///< a with psi^a covering the orbit, first is 1
  std::vector<int> orbit_chars;        ///< psi^a for each coset rep
  std::vector<std::vector<E>> absolute;  ///< class coordinates of eps_{psi^a}
  ClassFunction<K> psi_values;
  std::vector<int> class_sizes;

  /// omega_psi of a central element given in class coordinates.
  E from_algebra(const K& F, const std::vector<E>& c) const {
    auto acc = F.zero();
    for (std::size_t k = 0; k < c.size(); ++k)
      acc = F.add(acc, F.mul(F.mul_int(c[k], class_sizes[k]), psi_values[k]));
    return F.mul(acc, F.inv(F.from_int(psi_degree)));
  }

  /// The element of Z e whose image under omega_psi is z (z in K^B).
  std::vector<E> to_algebra(const K& F, const E& z) const {
    if (!fixed_by(F, stabilizer, z)) fail(ErrorKind::CoercionFailed, "value outside the realized center");
    std::vector<E> r(absolute[0].size(), F.zero());
    for (std::size_t i = 0; i < coset_reps.size(); ++i) {
      auto zi = F.galois(coset_reps[i], z);
      for (std::size_t k = 0; k < r.size(); ++k) r[k] = F.add(r[k], F.mul(zi, absolute[i][k]));
    }
    for (auto& c : r)
      if (!fixed_by(F, F.base_group(), c)) fail(ErrorKind::CoercionFailed, "center element outside F[G]");
    return r;
  }
};

namespace structure_detail {

/// Integer coefficient vectors over `dim` coordinates: unit vectors first,
/// then all vectors with entries in {0, 1, -1, 2, -2} in counting order.
inline std::vector<int> candidate(int dim, int t) {
  std::vector<int> c(dim, 0);
  if (t < dim) {
    c[t] = 1;
    return c;
  }
  static const int digits[5] = {0, 1, -1, 2, -2};
  int x = t - dim + 1;
  for (int i = 0; i < dim && x > 0; ++i, x /= 5) c[i] = digits[x % 5];
  return c;
}

template <class K>
int left_ideal_dimension(const K& F, const Group& G, const AlgebraElement<K>& f) {
  linalg::Mat<K> rows;
  for (int g = 0; g < G.order(); ++g) rows.push_back(algebra::left_translate<K>(G, g, f));
  return linalg::rank(F, rows, G.order());
}

/// Basis of f F[G] f.
template <class K>
linalg::Mat<K> corner_basis(const K& F, const Group& G, const AlgebraElement<K>& f) {
  linalg::Mat<K> rows;
  for (int g = 0; g < G.order(); ++g) rows.push_back(algebra::mul(F, G, algebra::right_translate<K>(G, g, f), f));
  return linalg::rref(F, rows, G.order()).rows;
}

/// Minimal polynomial of w in the algebra with unit f.
template <class K>
Poly<K> minimal_polynomial(const K& F, const Group& G, const AlgebraElement<K>& f, const AlgebraElement<K>& w) {
  linalg::Mat<K> powers{f};
  const int n = G.order();
  while (true) {
    auto next = algebra::mul(F, G, powers.back(), w);
    bool inside = false;
    linalg::coordinates(F, linalg::rref(F, powers, n), next, &inside);
    if (inside) {
      const int t = static_cast<int>(powers.size());
      linalg::Mat<K> sys;
      for (int l = 0; l < n; ++l) {
        linalg::Vec<K> row;
        for (int i = 0; i < t; ++i) row.push_back(powers[i][l]);
        row.push_back(next[l]);
        sys.push_back(row);
      }
      auto e = linalg::rref(F, sys, t + 1);
      Poly<K> p(t + 1, F.zero());
      p[t] = F.one();
      for (std::size_t r = 0; r < e.pivots.size(); ++r) p[e.pivots[r]] = F.neg(e.rows[r][t]);
      return p;
    }
    powers.push_back(std::move(next));
  }
}

template <class K>
AlgebraElement<K> evaluate(const K& F, const Group& G, const Poly<K>& p, const AlgebraElement<K>& f,
                           const AlgebraElement<K>& w) {
  auto r = algebra::zero(F, G);
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    r = algebra::mul(F, G, r, w);
    r = algebra::add(F, r, algebra::scale(F, f, p[i]));
  }
  return r;
}

inline bool is_square(const mpq_class& q) {
  return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num().get_mpz_t()) && mpz_perfect_square_p(q.get_den().get_mpz_t());
}

inline mpq_class sqrt_q(const mpq_class& q) {
  mpz_class a, b;
  mpz_sqrt(a.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), q.get_den().get_mpz_t());
  return mpq_class(a, b);
}

template <class K>
bool base_is_rationals(const K& F) {
  if constexpr (std::is_same_v<K, CyclotomicField>) return static_cast<int>(F.base_group().size()) == F.degree();
  else return false;
}

/// Irreducible factors of a minimal polynomial over F, as far as this module
/// can split them: complete over GF(q); over Q only rational roots of
/// quadratics. Returns a single factor when no split is found.
template <class K>
std::vector<Poly<K>> split_factors(const K& F, const Poly<K>& p, std::uint64_t seed) {
  if constexpr (std::is_same_v<K, FiniteField>) {
    return poly::factor_squarefree_finite(F, p, seed);
  } else {
    if (poly::degree<K>(p) == 2 && base_is_rationals(F)) {
      auto b = F.to_rational(p[1]), c = F.to_rational(p[0]);
      mpq_class disc = b * b - 4 * c;
      if (sgn(disc) > 0 && is_square(disc)) {
        mpq_class r = sqrt_q(disc);
        mpq_class r1 = (-b + r) / 2, r2 = (-b - r) / 2;
        return {poly::x_minus(F, F.from_rational(r1)), poly::x_minus(F, F.from_rational(r2))};
      }
    }
    return {p};
  }
}

/// Quadratic-form determinant by Gaussian elimination over Q.
inline mpq_class det_q(std::vector<std::vector<mpq_class>> a) {
  const int n = static_cast<int>(a.size());
  mpq_class d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (sgn(a[r][c]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      mpq_class f = a[r][c] / a[c][c];
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return d;
}

}  // namespace structure_detail

// ---------------------------------------------------------------------------

template <class K>
RealizedCenter<K> center_of_component(const K& F, const Group& G, const CharacterTable& T,
                                      const CentralIdempotent<K>& e, int budget = 1000) {
  using namespace structure_detail;
  RealizedCenter<K> Z;
  const int s = T.class_count();
  auto C = oracle::class_algebra(G, T.classes);
  linalg::Mat<K> acc;
  for (int k = 0; k < s; ++k) {
    std::vector<typename K::Elem> unit(s, F.zero());
    unit[k] = F.one();
    auto v = oracle::cmul(F, C, unit, e.coeffs);
    acc.push_back(v);
    if (linalg::rank(F, acc, s) == static_cast<int>(Z.basis.size()) + 1) {
      Z.basis.push_back(v);
      Z.basis_classes.push_back(k);
    } else {
      acc.pop_back();
    }
  }
  Z.delta = static_cast<int>(Z.basis.size());
  if (Z.delta != static_cast<int>(e.orbit.size()))
    fail(ErrorKind::VerificationFailed, "center dimension differs from the Galois orbit length");

  bool found = false;
  for (int t = 0; t < budget && !found; ++t) {
    auto c = candidate(Z.delta, t);
    bool nonzero = false;
    for (int x : c) nonzero = nonzero || x != 0;
    if (!nonzero) continue;
    std::vector<typename K::Elem> theta(s, F.zero());
    for (int i = 0; i < Z.delta; ++i)
      for (int k = 0; k < s; ++k) theta[k] = F.add(theta[k], F.mul_int(Z.basis[i][k], c[i]));
    auto f = oracle::detail::minimal_polynomial(F, C, e.coeffs, theta);
    if (poly::degree<K>(f) == Z.delta) {
      Z.theta = theta;
      Z.theta_combination = c;
      Z.minpoly = f;
      found = true;
    }
  }
  if (!found) fail(ErrorKind::PrimitiveElementSearchExhausted, "no primitive element of the center found");
  for (auto& c : Z.minpoly)
    if (!fixed_by(F, F.base_group(), c)) fail(ErrorKind::CoercionFailed, "minimal polynomial not over F");
  auto g = poly::gcd(F, Z.minpoly, poly::derivative(F, Z.minpoly));
  if (poly::degree<K>(g) != 0) fail(ErrorKind::VerificationFailed, "center has nilpotents");

  // embedding: the orbit member with the least central character value
  Z.class_sizes = T.classes.sizes;
  bool first = true;
  for (int i : e.orbit) {
    Z.psi_values = T.embed(F, i);
    Z.psi_degree = T.degrees[i];
    auto w = Z.from_algebra(F, Z.theta);
    if (first || F.less(w, Z.theta_value)) {
      Z.theta_value = w;
      Z.psi = i;
      first = false;
    }
  }
  Z.psi_values = T.embed(F, Z.psi);
  Z.psi_degree = T.degrees[Z.psi];
  if (!F.is_zero(poly::eval(F, Z.minpoly, Z.theta_value)))
    fail(ErrorKind::VerificationFailed, "embedding is not a root of the minimal polynomial");

  std::set<int> seen;
  for (int a : F.base_group()) {
    int j = T.galois_image(Z.psi, a);
    if (j == Z.psi) Z.stabilizer.push_back(a);
    if (seen.insert(j).second) {
      Z.coset_reps.push_back(a);
      Z.orbit_chars.push_back(j);
    }
  }
  if (std::set<int>(e.orbit.begin(), e.orbit.end()) != seen ||
      static_cast<int>(F.base_group().size()) != Z.delta * static_cast<int>(Z.stabilizer.size()))
    fail(ErrorKind::VerificationFailed, "Galois orbit of the embedding character is inconsistent");
  for (int j : Z.orbit_chars) {
    auto phi = T.embed(F, j);
    std::vector<typename K::Elem> eps;
    for (int k = 0; k < s; ++k)
      eps.push_back(F.mul(F.mul_int(phi[T.inverse_class[k]], T.degrees[j]), F.inv(F.from_int(G.order()))));
    Z.absolute.push_back(std::move(eps));
  }
  // round trip on the primitive element
  auto back = Z.to_algebra(F, Z.theta_value);
  for (int k = 0; k < s; ++k)
    if (!F.equal(back[k], Z.theta[k])) fail(ErrorKind::VerificationFailed, "center embedding does not invert");
  return Z;
}

template <class K>
struct BaseChange {
  std::vector<CentralIdempotent<K>> pcis;  ///< over K^B, one per orbit member
  bool simply_transitive = false;
  int orbit_length = 0;
};

/// pcis of Z[G] below e, with Gal(Z/F) acting simply transitively on them.
template <class K>
BaseChange<K> base_change_split(const K& F, const Group& G, const CharacterTable& T, const CentralIdempotent<K>& e,
                                const RealizedCenter<K>& Z) {
  BaseChange<K> out;
  std::vector<AlgebraElement<K>> es;
  for (int j : Z.orbit_chars) {
    out.pcis.push_back(orbit_idempotent(F, G, T, {j}, Z.stabilizer));
    out.pcis.back().id = static_cast<int>(out.pcis.size()) - 1;
    es.push_back(out.pcis.back().element);
  }
  if (!check_idempotents(F, G, es, e.element).all())
    fail(ErrorKind::VerificationFailed, "base-changed idempotents do not decompose e");
  std::set<int> reached;
  std::vector<int> stab;
  for (int a : F.base_group()) {
    auto img = algebra::galois(F, a, es[0]);
    for (std::size_t i = 0; i < es.size(); ++i)
      if (algebra::equal(F, img, es[i])) {
        reached.insert(static_cast<int>(i));
        if (i == 0) stab.push_back(a);
      }
  }
  out.orbit_length = static_cast<int>(reached.size());
  out.simply_transitive = out.orbit_length == Z.delta && stab == Z.stabilizer;
  if (!out.simply_transitive) fail(ErrorKind::VerificationFailed, "Galois action on base-changed pcis is not simply transitive");
  return out;
}

template <class K>
struct WedderburnComponent {
  int id = 0;
  std::vector<int> orbit;
  int psi_degree = 1;
  int dim_I = 0, delta = 1, n = 1, m = 1, dim_V = 0, dim_D = 0;
  RealizedCenter<K> center;
  AlgebraElement<K> module_idempotent;  ///< V = F[G] f
  std::string certificate;              ///< how simplicity of V was established
};

/// Minimal left ideal and commutant of the component of e.
///
/// Candidates F[G] e eps run over pcis eps of F[A] for cyclic, then
/// two-generator abelian, subgroups A. A left ideal of dimension delta psi(1)
/// is simple with m = 1. Otherwise the corner ring f F[G] f is searched for
/// split elements (idempotent extraction from a reducible minimal
/// polynomial); over Q with delta = 1 and a four-dimensional corner ring a
/// positive definite reduced norm certifies a division algebra.
template <class K>
WedderburnComponent<K> simple_module_and_commutant(const K& F, const Group& G, const CharacterTable& T,
                                                   const CentralIdempotent<K>& e, std::uint64_t seed = 0,
                                                   int budget = 1000) {
  using namespace structure_detail;
  WedderburnComponent<K> W;
  W.id = e.id;
  W.orbit = e.orbit;
  W.center = center_of_component(F, G, T, e);
  W.delta = W.center.delta;
  W.psi_degree = T.degrees[e.orbit[0]];
  W.dim_I = left_ideal_dimension(F, G, e.element);
  const int target = W.delta * W.psi_degree;
  if (W.dim_I != target * W.psi_degree) fail(ErrorKind::VerificationFailed, "dim I differs from delta psi(1)^2");

  AlgebraElement<K> f = e.element;
  int dim = W.dim_I;
  std::string how = "ideal";
  auto consider = [&](const AlgebraElement<K>& cand) {
    if (algebra::is_zero(F, cand)) return;
    int d = left_ideal_dimension(F, G, cand);
    if (d < dim) {
      dim = d;
      f = cand;
      how = "abelian-idempotent";
    }
  };
  auto try_subgroup = [&](const std::vector<int>& members) {
    auto S = make_subgroup(G, members);
    auto TS = ordinary_table(S.group);
    auto PS = f_classes(F, S.group, TS);
    for (auto& eps : pcis(F, S.group, TS, PS)) {
      consider(algebra::mul(F, G, e.element, algebra::embed_subgroup(F, G, S, eps.element)));
      if (dim == target) return;
    }
  };
  if (dim > target) {
    std::set<std::vector<int>> tried;
    auto cyclic = [&](int a) {
      std::vector<int> m;
      for (int x = 0, i = 0; i < G.element_order(a); ++i, x = G.mul(x, a)) m.push_back(x);
      std::sort(m.begin(), m.end());
      return m;
    };
    for (int a = 1; a < G.order() && dim > target; ++a) {
      auto m = cyclic(a);
      if (tried.insert(m).second) try_subgroup(m);
    }
    for (int a = 1; a < G.order() && dim > target; ++a)
      for (int b = a + 1; b < G.order() && dim > target; ++b) {
        if (G.mul(a, b) != G.mul(b, a)) continue;
        std::set<int> m;
        for (int x : cyclic(a))
          for (int y : cyclic(b)) m.insert(G.mul(x, y));
        std::vector<int> mv(m.begin(), m.end());
        if (tried.insert(mv).second) try_subgroup(mv);
      }
  }
  if (dim % target != 0) fail(ErrorKind::VerificationFailed, "left ideal dimension not a multiple of delta psi(1)");

  std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(e.id));
  int attempts = 0;
  while (dim > target) {
    auto Eb = corner_basis(F, G, f);
    // over Q, delta = 1, dim 4: a definite reduced norm means no zero divisors
    if constexpr (std::is_same_v<K, CyclotomicField>) if (base_is_rationals(F) && W.delta == 1 && Eb.size() == 4) {
      auto nrd = [&](const AlgebraElement<K>& w) -> mpq_class {
        auto p = minimal_polynomial(F, G, f, w);
        if (poly::degree<K>(p) == 1) {
          mpq_class r = -F.to_rational(p[0]);
          return r * r;
        }
        if (poly::degree<K>(p) != 2) fail(ErrorKind::VerificationFailed, "quaternion element of degree above 2");
        return F.to_rational(p[0]);
      };
      std::vector<mpq_class> diag;
      for (auto& w : Eb) diag.push_back(nrd(w));
      std::vector<std::vector<mpq_class>> B(4, std::vector<mpq_class>(4));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          B[i][j] = i == j ? mpq_class(2 * diag[i]) : nrd(algebra::add(F, Eb[i], Eb[j])) - diag[i] - diag[j];
      bool definite = true;
      for (int r = 1; r <= 4; ++r) {
        std::vector<std::vector<mpq_class>> minor(r, std::vector<mpq_class>(r));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) minor[i][j] = B[i][j];
        definite = definite && sgn(det_q(minor)) > 0;
      }
      if (definite) {
        how = "definite-quaternion";
        break;
      }
    }
    bool split = false;
    for (; attempts < budget && !split; ++attempts) {
      auto w = algebra::zero(F, G);
      for (auto& b : Eb) {
        typename K::Elem c;
        if constexpr (std::is_same_v<K, FiniteField>) c = F.random_base(rng);
        else c = F.from_int(static_cast<long long>(rng() % 7) - 3);
        w = algebra::add(F, w, algebra::scale(F, b, c));
      }
      auto p = minimal_polynomial(F, G, f, w);
      auto factors = split_factors(F, p, rng());
      if (factors.size() < 2) continue;
      auto gi = poly::exact_div(F, p, factors[0]);
      auto [gg, si, ti] = poly::xgcd(F, gi, factors[0]);
      (void)ti;
      if (poly::degree<K>(gg) != 0) continue;  // repeated factor, e.g. (X - a)^2 for a non-semisimple w
      auto fp = evaluate(F, G, poly::mul(F, gi, si), f, w);
      int d = left_ideal_dimension(F, G, fp);
      if (d <= 0 || d >= dim) fail(ErrorKind::VerificationFailed, "idempotent extraction did not shrink the module");
      f = fp;
      dim = d;
      split = true;
      how = "split-search";
    }
    if (!split) fail(ErrorKind::SearchBudgetExhausted, "could not certify a simple module");
  }
  if (!algebra::equal(F, algebra::mul(F, G, f, f), f)) fail(ErrorKind::VerificationFailed, "module generator is not idempotent");

  W.module_idempotent = f;
  W.dim_V = dim;
  auto D = corner_basis(F, G, f);
  W.dim_D = static_cast<int>(D.size());
  if (W.dim_D % W.delta != 0) fail(ErrorKind::VerificationFailed, "dim D not a multiple of delta");
  int m2 = W.dim_D / W.delta;
  W.m = 1;
  while (W.m * W.m < m2) ++W.m;
  if (W.m * W.m != m2) fail(ErrorKind::VerificationFailed, "dim D / delta is not a square");
  if (W.dim_I % W.dim_V != 0) fail(ErrorKind::VerificationFailed, "dim V does not divide dim I");
  W.n = W.dim_I / W.dim_V;
  if (W.dim_I != W.n * W.n * W.m * W.m * W.delta || W.dim_V != W.n * W.m * W.m * W.delta ||
      W.n * W.m != W.psi_degree)
    fail(ErrorKind::VerificationFailed, "Wedderburn dimension identities fail");
  if (F.characteristic() != 0 && W.m != 1) fail(ErrorKind::VerificationFailed, "Schur index above 1 over a finite field");
  // zero divisors: left multiplication by a random nonzero d is injective on D
  for (int t = 0; t < 50; ++t) {
    auto d = algebra::zero(F, G);
    for (auto& b : D) {
      typename K::Elem c;
      if constexpr (std::is_same_v<K, FiniteField>) c = F.random_base(rng);
      else c = F.from_int(static_cast<long long>(rng() % 7) - 3);
      d = algebra::add(F, d, algebra::scale(F, b, c));
    }
    if (algebra::is_zero(F, d)) continue;
    linalg::Mat<K> img;
    for (auto& b : D) img.push_back(algebra::mul(F, G, d, b));
    if (linalg::rank(F, img, G.order()) != W.dim_D) fail(ErrorKind::VerificationFailed, "commutant has zero divisors");
  }
  W.certificate = how == "definite-quaternion" ? how : "dimension";
  return W;
}

}  // namespace wedderburn
