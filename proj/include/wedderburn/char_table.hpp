#pragma once

// Ordinary character tables by the modular Dixon-Schneider method: class
// multiplication coefficients are diagonalized over GF(ell), ell = 1 mod u,
// and every character value is lifted to the multiset of u-th roots of unity
// that are the eigenvalues of the representing matrix. The lifted table is
// checked exactly in Q(zeta_u).
//
// Characters are kept as root multisets, so they embed into any ambient field
// that has a primitive u-th root: Q(zeta_N) for u | N, or GF(ell'^M) (Brauer
// reduction).

#include <algorithm>
#include <random>
#include <vector>

#include "wedderburn/cyclotomic.hpp"
#include "wedderburn/error.hpp"
#include "wedderburn/group.hpp"
#include "wedderburn/linalg.hpp"
#include "wedderburn/numtheory.hpp"
#include "wedderburn/prime_field.hpp"

namespace wedderburn {

/// Class-indexed values.
template <class K>
using ClassFunction = std::vector<typename K::Elem>;

struct CharacterTable {
  ConjugacyClasses classes;
  int order = 1;                       ///< |G|
  int u = 1;                           ///< exponent
  std::uint64_t ell = 0;               ///< prime used for the modular computation
  std::vector<std::vector<int>> power; ///< power[k][a] = class of g_k^a, 0 <= a < u
  std::vector<int> inverse_class;
  std::vector<int> degrees;
  /// roots[i][k][t] = multiplicity of zeta_u^t as an eigenvalue of psi_i(g_k)
  std::vector<std::vector<std::vector<int>>> roots;
  std::vector<std::vector<Cyc>> values;  ///< exact values in Q(zeta_u)

  int count() const { return static_cast<int>(degrees.size()); }
  int class_count() const { return classes.count(); }

  /// Row i embedded into an ambient field with a primitive u-th root.
  template <class K>
  ClassFunction<K> embed(const K& F, int i) const {
    ClassFunction<K> out;
    for (int k = 0; k < class_count(); ++k) out.push_back(F.from_root_multiset(u, roots[i][k]));
    return out;
  }

  /// Row index of psi_i composed with g -> g^a (a coprime to u).
  int galois_image(int i, long long a) const {
    a = nt::mod(a, u);
    std::vector<std::vector<int>> target;
    for (int k = 0; k < class_count(); ++k) target.push_back(roots[i][power[k][a]]);
    for (int j = 0; j < count(); ++j)
      if (roots[j] == target) return j;
    fail(ErrorKind::LiftVerificationFailed, "Galois conjugate character not in table");
  }
};

namespace chartable_detail {

using PF = PrimeField;
using PMat = linalg::Mat<PF>;
using PVec = linalg::Vec<PF>;

/// Characteristic polynomial by Hessenberg reduction.
inline std::vector<std::uint64_t> charpoly(const PF& F, PMat H) {
  const int n = static_cast<int>(H.size());
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (H[i][j] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      std::swap(H[piv], H[j + 1]);
      for (int r = 0; r < n; ++r) std::swap(H[r][piv], H[r][j + 1]);
    }
    auto inv = F.inv(H[j + 1][j]);
    for (int i = j + 2; i < n; ++i) {
      if (H[i][j] == 0) continue;
      auto f = F.mul(H[i][j], inv);
      for (int c = 0; c < n; ++c) H[i][c] = F.sub(H[i][c], F.mul(f, H[j + 1][c]));
      for (int r = 0; r < n; ++r) H[r][j + 1] = F.add(H[r][j + 1], F.mul(f, H[r][i]));
    }
  }
  std::vector<std::vector<std::uint64_t>> p(n + 1);
  p[0] = {1};
  for (int k = 1; k <= n; ++k) {
    // (X - h_kk) p_{k-1}
    auto& prev = p[k - 1];
    std::vector<std::uint64_t> cur(prev.size() + 1, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = F.add(cur[i + 1], prev[i]);
      cur[i] = F.sub(cur[i], F.mul(H[k - 1][k - 1], prev[i]));
    }
    std::uint64_t t = 1;
    for (int i = k - 1; i >= 1; --i) {
      t = F.mul(t, H[i][i - 1]);
      auto c = F.mul(t, H[i - 1][k - 1]);
      for (std::size_t e = 0; e < p[i - 1].size(); ++e) cur[e] = F.sub(cur[e], F.mul(c, p[i - 1][e]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

/// Split the invariant subspace spanned by `basis` (column vectors) into
/// eigenspaces of M; returns nullopt if M is not diagonalizable there.
inline std::vector<std::vector<PVec>> split(const PF& F, const PMat& M, const std::vector<PVec>& basis) {
  const int d = static_cast<int>(basis.size());
  const int s = static_cast<int>(M.size());
  if (d == 1) return {basis};
  // coordinates of M b_i in the basis
  PMat rows(basis.begin(), basis.end());
  auto ech = linalg::rref(F, rows, s);
  // express echelon rows in terms of basis: solve via augmented system
  PMat aug;
  for (int i = 0; i < d; ++i) {
    auto r = basis[i];
    for (int j = 0; j < d; ++j) r.push_back(i == j ? 1 : 0);
    aug.push_back(r);
  }
  auto ech_aug = linalg::rref(F, aug, s + d);
  PMat C(d, PVec(d, 0));
  for (int i = 0; i < d; ++i) {
    PVec mb(s, 0);
    for (int r = 0; r < s; ++r)
      for (int c = 0; c < s; ++c)
        if (M[r][c] && basis[i][c]) mb[r] = F.add(mb[r], F.mul(M[r][c], basis[i][c]));
    // coordinates against echelon form, then map to basis coordinates
    auto ce = linalg::coordinates(F, ech, mb);
    for (int e = 0; e < d; ++e) {
      if (ce[e] == 0) continue;
      for (int j = 0; j < d; ++j) C[j][i] = F.add(C[j][i], F.mul(ce[e], ech_aug.rows[e][s + j]));
    }
  }
  auto cp = charpoly(F, C);
  std::vector<std::vector<PVec>> out;
  int total = 0;
  for (std::uint64_t lam = 0; lam < F.modulus(); ++lam) {
    std::uint64_t v = 0;
    for (auto it = cp.rbegin(); it != cp.rend(); ++it) v = F.add(F.mul(v, lam), *it);
    if (v != 0) continue;
    PMat A = C;
    for (int i = 0; i < d; ++i) A[i][i] = F.sub(A[i][i], lam);
    auto ns = linalg::nullspace(F, A, d);
    std::vector<PVec> space;
    for (auto& y : ns) {
      PVec w(s, 0);
      for (int j = 0; j < d; ++j)
        if (y[j])
          for (int r = 0; r < s; ++r) w[r] = F.add(w[r], F.mul(y[j], basis[j][r]));
      space.push_back(w);
    }
    total += static_cast<int>(space.size());
    out.push_back(std::move(space));
  }
  if (total != d) fail(ErrorKind::LiftVerificationFailed, "class algebra not diagonalizable");
  return out;
}

}  // namespace chartable_detail

/// Character table of G; rows sorted by (degree, values in Q(zeta_u) order).
/// The modular prime is the least ell = 1 mod u above max(2|G|, prime_floor).
inline CharacterTable ordinary_table(const Group& G, std::uint64_t seed = 0, long long prime_floor = 0) {
  using namespace chartable_detail;
  CharacterTable T;
  T.classes = conjugacy_classes(G);
  T.order = G.order();
  T.u = G.exponent();
  const auto& cc = T.classes;
  const int s = cc.count(), u = T.u, n = G.order();
  T.power.assign(s, std::vector<int>(u));
  for (int k = 0; k < s; ++k)
    for (int a = 0, g = 0; a < u; ++a, g = G.mul(g, cc.representatives[k])) T.power[k][a] = cc.class_of[g];
  for (int k = 0; k < s; ++k) T.inverse_class.push_back(cc.class_of[G.inv(cc.representatives[k])]);

  T.ell = static_cast<std::uint64_t>(nt::prime_one_mod(u, std::max(2LL * n, prime_floor)));
  PF F(T.ell);
  // class matrices (M_j)_{kl} = #{x in C_j : x^-1 g_l in C_k}
  std::vector<PMat> M(s, PMat(s, PVec(s, 0)));
  for (int j = 0; j < s; ++j)
    for (int l = 0; l < s; ++l)
      for (int x : cc.classes[j]) {
        int k = cc.class_of[G.mul(G.inv(x), cc.representatives[l])];
        M[j][k][l] = F.add(M[j][k][l], 1);
      }
  std::vector<std::vector<PVec>> spaces;
  {
    std::vector<PVec> id;
    for (int i = 0; i < s; ++i) {
      PVec e(s, 0);
      e[i] = 1;
      id.push_back(e);
    }
    spaces.push_back(id);
  }
  auto refine = [&](const PMat& A) {
    std::vector<std::vector<PVec>> next;
    for (auto& W : spaces)
      for (auto& part : split(F, A, W)) next.push_back(std::move(part));
    spaces = std::move(next);
  };
  auto all_one = [&] {
    for (auto& W : spaces)
      if (W.size() != 1) return false;
    return true;
  };
  std::mt19937_64 rng(seed);
  PMat comb(s, PVec(s, 0));
  for (int j = 0; j < s; ++j) {
    auto c = F.random_base(rng);
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) comb[a][b] = F.add(comb[a][b], F.mul(c, M[j][a][b]));
  }
  refine(comb);
  for (int j = 0; j < s && !all_one(); ++j) refine(M[j]);
  if (static_cast<int>(spaces.size()) != s || !all_one())
    fail(ErrorKind::LiftVerificationFailed, "simultaneous diagonalization failed");

  const auto z = F.pow(nt::primitive_root(T.ell), (T.ell - 1) / static_cast<std::uint64_t>(u));
  const auto u_inv = F.inv(F.from_int(u));
  CyclotomicField Ku(u);
  struct Row {
    int degree;
    std::vector<std::vector<int>> roots;
    std::vector<Cyc> values;
  };
  std::vector<Row> rows;
  for (auto& W : spaces) {
    PVec w = W[0];
    if (w[0] == 0) fail(ErrorKind::LiftVerificationFailed, "central character vanishes at 1");
    auto w0i = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, w0i);
    std::uint64_t acc = 0;
    for (int l = 0; l < s; ++l)
      acc = F.add(acc, F.mul(F.mul(w[l], w[T.inverse_class[l]]), F.inv(F.from_int(cc.sizes[l]))));
    auto deg2 = F.mul(F.from_int(n), F.inv(acc));
    long long dsq = static_cast<long long>(deg2), deg = 0;
    while ((deg + 1) * (deg + 1) <= dsq) ++deg;
    if (deg * deg != dsq || n % deg != 0) fail(ErrorKind::LiftVerificationFailed, "degree is not an integer");
    PVec chi(s);
    for (int l = 0; l < s; ++l) chi[l] = F.mul(F.mul(w[l], F.from_int(deg)), F.inv(F.from_int(cc.sizes[l])));
    Row r;
    r.degree = static_cast<int>(deg);
    for (int l = 0; l < s; ++l) {
      std::vector<int> m(u, 0);
      int total = 0;
      for (int k = 0; k < u; ++k) {
        std::uint64_t acc2 = 0;
        for (int j = 0; j < u; ++j)
          acc2 = F.add(acc2, F.mul(chi[T.power[l][j]], F.pow(z, nt::mod(-static_cast<long long>(j) * k, u))));
        auto mk = F.mul(acc2, u_inv);
        if (mk > static_cast<std::uint64_t>(deg)) fail(ErrorKind::LiftVerificationFailed, "eigenvalue multiplicity out of range");
        m[k] = static_cast<int>(mk);
        total += m[k];
      }
      if (total != deg) fail(ErrorKind::LiftVerificationFailed, "eigenvalue count differs from degree");
      r.values.push_back(Ku.from_root_multiset(u, m));
      r.roots.push_back(std::move(m));
    }
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (int k = 0; k < s; ++k) {
      if (Ku.less(a.values[k], b.values[k])) return true;
      if (Ku.less(b.values[k], a.values[k])) return false;
    }
    return false;
  });
  for (auto& r : rows) {
    T.degrees.push_back(r.degree);
    T.roots.push_back(std::move(r.roots));
    T.values.push_back(std::move(r.values));
  }
  // exact row orthogonality: sum_k |C_k| psi_i(g_k) psi_j(g_k^-1) = |G| delta_ij
  for (int i = 0; i < s; ++i)
    for (int j = i; j < s; ++j) {
      std::vector<long long> acc(u, 0);
      for (int k = 0; k < s; ++k) {
        const auto& a = T.roots[i][k];
        const auto& b = T.roots[j][T.inverse_class[k]];
        for (int x = 0; x < u; ++x) {
          if (!a[x]) continue;
          for (int y = 0; y < u; ++y)
            if (b[y]) acc[(x + y) % u] += static_cast<long long>(cc.sizes[k]) * a[x] * b[y];
        }
      }
      std::vector<int> acc_i(acc.begin(), acc.end());
      auto v = Ku.from_root_multiset(u, acc_i);
      if (!Ku.equal(v, Ku.from_int(i == j ? n : 0)))
        fail(ErrorKind::LiftVerificationFailed, "row orthogonality fails");
    }
  return T;
}

// ---------------------------------------------------------------------------
// Class functions over an arbitrary ambient field.

/// <a, b> = (1/|G|) sum_k |C_k| a(g_k) b(g_k^-1).
template <class K>
typename K::Elem inner_product(const K& F, const CharacterTable& T, const ClassFunction<K>& a,
                               const ClassFunction<K>& b) {
  auto acc = F.zero();
  for (int k = 0; k < T.class_count(); ++k)
    acc = F.add(acc, F.mul(F.from_int(T.classes.sizes[k]), F.mul(a[k], b[T.inverse_class[k]])));
  return F.mul(acc, F.inv(F.from_int(T.order)));
}

/// Restriction of a class function of G to the classes of H.
template <class K>
ClassFunction<K> restrict_to(const CharacterTable& TG, const Subgroup& H, const CharacterTable& TH,
                             const ClassFunction<K>& f) {
  ClassFunction<K> out;
  for (int k = 0; k < TH.class_count(); ++k)
    out.push_back(f[TG.classes.class_of[H.to_parent(TH.classes.representatives[k])]]);
  return out;
}

/// Induced class function, (Ind f)(g) = (1/|H|) sum_{t in G} f°(t g t^-1),
/// evaluated as |G| / (|H| |C(g)|) * sum over C(g) meet H of f.
template <class K>
ClassFunction<K> induce(const K& F, const CharacterTable& TG, const Subgroup& H, const CharacterTable& TH,
                        const ClassFunction<K>& f) {
  ClassFunction<K> out;
  const int n = TG.order, m = TH.order;
  for (int k = 0; k < TG.class_count(); ++k) {
    auto acc = F.zero();
    for (int y : TG.classes.classes[k])
      if (H.contains(y)) acc = F.add(acc, f[TH.classes.class_of[H.from_parent[y]]]);
    out.push_back(F.mul(acc, F.from_ratio(n, static_cast<long long>(m) * TG.classes.sizes[k])));
  }
  return out;
}

}  // namespace wedderburn
