#pragma once

// Exact Gaussian elimination over any field type. Matrices are row-major
// vectors of rows; vectors are rows.

#include <vector>

#include "wedderburn/error.hpp"

namespace wedderburn::linalg {

template <class Fld>
using Vec = std::vector<typename Fld::Elem>;
template <class Fld>
using Mat = std::vector<Vec<Fld>>;

template <class Fld>
struct Echelon {
  Mat<Fld> rows;           ///< reduced row echelon form, nonzero rows only
  std::vector<int> pivots; ///< pivot column of each row
};

/// Reduced row echelon form of the span of the given rows.
template <class Fld>
Echelon<Fld> rref(const Fld& F, Mat<Fld> m, int ncols) {
  Echelon<Fld> out;
  int r = 0;
  const int nrows = static_cast<int>(m.size());
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int piv = -1;
    for (int i = r; i < nrows; ++i)
      if (!F.is_zero(m[i][c])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    auto inv = F.inv(m[r][c]);
    for (int j = c; j < ncols; ++j) m[r][j] = F.mul(m[r][j], inv);
    for (int i = 0; i < nrows; ++i) {
      if (i == r || F.is_zero(m[i][c])) continue;
      auto f = m[i][c];
      for (int j = c; j < ncols; ++j)
        if (!F.is_zero(m[r][j])) m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

template <class Fld>
int rank(const Fld& F, const Mat<Fld>& m, int ncols) {
  return static_cast<int>(rref(F, m, ncols).pivots.size());
}

/// Basis of {x : A x = 0} where A is given by rows of length ncols.
template <class Fld>
Mat<Fld> nullspace(const Fld& F, const Mat<Fld>& a, int ncols) {
  auto e = rref(F, a, ncols);
  std::vector<int> is_pivot(ncols, -1);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) is_pivot[e.pivots[i]] = static_cast<int>(i);
  Mat<Fld> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free] >= 0) continue;
    Vec<Fld> v(ncols, F.zero());
    v[free] = F.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = F.neg(e.rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Coordinates of target in the span of echelon rows, or empty if outside.
template <class Fld>
std::vector<typename Fld::Elem> coordinates(const Fld& F, const Echelon<Fld>& e,
                                            Vec<Fld> target, bool* ok = nullptr) {
  std::vector<typename Fld::Elem> c(e.rows.size(), F.zero());
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    auto f = target[e.pivots[i]];
    if (F.is_zero(f)) continue;
    c[i] = f;
    for (std::size_t j = 0; j < target.size(); ++j)
      if (!F.is_zero(e.rows[i][j])) target[j] = F.sub(target[j], F.mul(f, e.rows[i][j]));
  }
  bool inside = true;
  for (auto& x : target)
    if (!F.is_zero(x)) inside = false;
  if (ok) *ok = inside;
  if (!inside && !ok) fail(ErrorKind::VerificationFailed, "vector outside span");
  return c;
}

/// Solve A x = b for square nonsingular A (A given by rows).
template <class Fld>
Vec<Fld> solve(const Fld& F, const Mat<Fld>& a, const Vec<Fld>& b) {
  const int n = static_cast<int>(a.size());
  Mat<Fld> aug(n);
  for (int i = 0; i < n; ++i) {
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  auto e = rref(F, aug, n + 1);
  if (static_cast<int>(e.pivots.size()) != n || e.pivots.back() != n - 1)
    fail(ErrorKind::DivisionByZero, "singular linear system");
  Vec<Fld> x(n);
  for (int i = 0; i < n; ++i) x[i] = e.rows[i][n];
  return x;
}

template <class Fld>
Mat<Fld> inverse(const Fld& F, const Mat<Fld>& a) {
  const int n = static_cast<int>(a.size());
  Mat<Fld> aug(n);
  for (int i = 0; i < n; ++i) {
    aug[i] = a[i];
    for (int j = 0; j < n; ++j) aug[i].push_back(i == j ? F.one() : F.zero());
  }
  auto e = rref(F, aug, 2 * n);
  if (static_cast<int>(e.pivots.size()) != n || e.pivots.back() != n - 1)
    fail(ErrorKind::DivisionByZero, "singular matrix");
  Mat<Fld> out(n);
  for (int i = 0; i < n; ++i) out[i].assign(e.rows[i].begin() + n, e.rows[i].end());
  return out;
}

template <class Fld>
Mat<Fld> matmul(const Fld& F, const Mat<Fld>& a, const Mat<Fld>& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat<Fld> c(n, Vec<Fld>(m, F.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (F.is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!F.is_zero(b[l][j])) c[i][j] = F.add(c[i][j], F.mul(a[i][l], b[l][j]));
    }
  return c;
}

template <class Fld>
Mat<Fld> identity(const Fld& F, std::size_t n) {
  Mat<Fld> m(n, Vec<Fld>(n, F.zero()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = F.one();
  return m;
}

}  // namespace wedderburn::linalg
