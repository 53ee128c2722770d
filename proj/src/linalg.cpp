#include "altk/linalg.hpp"

#include <algorithm>

#include "altk/errors.hpp"

namespace altk {

namespace {

void check_square(const PolyMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw validation_error("matrix not square");
}

}  // namespace

LaurentPoly det_cofactor(const PolyMatrix& m) {
  check_square(m);
  std::size_t n = m.size();
  if (n == 0) return LaurentPoly::one();
  if (n == 1) return m[0][0];
  LaurentPoly det;
  std::vector<std::size_t> cols(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix sub(n - 1, std::vector<LaurentPoly>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub[r - 1][cc++] = m[r][c];
      }
    }
    LaurentPoly t = m[0][j] * det_cofactor(sub);
    det = (j % 2 == 0) ? det + t : det - t;
  }
  return det;
}

LaurentPoly det_poly_matrix(const PolyMatrix& m) {
  check_square(m);
  std::size_t n = m.size();
  if (n <= 4) return det_cofactor(m);
  PolyMatrix a = m;
  LaurentPoly prev = LaurentPoly::one();
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return LaurentPoly();
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num.exact_div(prev);
      }
      a[i][k] = LaurentPoly();
    }
    prev = a[k][k];
  }
  LaurentPoly det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

SymRatMatrix SymRatMatrix::from_int_rows(
    const std::vector<std::vector<long>>& rows) {
  SymRatMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.dim(); ++i) {
    if (rows[i].size() != rows.size())
      throw validation_error("matrix not square");
    for (int j = 0; j < m.dim(); ++j) m.a_[i][j] = Rat(rows[i][j]);
  }
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i + 1; j < m.dim(); ++j)
      if (m.a_[i][j] != m.a_[j][i]) throw validation_error("matrix not symmetric");
  return m;
}

void SymRatMatrix::set(int i, int j, const Rat& v) {
  a_[i][j] = v;
  a_[j][i] = v;
}

Inertia signature_exact(const SymRatMatrix& m) {
  int n = m.dim();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

  Inertia res;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      // Prefer a later nonzero diagonal entry (congruence row+col swap).
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][i] != 0) {
          p = i;
          break;
        }
      if (p >= 0) {
        for (int j = 0; j < n; ++j) std::swap(a[k][j], a[p][j]);
        for (int i = 0; i < n; ++i) std::swap(a[i][k], a[i][p]);
      } else {
        // All remaining diagonal entries vanish; pull in an off-diagonal one
        // with the congruence row_k += row_j, col_k += col_j.
        int q = -1;
        for (int j = k + 1; j < n; ++j)
          if (a[k][j] != 0) {
            q = j;
            break;
          }
        if (q < 0) {
          // Active row k is entirely zero.
          ++res.n_zero;
          continue;
        }
        for (int j = 0; j < n; ++j) a[k][j] += a[q][j];
        for (int i = 0; i < n; ++i) a[i][k] += a[i][q];
      }
    }
    if (a[k][k] == 0) {
      ++res.n_zero;
      continue;
    }
    if (sgn(a[k][k]) > 0)
      ++res.n_plus;
    else
      ++res.n_minus;
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (int j = k; j < n; ++j) a[j][i] = a[i][j];
    }
  }
  return res;
}

std::vector<Rat> char_poly(const SymRatMatrix& m) {
  int n = m.dim();
  // Evaluate det(x I - M) at x = 0..n and interpolate.
  std::vector<Rat> xs(n + 1), ys(n + 1);
  for (int p = 0; p <= n; ++p) {
    xs[p] = Rat(p);
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a[i][j] = -m.at(i, j);
        if (i == j) a[i][j] += Rat(p);
      }
    // Gaussian elimination with exact rationals.
    Rat det(1);
    bool zero = false;
    for (int k = 0; k < n && !zero; ++k) {
      int piv = -1;
      for (int i = k; i < n; ++i)
        if (a[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) {
        zero = true;
        break;
      }
      if (piv != k) {
        std::swap(a[piv], a[k]);
        det = -det;
      }
      det *= a[k][k];
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] == 0) continue;
        Rat f = a[i][k] / a[k][k];
        for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      }
    }
    ys[p] = zero ? Rat(0) : det;
  }
  // Lagrange interpolation; result has degree exactly n.
  std::vector<Rat> coeffs(n + 1, Rat(0));
  for (int i = 0; i <= n; ++i) {
    // Basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
    std::vector<Rat> basis = {Rat(1)};
    Rat denom(1);
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    Rat scale = ys[i] / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += basis[d] * scale;
  }
  for (auto& c : coeffs) c.canonicalize();
  return coeffs;
}

Inertia signature_charpoly(const SymRatMatrix& m) {
  std::vector<Rat> p = char_poly(m);
  Inertia res;
  std::size_t first = 0;
  while (first < p.size() && p[first] == 0) ++first;
  res.n_zero = static_cast<int>(first);
  // Descartes' rule is exact on real-rooted polynomials.
  int last_sign = 0;
  int variations = 0;
  for (std::size_t i = first; i < p.size(); ++i) {
    int s = sgn(p[i]);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++variations;
    last_sign = s;
  }
  res.n_plus = variations;
  res.n_minus = m.dim() - res.n_zero - res.n_plus;
  return res;
}

}  // namespace altk
