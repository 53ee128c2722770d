#include "oracles.hpp"

#include <stdexcept>

namespace oracles {

using altk::BraidWord;
using altk::Inertia;
using altk::Int;
using altk::LaurentPoly;
using altk::PolyMatrix;
using altk::SymRatMatrix;

// One homology cycle per adjacent pair of bands in a generator column; the
// pairing below was calibrated against the Burau and Goeritz routes on
// torus and mixed braids and is S-equivalent to any other valid choice.
std::vector<std::vector<long>> braid_seifert_matrix(const BraidWord& b) {
  int n = b.strands;
  std::vector<std::vector<int>> col_pos(n);    // word positions per column
  std::vector<std::vector<int>> col_sign(n);
  for (int p = 0; p < static_cast<int>(b.letters.size()); ++p) {
    int w = b.letters[p];
    int i = w > 0 ? w : -w;
    col_pos[i].push_back(p);
    col_sign[i].push_back(w > 0 ? 1 : -1);
  }
  struct Cycle {
    int col;
    int p1, p2;
    int s1, s2;
  };
  std::vector<Cycle> cycles;
  for (int i = 1; i < n; ++i) {
    if (col_pos[i].empty()) throw std::runtime_error("split closure");
    for (std::size_t j = 0; j + 1 < col_pos[i].size(); ++j)
      cycles.push_back({i, col_pos[i][j], col_pos[i][j + 1], col_sign[i][j],
                        col_sign[i][j + 1]});
  }
  int r = static_cast<int>(cycles.size());
  std::vector<std::vector<long>> v(r, std::vector<long>(r, 0));
  for (int a = 0; a < r; ++a) {
    v[a][a] = -(cycles[a].s1 + cycles[a].s2) / 2;
    for (int c = a + 1; c < r; ++c) {
      const Cycle& x = cycles[a];
      const Cycle& y = cycles[c];
      if (x.col == y.col) {
        // adjacent cycles share a band
        if (x.p2 == y.p1) {
          int e = x.s2;
          v[a][c] = (e + 1) / 2;
          v[c][a] = (e - 1) / 2;
        } else if (y.p2 == x.p1) {
          int e = y.s2;
          v[c][a] = (e + 1) / 2;
          v[a][c] = (e - 1) / 2;
        }
      } else if (y.col == x.col + 1 || x.col == y.col + 1) {
        const Cycle& l = x.col < y.col ? x : y;  // left column
        const Cycle& m = x.col < y.col ? y : x;
        long* lm = x.col < y.col ? &v[a][c] : &v[c][a];
        long* ml = x.col < y.col ? &v[c][a] : &v[a][c];
        if (l.p1 < m.p1 && m.p1 < l.p2 && l.p2 < m.p2) {
          *lm = 0;
          *ml = 1;
        } else if (m.p1 < l.p1 && l.p1 < m.p2 && m.p2 < l.p2) {
          *lm = 0;
          *ml = -1;
        }
      }
    }
  }
  return v;
}

int seifert_signature(const BraidWord& b) {
  auto v = braid_seifert_matrix(b);
  int r = static_cast<int>(v.size());
  std::vector<std::vector<long>> sym(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) sym[i][j] = v[i][j] + v[j][i];
  if (r == 0) return 0;
  Inertia in = altk::signature_exact(SymRatMatrix::from_int_rows(sym));
  return in.n_plus - in.n_minus;
}

LaurentPoly seifert_alexander(const BraidWord& b) {
  auto v = braid_seifert_matrix(b);
  int r = static_cast<int>(v.size());
  if (r == 0) return LaurentPoly::one();
  PolyMatrix m(r, std::vector<LaurentPoly>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      m[i][j] = LaurentPoly(Int(v[i][j])) -
                LaurentPoly::term(Int(v[j][i]), 1);
    }
  return altk::det_poly_matrix(m).unit_normal();
}

}  // namespace oracles
