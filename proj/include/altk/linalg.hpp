#pragma once

#include <vector>

#include "altk/ints.hpp"
#include "altk/laurent.hpp"

namespace altk {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Exact determinant via fraction-free (Bareiss) elimination over the Laurent
// polynomial ring; cofactor expansion for dimension <= 4.
LaurentPoly det_poly_matrix(const PolyMatrix& m);

// Cofactor expansion at any size; used as an independent oracle in tests.
LaurentPoly det_cofactor(const PolyMatrix& m);

struct Inertia {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;
  bool operator==(const Inertia&) const = default;
};

// Square symmetric matrix of exact rationals.
class SymRatMatrix {
 public:
  explicit SymRatMatrix(int n) : n_(n), a_(n, std::vector<Rat>(n, Rat(0))) {}
  static SymRatMatrix from_int_rows(const std::vector<std::vector<long>>& rows);

  int dim() const { return n_; }
  const Rat& at(int i, int j) const { return a_[i][j]; }
  void set(int i, int j, const Rat& v);  // keeps the matrix symmetric

 private:
  int n_;
  std::vector<std::vector<Rat>> a_;
};

// Exact inertia by congruence (symmetric Gaussian) pivoting.
Inertia signature_exact(const SymRatMatrix& m);

// Exact inertia from the characteristic polynomial: a real-rooted polynomial
// has as many positive roots as coefficient sign variations. Second route,
// kept so the two can be checked against each other.
Inertia signature_charpoly(const SymRatMatrix& m);

// Characteristic polynomial det(x I - M), exact, computed by interpolation.
std::vector<Rat> char_poly(const SymRatMatrix& m);

}  // namespace altk
