#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "altk/ints.hpp"
#include "altk/laurent.hpp"

namespace altk {

// Sparse polynomial in a fixed number of variables, exponent vector -> nonzero
// integer coefficient. Exponents are signed so intermediate Laurent-style
// computations stay exact; the text format and the support checkers require
// nonnegative exponents.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(int arity = 0) : arity_(arity) {}

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Int>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Int& c);
  Int coeff(const Exponents& e) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const = default;

  // Total degree of every term when they all agree.
  std::optional<int> homogeneous_degree() const;
  bool nonnegative_exponents() const;

  // Partial derivative with respect to variable v.
  MultiPoly derivative(int v) const;

  // Substitute x_j -> t^{weights[j]}, collapsing to one variable.
  LaurentPoly specialize(const std::vector<int>& weights) const;

  // Exact division; nullopt if not divisible.
  std::optional<MultiPoly> exact_div(const MultiPoly& d) const;

  // One term per line: "coefficient : e1 e2 ... ek".
  static MultiPoly parse(const std::string& text);
  std::string format() const;

  std::string str(const std::vector<std::string>& vars = {}) const;

 private:
  int arity_;
  std::map<Exponents, Int> terms_;
};

}  // namespace altk
