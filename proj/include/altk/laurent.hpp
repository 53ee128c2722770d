#pragma once

#include <string>
#include <vector>

#include "altk/ints.hpp"

namespace altk {

// Laurent polynomial in one variable t over the integers.
// Dense coefficient list starting at exponent lo(); first and last stored
// coefficients are nonzero unless the polynomial is zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long lo, std::vector<Int> coeffs);
  explicit LaurentPoly(const Int& constant);
  explicit LaurentPoly(long constant) : LaurentPoly(Int(constant)) {}

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(Int(1)); }
  // c * t^e
  static LaurentPoly term(const Int& c, long e);

  bool is_zero() const { return c_.empty(); }
  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
  // Number of stored coefficients (span + 1); 0 for the zero polynomial.
  std::size_t length() const { return c_.size(); }
  Int coeff(long e) const;
  const std::vector<Int>& coeffs() const { return c_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const = default;

  LaurentPoly shifted(long k) const;  // multiply by t^k
  LaurentPoly inverted() const;       // substitute t -> 1/t
  Int evaluate(const Int& x) const;   // requires lo() >= 0 or x = +-1

  // Exact quotient; throws validation_error if the division leaves a
  // remainder.
  LaurentPoly exact_div(const LaurentPoly& d) const;

  // Unit-normal form: multiplied by +-t^k so lo() == 0 and the constant
  // coefficient is positive. Zero stays zero.
  LaurentPoly unit_normal() const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  long lo_ = 0;
  std::vector<Int> c_;
};

}  // namespace altk
