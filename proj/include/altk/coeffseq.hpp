#pragma once

#include <string>
#include <vector>

#include "altk/ints.hpp"
#include "altk/laurent.hpp"

namespace altk {

// Normalized coefficient magnitudes of an Alexander polynomial: (a_0,...,
// a_{l-1}) with a_0 > 0, plus whether the signs of the underlying polynomial
// strictly alternate (they must for non-split alternating links).
struct CoeffSeq {
  std::vector<Int> mags;
  bool signs_alternate = false;

  std::size_t length() const { return mags.size(); }
  bool palindromic() const;
  bool all_positive() const;
  std::string str() const;
  bool operator==(const CoeffSeq&) const = default;

  // Re-embed as the sign-alternating polynomial sum (-1)^i a_i t^i.
  LaurentPoly to_poly() const;
};

// Multiply by +-t^k so the minimum exponent is 0 and the constant coefficient
// is positive; record magnitudes. Throws on the zero polynomial.
CoeffSeq normalize_alexander(const LaurentPoly& p);

// Determinant of the link, sum of the magnitudes (|Delta(-1)| under
// alternating signs).
Int link_determinant(const CoeffSeq& c);

}  // namespace altk
