#include "altk/coeffseq.hpp"

#include <sstream>

#include "altk/errors.hpp"

namespace altk {

bool CoeffSeq::palindromic() const {
  std::size_t l = mags.size();
  for (std::size_t i = 0; i < l / 2; ++i)
    if (mags[i] != mags[l - 1 - i]) return false;
  return true;
}

bool CoeffSeq::all_positive() const {
  for (const Int& a : mags)
    if (a <= 0) return false;
  return true;
}

std::string CoeffSeq::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < mags.size(); ++i) {
    if (i) os << ",";
    os << to_string(mags[i]);
  }
  os << ")";
  return os.str();
}

LaurentPoly CoeffSeq::to_poly() const {
  LaurentPoly p;
  for (std::size_t i = 0; i < mags.size(); ++i)
    p += LaurentPoly::term(i % 2 == 0 ? mags[i] : -mags[i],
                           static_cast<long>(i));
  return p;
}

CoeffSeq normalize_alexander(const LaurentPoly& p) {
  if (p.is_zero())
    throw validation_error("cannot normalize the zero polynomial");
  LaurentPoly q = p.unit_normal();
  CoeffSeq c;
  c.mags.reserve(q.length());
  c.signs_alternate = true;
  for (long e = 0; e <= q.hi(); ++e) {
    Int a = q.coeff(e);
    int expect = e % 2 == 0 ? 1 : -1;
    if (sgn(a) != expect) c.signs_alternate = false;
    c.mags.push_back(abs(a));
  }
  return c;
}

Int link_determinant(const CoeffSeq& c) {
  Int s(0);
  for (const Int& a : c.mags) s += a;
  return s;
}

}  // namespace altk
