#include "altk/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "altk/errors.hpp"

namespace altk {

LaurentPoly::LaurentPoly(long lo, std::vector<Int> coeffs)
    : lo_(lo), c_(std::move(coeffs)) {
  trim();
}

LaurentPoly::LaurentPoly(const Int& constant) {
  if (constant != 0) c_.push_back(constant);
}

LaurentPoly LaurentPoly::term(const Int& c, long e) {
  LaurentPoly p;
  if (c != 0) {
    p.lo_ = e;
    p.c_.push_back(c);
  }
  return p;
}

void LaurentPoly::trim() {
  std::size_t front = 0;
  while (front < c_.size() && c_[front] == 0) ++front;
  if (front == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  std::size_t back = c_.size();
  while (back > front && c_[back - 1] == 0) --back;
  if (front > 0 || back < c_.size()) {
    c_ = std::vector<Int>(c_.begin() + front, c_.begin() + back);
    lo_ += static_cast<long>(front);
  }
}

Int LaurentPoly::coeff(long e) const {
  if (is_zero() || e < lo() || e > hi()) return Int(0);
  return c_[static_cast<std::size_t>(e - lo_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long lo = std::min(lo_, o.lo_);
  long hi = std::max(this->hi(), o.hi());
  std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    c[static_cast<std::size_t>(lo_ - lo) + i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c[static_cast<std::size_t>(o.lo_ - lo) + i] += o.c_[i];
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return LaurentPoly();
  std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return LaurentPoly(lo_ + o.lo_, std::move(c));
}

LaurentPoly LaurentPoly::shifted(long k) const {
  if (is_zero()) return *this;
  LaurentPoly r = *this;
  r.lo_ += k;
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return *this;
  LaurentPoly r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.lo_ = -hi();
  return r;
}

Int LaurentPoly::evaluate(const Int& x) const {
  if (is_zero()) return Int(0);
  if (lo_ < 0 && x != 1 && x != -1)
    throw validation_error("cannot evaluate negative exponents at " +
                           to_string(x));
  Int acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  if (lo_ != 0) {
    // x is +-1 here when lo_ < 0
    Int unit = 1;
    long e = lo_ < 0 ? -lo_ : lo_;
    for (long i = 0; i < e; ++i) unit *= x;
    acc *= unit;
  }
  return acc;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  if (d.is_zero()) throw validation_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  LaurentPoly rem = *this;
  std::vector<Int> q(
      static_cast<std::size_t>(std::max<long>(hi() - lo() - (d.hi() - d.lo()), 0)) + 1,
      Int(0));
  long qlo = lo() - d.lo();
  const Int& dl = d.c_.back();
  while (!rem.is_zero() && rem.hi() - rem.lo() >= d.hi() - d.lo()) {
    Int lead = rem.c_.back();
    Int qc, r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), dl.get_mpz_t());
    if (r != 0) throw validation_error("non-exact polynomial division");
    long qe = rem.hi() - d.hi();
    if (qe < qlo) throw validation_error("non-exact polynomial division");
    q[static_cast<std::size_t>(qe - qlo)] = qc;
    rem -= d * term(qc, qe);
  }
  if (!rem.is_zero()) throw validation_error("non-exact polynomial division");
  return LaurentPoly(qlo, std::move(q));
}

LaurentPoly LaurentPoly::unit_normal() const {
  if (is_zero()) return *this;
  LaurentPoly r = *this;
  r.lo_ = 0;
  if (sgn(r.c_.front()) < 0) r = -r;
  return r;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = hi(); e >= lo(); --e) {
    Int c = coeff(e);
    if (c == 0) continue;
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    if (a != 1 || e == 0) os << to_string(a);
    if (e != 0) {
      if (a != 1) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace altk
