#include "altk/multipoly.hpp"

#include <sstream>

#include "altk/errors.hpp"

namespace altk {

void MultiPoly::add_term(const Exponents& e, const Int& c) {
  if (static_cast<int>(e.size()) != arity_)
    throw validation_error("exponent vector arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (arity_ != o.arity_) throw validation_error("arity mismatch");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  return *this + (-o);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(arity_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (arity_ != o.arity_) throw validation_error("arity mismatch");
  MultiPoly r(arity_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e = e1;
      for (int i = 0; i < arity_; ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int x : e) t += x;
    if (!d) {
      d = t;
    } else if (*d != t) {
      return std::nullopt;
    }
  }
  return d;
}

bool MultiPoly::nonnegative_exponents() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return false;
  return true;
}

MultiPoly MultiPoly::derivative(int v) const {
  MultiPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents d = e;
    d[v] -= 1;
    r.add_term(d, c * e[v]);
  }
  return r;
}

LaurentPoly MultiPoly::specialize(const std::vector<int>& weights) const {
  if (static_cast<int>(weights.size()) != arity_)
    throw validation_error("weight vector arity mismatch");
  LaurentPoly r;
  for (const auto& [e, c] : terms_) {
    long exp = 0;
    for (int i = 0; i < arity_; ++i) exp += static_cast<long>(e[i]) * weights[i];
    r += LaurentPoly::term(c, exp);
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::exact_div(const MultiPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return MultiPoly(arity_);
  // Lex-leading term elimination; terminates because the leading exponent of
  // the remainder strictly decreases in lex order.
  MultiPoly rem = *this;
  MultiPoly q(arity_);
  const auto& dlead = *d.terms_.rbegin();
  std::size_t guard =
      64 * (term_count() + d.term_count()) * (term_count() + d.term_count()) +
      1024;
  while (!rem.is_zero()) {
    if (guard-- == 0) return std::nullopt;
    Exponents rkey = rem.terms_.rbegin()->first;
    Int rcoeff = rem.terms_.rbegin()->second;
    Int qc, r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rcoeff.get_mpz_t(),
                dlead.second.get_mpz_t());
    if (r != 0) return std::nullopt;
    Exponents qe(arity_);
    for (int i = 0; i < arity_; ++i) qe[i] = rkey[i] - dlead.first[i];
    MultiPoly mono(arity_);
    mono.add_term(qe, qc);
    q = q + mono;
    rem = rem - mono * d;
    // Divisibility can still fail if the new leading term does not shrink.
    if (!rem.is_zero() && !(rem.terms_.rbegin()->first < rkey))
      return std::nullopt;
  }
  return q;
}

MultiPoly MultiPoly::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<MultiPoly> p;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = line.substr(0, line.find('#'));
    if (stripped.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = stripped.find(':');
    if (colon == std::string::npos)
      throw parse_error("missing ':' in polynomial term", lineno);
    std::istringstream cs(stripped.substr(0, colon));
    std::string coeff_str;
    cs >> coeff_str;
    Int c;
    try {
      c = Int(coeff_str);
    } catch (const std::invalid_argument&) {
      throw parse_error("bad coefficient '" + coeff_str + "'", lineno);
    }
    std::istringstream es(stripped.substr(colon + 1));
    Exponents e;
    int x;
    while (es >> x) {
      if (x < 0) throw parse_error("negative exponent", lineno);
      e.push_back(x);
    }
    if (!es.eof()) throw parse_error("bad exponent list", lineno);
    if (e.empty()) throw parse_error("empty exponent list", lineno);
    if (!p) p = MultiPoly(static_cast<int>(e.size()));
    p->add_term(e, c);
  }
  if (!p) throw parse_error("empty polynomial file", lineno);
  return *p;
}

std::string MultiPoly::format() const {
  std::ostringstream os;
  for (const auto& [e, c] : terms_) {
    os << to_string(c) << " :";
    for (int x : e) os << " " << x;
    os << "\n";
  }
  return os.str();
}

std::string MultiPoly::str(const std::vector<std::string>& vars) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    bool printed = false;
    if (a != 1) {
      os << to_string(a);
      printed = true;
    }
    for (int i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      if (i < static_cast<int>(vars.size()))
        os << vars[i];
      else
        os << "x" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
      printed = true;
    }
    if (!printed) os << "1";
  }
  return os.str();
}

}  // namespace altk
