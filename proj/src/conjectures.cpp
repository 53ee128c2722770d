#include "altk/conjectures.hpp"

#include <algorithm>
#include <cstdlib>

#include "altk/errors.hpp"

namespace altk {

namespace {

// Clause check against one candidate peak position (0-based): nondecreasing
// up to the peak, nonincreasing after, slope equalities plateau into the
// peak. On failure reports the 1-based index and clause.
TrapezoidReport check_peak(const std::vector<Int>& a, int peak) {
  TrapezoidReport r;
  int n = static_cast<int>(a.size());
  for (int i = 0; i + 1 <= peak; ++i) {
    if (a[i] > a[i + 1]) {
      r.fail_index = i + 1;
      r.fail_clause = 1;
      return r;
    }
  }
  for (int i = peak; i + 1 < n; ++i) {
    if (a[i] < a[i + 1]) {
      r.fail_index = i + 1;
      r.fail_clause = 1;
      return r;
    }
  }
  for (int i = 0; i + 1 <= peak; ++i) {
    if (a[i] == a[i + 1]) {
      for (int j = i; j <= peak; ++j) {
        if (a[j] != a[i]) {
          r.fail_index = i + 1;
          r.fail_clause = 2;
          return r;
        }
      }
    }
  }
  for (int i = peak; i + 1 < n; ++i) {
    if (a[i] == a[i + 1]) {
      for (int j = peak; j <= i; ++j) {
        if (a[j] != a[i]) {
          r.fail_index = i + 1;
          r.fail_clause = 2;
          return r;
        }
      }
    }
  }
  r.holds = true;
  return r;
}

}  // namespace

TrapezoidReport is_trapezoidal(const CoeffSeq& c) {
  if (c.mags.empty()) throw precondition_error("empty coefficient sequence");
  for (const Int& a : c.mags)
    if (a <= 0) throw precondition_error("coefficients must be positive");

  int n = static_cast<int>(c.mags.size());
  // Both central positions are admissible peaks for even length.
  int p1 = (n - 1) / 2, p2 = n / 2;
  TrapezoidReport r1 = check_peak(c.mags, p1);
  TrapezoidReport best = r1;
  if (!r1.holds && p2 != p1) {
    TrapezoidReport r2 = check_peak(c.mags, p2);
    if (r2.holds || r2.fail_index > best.fail_index) best = r2;
  }
  if (best.holds) {
    StableLength s = stable_length(c);
    if (s.ok) {
      best.i0 = s.i0;
      best.sl = s.sl;
    }
  }
  return best;
}

StableLength stable_length(const CoeffSeq& c) {
  StableLength r;
  int l = static_cast<int>(c.mags.size());
  if (l == 0) throw precondition_error("empty coefficient sequence");
  const auto& a = c.mags;
  int s = 0;
  while (s + 1 < l && a[s] < a[s + 1]) ++s;
  int e = s;
  while (e + 1 < l && a[e] == a[e + 1]) ++e;
  // Plateau must sit symmetrically: [s .. l-1-s].
  if (e != l - 1 - s) {
    r.witness = e;
    return r;
  }
  for (int i = e; i + 1 < l; ++i) {
    if (!(a[i] > a[i + 1])) {
      r.witness = i;
      return r;
    }
  }
  r.ok = true;
  r.i0 = s + 1;
  r.sl = l - 2 * s;
  return r;
}

HMReport hm_check(const CoeffSeq& c, const SignatureValue& sig) {
  HMReport r;
  StableLength s = stable_length(c);
  if (!s.ok) {
    r.shape_witness = s.witness;
    return r;
  }
  r.ok = true;
  long abs_sigma = std::labs(static_cast<long>(sig.sigma));
  r.lhs = (abs_sigma + 1) / 2;
  r.rhs = s.sl / 2;
  r.holds = r.lhs >= r.rhs;
  r.sharp = r.lhs == r.rhs;
  return r;
}

ConcordanceCert fox_milnor(const CoeffSeq& c) {
  int l = static_cast<int>(c.mags.size());
  if (l > 21)
    throw precondition_error("Fox-Milnor search limited to length 21");
  ConcordanceCert cert;
  if (l % 2 == 0) return cert;  // span must be even
  int g = (l - 1) / 2;
  cert.search_bound = g;

  LaurentPoly delta = c.to_poly();
  // f(t) f(1/t) t^g has central coefficient sum f_i^2 and extreme
  // coefficients f_0 f_g; search within those bounds.
  Int center = c.mags[g];
  Int ends = c.mags[0];

  std::vector<Int> f(static_cast<std::size_t>(g) + 1, Int(0));
  std::vector<Int> best;

  auto product_matches = [&](const std::vector<Int>& coeffs) {
    LaurentPoly fp(0, coeffs);
    if (fp.is_zero()) return false;
    LaurentPoly prod = fp * fp.inverted();
    prod = prod.shifted(g);
    return prod == delta || prod == -delta;
  };

  // Enumerate f_0..f_g with sum of squares equal to the central coefficient
  // and f_0 f_g = +-a_0 (g = 0: f_0^2 = a_0).
  std::function<bool(int, Int)> rec = [&](int idx, Int budget) {
    if (best.size()) return true;
    if (idx == g + 1) {
      if (budget != 0) return false;
      if (g == 0) {
        if (f[0] * f[0] != ends) return false;
      } else if (abs(f[0] * f[static_cast<std::size_t>(g)]) != ends) {
        return false;
      }
      if (f[static_cast<std::size_t>(g)] == 0) return false;
      std::vector<Int> cand = f;
      if (sgn(cand[static_cast<std::size_t>(g)]) < 0)
        for (auto& x : cand) x = -x;
      if (product_matches(cand)) {
        best = cand;
        return true;
      }
      return false;
    }
    Int lim(0);
    while (lim * lim <= budget) lim += 1;
    lim -= 1;
    for (Int v = -lim; v <= lim; v += 1) {
      f[static_cast<std::size_t>(idx)] = v;
      if (rec(idx + 1, budget - v * v)) return true;
    }
    return false;
  };
  rec(0, center);
  if (!best.empty()) {
    cert.found = true;
    // Canonical form: between f and its reverse (leading coefficient kept
    // positive), prefer the one whose constant term is smaller in magnitude.
    std::vector<Int> rev(best.rbegin(), best.rend());
    if (sgn(rev.back()) < 0)
      for (auto& x : rev) x = -x;
    if (abs(rev.front()) < abs(best.front()))
      cert.factor = rev;
    else
      cert.factor = best;
  }
  return cert;
}

ConcordanceBound concordance_bound_check(const CoeffSeq& c,
                                         const CoeffSeq& rep) {
  ConcordanceBound r;
  StableLength s = stable_length(c);
  if (!s.ok) return r;
  r.ok = true;
  r.sl = s.sl;
  r.rep_length = static_cast<int>(rep.mags.size());
  r.holds = r.sl <= r.rep_length;
  return r;
}

RatioScan ratio_scan(const CoeffSeq& c) {
  for (const Int& a : c.mags)
    if (a <= 0) throw precondition_error("coefficients must be positive");
  RatioScan r;
  r.max_ascending = Rat(0);
  r.max_descending = Rat(0);
  int n = static_cast<int>(c.mags.size());
  int m = n / 2;
  for (int i = 0; i + 1 < n; ++i) {
    Rat ratio;
    if (i < m) {
      ratio = Rat(c.mags[i]) / Rat(c.mags[i + 1]);
      ratio.canonicalize();
      if (ratio > r.max_ascending) r.max_ascending = ratio;
    } else {
      ratio = Rat(c.mags[i + 1]) / Rat(c.mags[i]);
      ratio.canonicalize();
      if (ratio > r.max_descending) r.max_descending = ratio;
    }
  }
  for (int i = 1; i + 1 < n; ++i) {
    if (c.mags[i] * c.mags[i] < c.mags[i - 1] * c.mags[i + 1]) {
      r.log_concave = false;
      r.log_concave_fail_index = i;
      break;
    }
  }
  return r;
}

}  // namespace altk
