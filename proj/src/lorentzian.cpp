#include "altk/lorentzian.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <sstream>

#include "altk/errors.hpp"
#include "altk/invariants.hpp"

namespace altk {

SupportSet support_of(const MultiPoly& p) {
  SupportSet s;
  s.arity = p.arity();
  for (const auto& [e, c] : p.terms()) s.points.insert(e);
  return s;
}

MConvexResult is_m_convex(const SupportSet& s) {
  MConvexResult r;
  if (s.points.empty()) throw precondition_error("empty support");
  int total = -1;
  for (const auto& p : s.points) {
    int t = 0;
    for (int x : p) {
      if (x < 0) throw precondition_error("negative exponent in support");
      t += x;
    }
    if (total < 0)
      total = t;
    else if (t != total)
      throw precondition_error("mixed total degrees in support");
  }
  // Iterate alpha from the lexicographically largest point down, so the
  // reported witness is deterministic.
  for (auto ait = s.points.rbegin(); ait != s.points.rend(); ++ait) {
    const auto& alpha = *ait;
    for (const auto& beta : s.points) {
      for (int i = 0; i < s.arity; ++i) {
        if (alpha[i] <= beta[i]) continue;
        bool exchanged = false;
        for (int j = 0; j < s.arity && !exchanged; ++j) {
          if (alpha[j] >= beta[j]) continue;
          std::vector<int> moved = alpha;
          moved[i] -= 1;
          moved[j] += 1;
          if (s.points.count(moved)) exchanged = true;
        }
        if (!exchanged) {
          r.alpha = alpha;
          r.beta = beta;
          r.index = i;
          return r;
        }
      }
    }
  }
  r.ok = true;
  return r;
}

namespace {

std::vector<std::vector<int>> derivative_chains(int arity, int count) {
  // Nondecreasing index sequences of the given length (multisets).
  std::vector<std::vector<int>> chains;
  std::vector<int> cur(count, 0);
  if (count == 0) {
    chains.push_back({});
    return chains;
  }
  while (true) {
    chains.push_back(cur);
    int pos = count - 1;
    while (pos >= 0 && cur[pos] == arity - 1) --pos;
    if (pos < 0) break;
    int v = cur[pos] + 1;
    for (int i = pos; i < count; ++i) cur[i] = v;
  }
  return chains;
}

// Hessian of the quadratic obtained by applying the derivative chain.
SymRatMatrix chain_hessian(const MultiPoly& p, const std::vector<int>& chain) {
  MultiPoly q = p;
  for (int v : chain) q = q.derivative(v);
  int k = p.arity();
  SymRatMatrix h(k);
  for (const auto& [e, c] : q.terms()) {
    int u = -1, v = -1;
    for (int i = 0; i < k; ++i) {
      if (e[i] == 2) {
        u = v = i;
      } else if (e[i] == 1) {
        (u < 0 ? u : v) = i;
      }
    }
    if (u < 0 || v < 0) throw validation_error("derivative is not quadratic");
    if (u == v)
      h.set(u, u, Rat(2 * c));
    else
      h.set(u, v, Rat(c));
  }
  return h;
}

LorentzianResult lorentzian_common(const MultiPoly& p) {
  LorentzianResult r;
  auto deg = p.homogeneous_degree();
  if (!deg) throw precondition_error("polynomial is not homogeneous");
  if (p.arity() < 2 || *deg < 2)
    throw precondition_error("need arity >= 2 and degree >= 2");
  if (!p.nonnegative_exponents())
    throw precondition_error("negative exponents");
  for (const auto& [e, c] : p.terms()) {
    if (sgn(c) < 0) {
      r.reason = "negative-coefficient";
      return r;
    }
  }
  r.mconvex = is_m_convex(support_of(p));
  if (!r.mconvex.ok) {
    r.reason = "support";
    return r;
  }
  r.lorentzian = true;  // provisional; Hessian sweep may still fail
  return r;
}

}  // namespace

LorentzianResult is_lorentzian_serial(const MultiPoly& p) {
  LorentzianResult r = lorentzian_common(p);
  if (!r.reason.empty()) return r;
  int d = *p.homogeneous_degree();
  auto chains = derivative_chains(p.arity(), d - 2);
  for (const auto& chain : chains) {
    Inertia in = signature_exact(chain_hessian(p, chain));
    if (in.n_plus > 1) {
      r.lorentzian = false;
      r.reason = "hessian";
      r.witness_chain = chain;
      r.witness_inertia = in;
      return r;
    }
  }
  return r;
}

LorentzianResult is_lorentzian(const MultiPoly& p, int jobs) {
  LorentzianResult r = lorentzian_common(p);
  if (!r.reason.empty()) return r;
  int d = *p.homogeneous_degree();
  auto chains = derivative_chains(p.arity(), d - 2);
  long n = static_cast<long>(chains.size());
  std::atomic<long> first_fail{n};
  if (jobs <= 0) jobs = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs)
  for (long i = 0; i < n; ++i) {
    if (i >= first_fail.load(std::memory_order_relaxed)) continue;
    Inertia in = signature_exact(chain_hessian(p, chains[i]));
    if (in.n_plus > 1) {
      long cur = first_fail.load(std::memory_order_relaxed);
      while (i < cur &&
             !first_fail.compare_exchange_weak(cur, i,
                                               std::memory_order_relaxed)) {
      }
    }
  }
  long idx = first_fail.load();
  if (idx < n) {
    r.lorentzian = false;
    r.reason = "hessian";
    r.witness_chain = chains[idx];
    r.witness_inertia = signature_exact(chain_hessian(p, chains[idx]));
  }
  return r;
}

Refinement torus_piece_refinement(int m) {
  if (m < 2) throw precondition_error("torus piece needs at least 2 crossings");
  Refinement r;
  r.poly = MultiPoly(m);
  for (int skip = 0; skip < m; ++skip) {
    std::vector<int> e(m, 1);
    e[skip] = 0;
    r.poly.add_term(e, Int(1));
  }
  r.weights.resize(m);
  for (int i = 0; i < m; ++i) r.weights[i] = i;
  return r;
}

RefinementValidation refinement_validate(const MultiPoly& p, const CoeffSeq& c,
                                         std::vector<int> weights) {
  if (weights.empty()) {
    weights.resize(p.arity());
    for (int i = 0; i < p.arity(); ++i) weights[i] = i;
  }
  if (static_cast<int>(weights.size()) != p.arity())
    throw validation_error("weight arity mismatch");
  if (!p.homogeneous_degree())
    throw validation_error("refinement must be homogeneous");

  RefinementValidation v;
  v.all_coeffs_one = true;
  for (const auto& [e, coeff] : p.terms())
    if (coeff != 1) v.all_coeffs_one = false;
  v.m_convex = is_m_convex(support_of(p)).ok;

  LaurentPoly spec = p.specialize(weights);
  CoeffSeq got = normalize_alexander(spec);
  std::vector<Int> rev(got.mags.rbegin(), got.mags.rend());
  v.specializes = got.mags == c.mags || rev == c.mags;
  return v;
}

int ThreeBraidWord::col1() const {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

int ThreeBraidWord::col2() const {
  int s = 0;
  for (int x : b) s += x;
  return s;
}

BraidWord ThreeBraidWord::braid() const {
  BraidWord w;
  w.strands = 3;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a[i]; ++j) w.letters.push_back(1);
    for (int j = 0; j < b[i]; ++j) w.letters.push_back(-2);
  }
  return w;
}

std::string ThreeBraidWord::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << " ";
    os << "s1^" << a[i] << " s2^-" << b[i];
  }
  return os.str();
}

std::optional<ThreeBraidWord> three_braid_syllables(const BraidWord& w) {
  if (w.strands != 3 || w.letters.empty()) return std::nullopt;
  for (int l : w.letters)
    if (l != 1 && l != -2) return std::nullopt;
  int n = static_cast<int>(w.letters.size());
  // Rotate to start at a sigma1 syllable boundary.
  int start = -1;
  for (int i = 0; i < n; ++i) {
    int prev = w.letters[(i + n - 1) % n];
    if (w.letters[i] == 1 && prev == -2) {
      start = i;
      break;
    }
  }
  if (start < 0) return std::nullopt;  // single-generator word
  ThreeBraidWord t;
  int i = 0;
  while (i < n) {
    int run1 = 0, run2 = 0;
    while (i < n && w.letters[(start + i) % n] == 1) ++run1, ++i;
    while (i < n && w.letters[(start + i) % n] == -2) ++run2, ++i;
    if (run1 == 0 || run2 == 0) return std::nullopt;
    t.a.push_back(run1);
    t.b.push_back(run2);
  }
  return t;
}

namespace {

// Column-marked reduced Burau matrices over Z[x^, y^]: sigma1 carries x,
// sigma2^{-1} carries y.
using Mat2 = std::array<std::array<MultiPoly, 2>, 2>;

MultiPoly mono2(int ex, int ey, const Int& c) {
  MultiPoly p(2);
  p.add_term({ex, ey}, c);
  return p;
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  Mat2 r = {{{MultiPoly(2), MultiPoly(2)}, {MultiPoly(2), MultiPoly(2)}}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

}  // namespace

ThreeBraidRefinement three_braid_refinement(const ThreeBraidWord& w) {
  ThreeBraidRefinement out;
  int A = w.col1(), B = w.col2();
  if (A < 1 || B < 1) {
    out.error = "empty column";
    return out;
  }

  Mat2 s1 = {{{mono2(1, 0, Int(-1)), MultiPoly(2)},
              {mono2(0, 0, Int(1)), mono2(0, 0, Int(1))}}};
  Mat2 s2i = {{{mono2(0, 0, Int(1)), mono2(0, 0, Int(1))},
               {MultiPoly(2), mono2(0, -1, Int(-1))}}};
  Mat2 m = {{{mono2(0, 0, Int(1)), MultiPoly(2)},
             {MultiPoly(2), mono2(0, 0, Int(1))}}};
  for (std::size_t i = 0; i < w.a.size(); ++i) {
    for (int j = 0; j < w.a[i]; ++j) m = mat_mul(m, s1);
    for (int j = 0; j < w.b[i]; ++j) m = mat_mul(m, s2i);
  }
  MultiPoly one = mono2(0, 0, Int(1));
  MultiPoly det = (m[0][0] - one) * (m[1][1] - one) - m[0][1] * m[1][0];
  if (det.is_zero()) {
    out.error = "vanishing determinant (split closure)";
    return out;
  }
  // Shift exponents to be nonnegative.
  int min_x = 0, min_y = 0;
  for (const auto& [e, c] : det.terms()) {
    min_x = std::min(min_x, e[0]);
    min_y = std::min(min_y, e[1]);
  }
  MultiPoly shifted(2);
  for (const auto& [e, c] : det.terms())
    shifted.add_term({e[0] - min_x, e[1] - min_y}, c);

  // Strip the bivariate lift of 1 + t + t^2.
  MultiPoly divisor(2);
  divisor.add_term({0, 0}, Int(1));
  divisor.add_term({1, 0}, Int(1));
  divisor.add_term({1, 1}, Int(1));
  auto quotient = shifted.exact_div(divisor);
  if (!quotient) {
    out.error = "cyclotomic factor does not divide";
    return out;
  }
  MultiPoly bi = *quotient;
  min_x = min_y = 0;
  for (const auto& [e, c] : bi.terms()) {
    min_x = std::min(min_x, e[0]);
    min_y = std::min(min_y, e[1]);
  }
  if (min_x != 0 || min_y != 0) {
    MultiPoly tmp(2);
    for (const auto& [e, c] : bi.terms())
      tmp.add_term({e[0] - min_x, e[1] - min_y}, c);
    bi = tmp;
  }

  // Signs must be (-1)^{i+j} up to a global sign.
  int global = 0;
  for (const auto& [e, c] : bi.terms()) {
    int expect = (e[0] + e[1]) % 2 == 0 ? 1 : -1;
    int s = sgn(c) * expect;
    if (global == 0)
      global = s;
    else if (global != s) {
      out.error = "incoherent coefficient signs";
      return out;
    }
  }

  out.n.assign(A, std::vector<Int>(B, Int(0)));
  out.all_coeffs_one = true;
  for (const auto& [e, c] : bi.terms()) {
    if (e[0] >= A || e[1] >= B) {
      out.error = "bidegree exceeds column budget";
      return out;
    }
    out.n[e[0]][e[1]] = abs(c);
    if (out.n[e[0]][e[1]] != 1) out.all_coeffs_one = false;
  }

  // Sanity: antidiagonal sums reproduce the Alexander magnitudes.
  CoeffSeq ref = alexander_burau(w.braid());
  std::vector<Int> slices(A + B - 1, Int(0));
  for (int i = 0; i < A; ++i)
    for (int j = 0; j < B; ++j) slices[i + j] += out.n[i][j];
  std::vector<Int> rev(slices.rbegin(), slices.rend());
  if (slices != ref.mags && rev != ref.mags) {
    out.error = "bidegree slices disagree with the Alexander magnitudes";
    return out;
  }

  // Spread over one variable per crossing: the monomial for (i,j) drops the
  // (i+1)-st column-1 variable and the (j+1)-st column-2 variable.
  out.refinement.poly = MultiPoly(A + B);
  for (int i = 0; i < A; ++i)
    for (int j = 0; j < B; ++j) {
      if (out.n[i][j] == 0) continue;
      std::vector<int> e(A + B, 1);
      e[i] = 0;
      e[A + j] = 0;
      out.refinement.poly.add_term(e, out.n[i][j]);
    }
  out.refinement.weights.resize(A + B);
  for (int i = 0; i < A; ++i) out.refinement.weights[i] = i;
  for (int j = 0; j < B; ++j) out.refinement.weights[A + j] = j;
  out.ok = true;
  return out;
}

std::string ScanReport::to_csv() const {
  std::ostringstream os;
  os << "word;is_connected_sum;is_lorentzian;witness\n";
  for (const ScanRow& r : rows) {
    os << r.word << ";" << (r.connected_sum ? "true" : "false") << ";";
    if (r.lorentzian < 0)
      os << "skipped";
    else
      os << (r.lorentzian ? "true" : "false");
    os << ";" << r.witness << "\n";
  }
  return os.str();
}

ScanReport three_braid_nonlorentzian_scan(int max_crossings, int jobs) {
  ScanReport report;
  if (max_crossings < 2) return report;

  // Enumerate syllable pair lists, canonical under cyclic rotation.
  std::vector<ThreeBraidWord> words;
  std::function<void(ThreeBraidWord&, int)> rec = [&](ThreeBraidWord& w,
                                                      int used) {
    if (!w.a.empty()) {
      // canonical: the pair list is lexicographically minimal among rotations
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t i = 0; i < w.a.size(); ++i)
        pairs.push_back({w.a[i], w.b[i]});
      bool minimal = true;
      for (std::size_t r = 1; r < pairs.size() && minimal; ++r) {
        std::vector<std::pair<int, int>> rot(pairs.begin() + r, pairs.end());
        rot.insert(rot.end(), pairs.begin(), pairs.begin() + r);
        if (rot < pairs) minimal = false;
      }
      if (minimal) words.push_back(w);
    }
    for (int a = 1; used + a + 1 <= max_crossings; ++a) {
      for (int b = 1; used + a + b <= max_crossings; ++b) {
        w.a.push_back(a);
        w.b.push_back(b);
        rec(w, used + a + b);
        w.a.pop_back();
        w.b.pop_back();
      }
    }
  };
  ThreeBraidWord empty;
  rec(empty, 0);

  for (const ThreeBraidWord& w : words) {
    ScanRow row;
    row.word = w.str();
    row.connected_sum = w.pairs() == 1;
    ThreeBraidRefinement ref = three_braid_refinement(w);
    if (!ref.ok) {
      row.lorentzian = -1;
      row.witness = ref.error;
      ++report.skipped;
      report.rows.push_back(row);
      continue;
    }
    int arity = ref.refinement.poly.arity();
    auto deg = ref.refinement.poly.homogeneous_degree();
    if (arity < 2 || !deg || *deg < 2) {
      row.lorentzian = -1;
      row.witness = "degree below 2";
      ++report.skipped;
      report.rows.push_back(row);
      continue;
    }
    LorentzianResult lr = is_lorentzian(ref.refinement.poly, jobs);
    row.lorentzian = lr.lorentzian ? 1 : 0;
    if (!lr.lorentzian) {
      std::ostringstream os;
      os << lr.reason;
      if (lr.reason == "hessian") {
        os << " chain=(";
        for (std::size_t i = 0; i < lr.witness_chain.size(); ++i) {
          if (i) os << " ";
          os << lr.witness_chain[i];
        }
        os << ") inertia=(" << lr.witness_inertia.n_plus << ","
           << lr.witness_inertia.n_minus << "," << lr.witness_inertia.n_zero
           << ")";
      }
      row.witness = os.str();
      ++report.non_lorentzian_count;
    } else {
      ++report.lorentzian_count;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace altk
