#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "altk/braid.hpp"
#include "altk/coeffseq.hpp"
#include "altk/ints.hpp"
#include "altk/linalg.hpp"
#include "altk/multipoly.hpp"

namespace altk {

struct SupportSet {
  int arity = 0;
  std::set<std::vector<int>> points;
};

SupportSet support_of(const MultiPoly& p);

struct MConvexResult {
  bool ok = false;
  // Witness of a failed exchange: alpha, beta and the index i with
  // alpha_i > beta_i admitting no valid j.
  std::vector<int> alpha, beta;
  int index = -1;
};

// Exhaustive exchange-axiom check over a homogeneous support.
MConvexResult is_m_convex(const SupportSet& s);

struct LorentzianResult {
  bool lorentzian = false;
  std::string reason;  // empty, "negative-coefficient", "support", "hessian"
  MConvexResult mconvex;
  std::vector<int> witness_chain;  // failing derivative multiset
  Inertia witness_inertia;
};

// Nonnegative coefficients, M-convex support, and every (d-2)-fold
// derivative has a Hessian with at most one positive eigenvalue. The Hessian
// sweep runs over derivative multisets; witness selection is deterministic
// (first failing chain in lexicographic order) independent of thread count.
LorentzianResult is_lorentzian(const MultiPoly& p, int jobs = 0);
// Single-threaded reference sweep, kept for tests and benchmarks.
LorentzianResult is_lorentzian_serial(const MultiPoly& p);

struct Refinement {
  MultiPoly poly;
  std::vector<int> weights;
};

// Unit-coefficient refinement of a (2,m) torus piece: the degree-(m-1)
// elementary symmetric polynomial in m variables, one per crossing.
Refinement torus_piece_refinement(int m);

struct RefinementValidation {
  bool all_coeffs_one = false;
  bool m_convex = false;
  bool specializes = false;
  bool ok() const { return all_coeffs_one && m_convex && specializes; }
};

// Contracts for a candidate refinement: unit coefficients, M-convex support,
// and the weighted specialization reproduces the coefficient magnitudes.
// Empty weights mean (0, 1, ..., k-1).
RefinementValidation refinement_validate(const MultiPoly& p, const CoeffSeq& c,
                                         std::vector<int> weights = {});

// Alternating 3-braid sigma1^{a_1} sigma2^{-b_1} ... sigma1^{a_k}
// sigma2^{-b_k}, syllable exponents all positive.
struct ThreeBraidWord {
  std::vector<int> a, b;
  int pairs() const { return static_cast<int>(a.size()); }
  int col1() const;
  int col2() const;
  int crossings() const { return col1() + col2(); }
  BraidWord braid() const;
  std::string str() const;
};

// Parse the syllable structure of an alternating 3-braid word (letters 1 and
// -2 only, cyclically rotated to start at a sigma1 syllable).
std::optional<ThreeBraidWord> three_braid_syllables(const BraidWord& w);

struct ThreeBraidRefinement {
  bool ok = false;
  std::string error;
  // Bidegree multiplicities: n[i][j] counts column-1 grade i, column-2
  // grade j; antidiagonal sums give the Alexander magnitudes.
  std::vector<std::vector<Int>> n;
  bool all_coeffs_one = false;
  Refinement refinement;  // multiplicity-spread over one variable per crossing
};

// Candidate refinement for an alternating 3-braid closure, built from the
// column-marked Burau determinant. For a single syllable pair this is the
// basis polynomial of a direct sum of two uniform matroids.
ThreeBraidRefinement three_braid_refinement(const ThreeBraidWord& w);

struct ScanRow {
  std::string word;
  bool connected_sum = false;
  int lorentzian = -1;  // 1/0, -1 when the construction failed or was skipped
  std::string witness;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  int lorentzian_count = 0;
  int non_lorentzian_count = 0;
  int skipped = 0;
  std::string to_csv() const;
};

// Enumerates canonical alternating 3-braid words up to the crossing budget,
// builds each candidate refinement and tabulates Lorentzian status against
// connected-sum structure.
ScanReport three_braid_nonlorentzian_scan(int max_crossings, int jobs = 0);

}  // namespace altk
