#pragma once

#include <optional>
#include <vector>

#include "altk/coeffseq.hpp"
#include "altk/ints.hpp"
#include "altk/invariants.hpp"

namespace altk {

// Trapezoidal check: nondecreasing to a centered peak, nonincreasing after,
// and any equality on a slope forces a plateau reaching the peak. Reported
// indices are 1-based.
struct TrapezoidReport {
  bool holds = false;
  int fail_index = 0;   // 1-based position of the first violation, 0 if none
  int fail_clause = 0;  // 1 or 2, 0 if none
  // Set when the sequence is strict-trapezoidal (strictly increasing,
  // centered plateau, strictly decreasing).
  std::optional<int> i0;
  std::optional<int> sl;
};

TrapezoidReport is_trapezoidal(const CoeffSeq& c);

// Strict shape a_0 < ... < a_{i0-1} = ... = a_{l-i0} > ... > a_{l-1} with the
// plateau symmetric about the middle; i0 is 1-based, sl = l - 2(i0 - 1).
struct StableLength {
  bool ok = false;
  int witness = 0;  // 0-based index where the shape breaks, when !ok
  int i0 = 0;
  int sl = 0;
};

StableLength stable_length(const CoeffSeq& c);

struct HMReport {
  bool ok = false;       // false when the shape precondition failed
  int shape_witness = 0;
  bool holds = false;
  bool sharp = false;
  long lhs = 0;  // floor((|sigma|+1)/2)
  long rhs = 0;  // floor(sl/2)
};

HMReport hm_check(const CoeffSeq& c, const SignatureValue& s);

// Bounded search for f with Delta = +- t^k f(t) f(1/t). Integer coefficients;
// exhaustive within the coefficient bounds implied by the sequence.
struct ConcordanceCert {
  bool found = false;
  std::vector<Int> factor;  // coefficients of f, constant first
  long search_bound = 0;
};

ConcordanceCert fox_milnor(const CoeffSeq& c);

struct ConcordanceBound {
  bool ok = false;  // stable length defined on c
  bool holds = false;
  int sl = 0;
  int rep_length = 0;
};

// Verifies sl(c) <= length(rep) for an externally certified algebraically
// concordant representative.
ConcordanceBound concordance_bound_check(const CoeffSeq& c, const CoeffSeq& rep);

struct RatioScan {
  Rat max_ascending;   // max a_i / a_{i+1}, i < m
  Rat max_descending;  // max a_{i+1} / a_i, i >= m
  bool log_concave = true;
  int log_concave_fail_index = -1;  // 0-based interior index
};

RatioScan ratio_scan(const CoeffSeq& c);

}  // namespace altk
