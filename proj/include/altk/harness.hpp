#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "altk/conjectures.hpp"
#include "altk/diagram.hpp"
#include "altk/structure.hpp"

namespace altk {

struct CensusEntry {
  std::string name;
  std::string kind;  // "pd" or "braid"
  std::string payload;
  std::size_t line = 0;
};

// Census format: one entry per line, "name ; pd|braid ; payload", '#' starts
// a comment. Names must be unique; every entry must parse.
std::vector<CensusEntry> parse_census(const std::string& text);

struct LinkReport {
  std::string name;
  std::string error;  // set when the entry could not be evaluated at all

  int crossings = 0;
  int components = 0;
  std::vector<Int> coeffs;
  bool signs_alternate = false;
  bool palindromic = false;
  std::string determinant;

  bool alternating = false;
  bool reduced = false;

  std::optional<TrapezoidReport> trapezoidal;
  std::optional<int> sigma;
  std::optional<int> i0;
  std::optional<int> sl;
  std::optional<HMReport> hm;
  std::optional<int> mt;
  std::optional<TwistConcentration> twist_concentrated;
  std::optional<int> guaranteed_prefix;
  std::optional<bool> prefix_ok;
  std::optional<int> pieces;
  std::optional<int> max_sum_length;
  std::optional<ConcordanceCert> fox_milnor_cert;
  std::optional<RatioScan> ratios;
  std::optional<GenusInfo> genus;
  bool genus_agrees = false;
  std::vector<std::string> notes;  // per-check precondition skips
  double time_ms = 0.0;

  std::vector<std::string> violations() const;
};

struct CensusOptions {
  int jobs = 1;
  std::set<std::string> checks;  // empty = all of fox,hm,twist,decompose,
                                 // foxmilnor,ratios
  bool timings = false;
};

LinkReport evaluate_entry(const CensusEntry& entry, const CensusOptions& opt);

// Reference single-threaded sweep.
std::vector<LinkReport> run_entries_serial(const std::vector<CensusEntry>& es,
                                           const CensusOptions& opt);
// OpenMP sweep; output is ordered by input index and byte-identical to the
// serial reference.
std::vector<LinkReport> run_entries_parallel(const std::vector<CensusEntry>& es,
                                             const CensusOptions& opt);

std::string render_reports_json(const std::vector<LinkReport>& reports,
                                bool timings);
std::string render_reports_csv(const std::vector<LinkReport>& reports);
std::string render_violations_json(const std::vector<LinkReport>& reports);

struct CensusRun {
  std::vector<LinkReport> reports;
  std::string rendered;
  std::vector<std::string> violations;
  int exit_code = 0;  // 0 clean, 1 violations, 2 input error
};

CensusRun run_census_text(const std::string& text, const CensusOptions& opt,
                          const std::string& format);
CensusRun run_census(const std::string& path, const CensusOptions& opt,
                     const std::string& format);

}  // namespace altk
