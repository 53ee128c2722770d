#include "altk/harness.hpp"

#include <omp.h>

#include <chrono>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "altk/braid.hpp"
#include "altk/errors.hpp"
#include "altk/invariants.hpp"

namespace altk {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const std::set<std::string> kAllChecks = {"fox",       "hm",     "twist",
                                          "decompose", "foxmilnor", "ratios"};

bool enabled(const CensusOptions& opt, const std::string& check) {
  return opt.checks.empty() || opt.checks.count(check) > 0;
}

std::string rat_str(const Rat& r) { return to_string(r); }

}  // namespace

std::vector<CensusEntry> parse_census(const std::string& text) {
  std::vector<CensusEntry> entries;
  std::set<std::string> names;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;
    auto p1 = stripped.find(';');
    auto p2 = p1 == std::string::npos ? std::string::npos
                                      : stripped.find(';', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
      throw parse_error("line " + std::to_string(lineno) +
                            ": expected 'name ; kind ; payload'",
                        lineno);
    CensusEntry e;
    e.name = trim(stripped.substr(0, p1));
    e.kind = trim(stripped.substr(p1 + 1, p2 - p1 - 1));
    e.payload = trim(stripped.substr(p2 + 1));
    e.line = lineno;
    if (e.name.empty())
      throw parse_error("line " + std::to_string(lineno) + ": empty name",
                        lineno);
    if (e.kind != "pd" && e.kind != "braid")
      throw parse_error("line " + std::to_string(lineno) +
                            ": kind must be pd or braid",
                        lineno);
    if (!names.insert(e.name).second)
      throw parse_error("line " + std::to_string(lineno) + ": duplicate name " +
                            e.name,
                        lineno);
    entries.push_back(e);
  }
  return entries;
}

std::vector<std::string> LinkReport::violations() const {
  std::vector<std::string> v;
  if (!error.empty()) return v;  // evaluation errors are not counterexamples
  if (alternating) {
    if (trapezoidal && !trapezoidal->holds)
      v.push_back("trapezoidal violated at index " +
                  std::to_string(trapezoidal->fail_index) + " clause " +
                  std::to_string(trapezoidal->fail_clause));
    if (hm) {
      if (!hm->ok)
        v.push_back("strict coefficient shape violated at index " +
                    std::to_string(hm->shape_witness));
      else if (!hm->holds)
        v.push_back("signature bound violated: lhs " + std::to_string(hm->lhs) +
                    " < rhs " + std::to_string(hm->rhs));
    }
    if (!signs_alternate) v.push_back("coefficient signs do not alternate");
    if (components == 1 && !palindromic)
      v.push_back("knot coefficients are not palindromic");
    if (twist_concentrated && twist_concentrated->holds && trapezoidal &&
        !trapezoidal->holds)
      v.push_back("twist-concentrated entry fails the trapezoidal check");
    if (prefix_ok && !*prefix_ok)
      v.push_back("guaranteed leading inequalities violated");
    if (genus && !genus_agrees) v.push_back("genus mismatch between methods");
  }
  return v;
}

LinkReport evaluate_entry(const CensusEntry& entry, const CensusOptions& opt) {
  LinkReport r;
  r.name = entry.name;
  auto start = std::chrono::steady_clock::now();
  try {
    LinkDiagram d;
    if (entry.kind == "pd") {
      d = parse_pd(entry.payload);
    } else {
      BraidWord b = parse_braid(entry.payload);
      d = braid_closure(b);
    }
    r.crossings = d.crossing_count();
    r.components = d.component_count();
    r.alternating = d.is_alternating();
    r.reduced = d.is_reduced();

    CoeffSeq c = alexander_pd(d);
    r.coeffs = c.mags;
    r.signs_alternate = c.signs_alternate;
    r.palindromic = c.palindromic();
    r.determinant = to_string(link_determinant(c));

    SignatureValue sig = signature(d);
    r.sigma = sig.sigma;

    if (!r.alternating) {
      r.notes.push_back("precondition: not alternating");
    } else {
      if (enabled(opt, "fox")) r.trapezoidal = is_trapezoidal(c);
      StableLength s = stable_length(c);
      if (s.ok) {
        r.i0 = s.i0;
        r.sl = s.sl;
      }
      if (enabled(opt, "hm")) r.hm = hm_check(c, sig);
      if (enabled(opt, "ratios")) r.ratios = ratio_scan(c);
      if (enabled(opt, "foxmilnor")) {
        if (c.length() <= 21)
          r.fox_milnor_cert = fox_milnor(c);
        else
          r.notes.push_back("foxmilnor: sequence too long for bounded search");
      }
      if (!r.reduced) {
        r.notes.push_back("precondition: not reduced (twist/decompose skipped)");
      } else {
        GenusInfo g = genus_alternating(d, c);
        r.genus = g;
        r.genus_agrees = g.from_span == g.from_seifert;
        if (enabled(opt, "twist")) {
          TwistProfile tp = twist_regions(d);
          r.mt = tp.mt;
          TwistConcentration tc;
          tc.mt = tp.mt;
          tc.genus = g.from_span;
          tc.components = d.component_count();
          tc.margin = Rat(tc.mt - 3) - (Rat(tc.genus) + Rat(tc.components, 2));
          tc.margin.canonicalize();
          tc.holds = sgn(tc.margin) >= 0;
          r.twist_concentrated = tc;
          int prefix = guaranteed_prefix_from_mt(tp.mt);
          r.guaranteed_prefix = prefix;
          // First `prefix` ascending inequalities, capped at the available
          // slope length.
          int n = static_cast<int>(c.mags.size());
          int center = (n + 1) / 2;  // 1-based peak position
          int avail = center - 1;
          bool ok = true;
          for (int i = 0; i < std::min(prefix, avail); ++i)
            if (c.mags[i] > c.mags[i + 1]) ok = false;
          r.prefix_ok = ok;
        }
        if (enabled(opt, "decompose")) {
          Decomposition dec = decompose_murasugi(d);
          r.pieces = static_cast<int>(dec.pieces.size());
          r.max_sum_length = dec.max_sum_length();
        }
      }
    }
  } catch (const std::exception& ex) {
    r.error = ex.what();
  }
  auto end = std::chrono::steady_clock::now();
  r.time_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(
          end - start)
          .count();
  if (!opt.timings) r.time_ms = 0.0;
  return r;
}

std::vector<LinkReport> run_entries_serial(const std::vector<CensusEntry>& es,
                                           const CensusOptions& opt) {
  std::vector<LinkReport> out(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) out[i] = evaluate_entry(es[i], opt);
  return out;
}

std::vector<LinkReport> run_entries_parallel(const std::vector<CensusEntry>& es,
                                             const CensusOptions& opt) {
  std::vector<LinkReport> out(es.size());
  int jobs = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
  long n = static_cast<long>(es.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        evaluate_entry(es[static_cast<std::size_t>(i)], opt);
  }
  return out;
}

namespace {

ordered_json report_json(const LinkReport& r, bool timings) {
  ordered_json j;
  j["name"] = r.name;
  if (!r.error.empty()) {
    j["error"] = r.error;
    return j;
  }
  j["crossings"] = r.crossings;
  j["components"] = r.components;
  j["alternating"] = r.alternating;
  j["reduced"] = r.reduced;
  ordered_json coeffs = ordered_json::array();
  for (const Int& a : r.coeffs) coeffs.push_back(to_string(a));
  j["coeffs"] = coeffs;
  j["signs_alternate"] = r.signs_alternate;
  j["palindromic"] = r.palindromic;
  j["determinant"] = r.determinant;
  if (r.trapezoidal) {
    j["trapezoidal"] = {{"holds", r.trapezoidal->holds},
                        {"fail_index", r.trapezoidal->fail_index},
                        {"fail_clause", r.trapezoidal->fail_clause}};
  } else {
    j["trapezoidal"] = nullptr;
  }
  j["sigma"] = r.sigma ? ordered_json(*r.sigma) : ordered_json(nullptr);
  j["i0"] = r.i0 ? ordered_json(*r.i0) : ordered_json(nullptr);
  j["sl"] = r.sl ? ordered_json(*r.sl) : ordered_json(nullptr);
  if (r.hm && r.hm->ok) {
    j["hm"] = {{"holds", r.hm->holds},
               {"sharp", r.hm->sharp},
               {"lhs", r.hm->lhs},
               {"rhs", r.hm->rhs}};
  } else if (r.hm) {
    j["hm"] = {{"shape_violation_index", r.hm->shape_witness}};
  } else {
    j["hm"] = nullptr;
  }
  j["mt"] = r.mt ? ordered_json(*r.mt) : ordered_json(nullptr);
  if (r.twist_concentrated) {
    j["twist_concentrated"] = {{"holds", r.twist_concentrated->holds},
                               {"margin", rat_str(r.twist_concentrated->margin)}};
  } else {
    j["twist_concentrated"] = nullptr;
  }
  j["guaranteed_prefix"] = r.guaranteed_prefix
                               ? ordered_json(*r.guaranteed_prefix)
                               : ordered_json(nullptr);
  j["prefix_ok"] =
      r.prefix_ok ? ordered_json(*r.prefix_ok) : ordered_json(nullptr);
  if (r.pieces) {
    j["decomposition"] = {{"pieces", *r.pieces},
                          {"max_sum_length", *r.max_sum_length}};
  } else {
    j["decomposition"] = nullptr;
  }
  if (r.fox_milnor_cert) {
    ordered_json fm;
    fm["slice_compatible"] = r.fox_milnor_cert->found;
    if (r.fox_milnor_cert->found) {
      ordered_json f = ordered_json::array();
      for (const Int& x : r.fox_milnor_cert->factor) f.push_back(to_string(x));
      fm["factor"] = f;
    }
    j["fox_milnor"] = fm;
  } else {
    j["fox_milnor"] = nullptr;
  }
  if (r.ratios) {
    j["ratios"] = {{"max_ascending", rat_str(r.ratios->max_ascending)},
                   {"max_descending", rat_str(r.ratios->max_descending)},
                   {"log_concave", r.ratios->log_concave}};
  } else {
    j["ratios"] = nullptr;
  }
  if (r.genus) {
    j["genus"] = {{"from_span", r.genus->from_span},
                  {"from_seifert", r.genus->from_seifert}};
  } else {
    j["genus"] = nullptr;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (timings) j["time_ms"] = r.time_ms;
  return j;
}

}  // namespace

std::string render_reports_json(const std::vector<LinkReport>& reports,
                                bool timings) {
  ordered_json arr = ordered_json::array();
  for (const LinkReport& r : reports) arr.push_back(report_json(r, timings));
  return arr.dump(2) + "\n";
}

std::string render_reports_csv(const std::vector<LinkReport>& reports) {
  std::ostringstream os;
  os << "name;crossings;components;coeffs;sigma;trapezoidal;i0;sl;hm_holds;"
        "hm_sharp;mt;twist_concentrated;guaranteed_prefix;pieces;"
        "max_sum_length;slice_compatible;log_concave;error\n";
  for (const LinkReport& r : reports) {
    os << r.name << ";";
    if (!r.error.empty()) {
      os << ";;;;;;;;;;;;;;;;" << r.error << "\n";
      continue;
    }
    os << r.crossings << ";" << r.components << ";";
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
      if (i) os << " ";
      os << to_string(r.coeffs[i]);
    }
    os << ";";
    if (r.sigma) os << *r.sigma;
    os << ";";
    if (r.trapezoidal) os << (r.trapezoidal->holds ? "true" : "false");
    os << ";";
    if (r.i0) os << *r.i0;
    os << ";";
    if (r.sl) os << *r.sl;
    os << ";";
    if (r.hm && r.hm->ok) os << (r.hm->holds ? "true" : "false");
    os << ";";
    if (r.hm && r.hm->ok) os << (r.hm->sharp ? "true" : "false");
    os << ";";
    if (r.mt) os << *r.mt;
    os << ";";
    if (r.twist_concentrated)
      os << (r.twist_concentrated->holds ? "true" : "false");
    os << ";";
    if (r.guaranteed_prefix) os << *r.guaranteed_prefix;
    os << ";";
    if (r.pieces) os << *r.pieces;
    os << ";";
    if (r.max_sum_length) os << *r.max_sum_length;
    os << ";";
    if (r.fox_milnor_cert)
      os << (r.fox_milnor_cert->found ? "true" : "false");
    os << ";";
    if (r.ratios) os << (r.ratios->log_concave ? "true" : "false");
    os << ";\n";
  }
  return os.str();
}

std::string render_violations_json(const std::vector<LinkReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const LinkReport& r : reports) {
    auto v = r.violations();
    if (v.empty()) continue;
    ordered_json j;
    j["name"] = r.name;
    ordered_json coeffs = ordered_json::array();
    for (const Int& a : r.coeffs) coeffs.push_back(to_string(a));
    j["coeffs"] = coeffs;
    j["violations"] = v;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

CensusRun run_census_text(const std::string& text, const CensusOptions& opt,
                          const std::string& format) {
  CensusRun run;
  std::vector<CensusEntry> entries;
  try {
    entries = parse_census(text);
  } catch (const std::exception& ex) {
    run.exit_code = 2;
    run.rendered = std::string(ex.what()) + "\n";
    return run;
  }
  if (entries.empty()) {
    run.exit_code = 2;
    run.rendered = "census is empty\n";
    return run;
  }
  run.reports = opt.jobs == 1 ? run_entries_serial(entries, opt)
                              : run_entries_parallel(entries, opt);
  std::size_t failed = 0;
  for (const LinkReport& r : run.reports) {
    if (!r.error.empty()) ++failed;
    for (const std::string& v : r.violations())
      run.violations.push_back(r.name + ": " + v);
  }
  run.rendered = format == "csv" ? render_reports_csv(run.reports)
                                 : render_reports_json(run.reports, opt.timings);
  if (failed == run.reports.size())
    run.exit_code = 2;
  else if (!run.violations.empty())
    run.exit_code = 1;
  else
    run.exit_code = 0;
  return run;
}

CensusRun run_census(const std::string& path, const CensusOptions& opt,
                     const std::string& format) {
  std::ifstream in(path);
  if (!in) {
    CensusRun run;
    run.exit_code = 2;
    run.rendered = "cannot open census file: " + path + "\n";
    return run;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return run_census_text(buf.str(), opt, format);
}

}  // namespace altk
