// Command-line front end: single-link queries, census sweeps, the
// three-braid scan and census generation.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "altk/censusgen.hpp"
#include "altk/conjectures.hpp"
#include "altk/errors.hpp"
#include "altk/harness.hpp"
#include "altk/invariants.hpp"
#include "altk/lorentzian.hpp"
#include "altk/structure.hpp"

using namespace altk;
using ordered_json = nlohmann::ordered_json;

namespace {

struct LinkInput {
  std::string pd, braid;

  bool is_braid() const { return !braid.empty(); }
  LinkDiagram diagram() const {
    if (!pd.empty()) return parse_pd(pd);
    return braid_closure(parse_braid(braid));
  }
  void attach(CLI::App* cmd) {
    auto* p = cmd->add_option("--pd", pd, "PD code, e.g. \"X(1,4,2,5) ...\"");
    auto* b = cmd->add_option("--braid", braid, "braid word \"n ; i1 i2 ...\"");
    p->excludes(b);
    cmd->callback([this, cmd] {
      if (pd.empty() && braid.empty())
        throw CLI::ValidationError(cmd->get_name(),
                                   "needs --pd or --braid input");
    });
  }
};

std::string coeff_list(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

int run_guarded(const std::function<int()>& f) {
  try {
    return f();
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "altcheck: exact Alexander, signature and coefficient-shape checks for "
      "alternating link diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  LinkInput in_alex, in_sig, in_trap, in_hm, in_twist, in_dec;

  auto* alex = app.add_subcommand("alex", "Alexander polynomial magnitudes");
  in_alex.attach(alex);

  auto* sig = app.add_subcommand("sig", "link signature");
  in_sig.attach(sig);

  auto* trap = app.add_subcommand("trapezoid", "coefficient shape check");
  in_trap.attach(trap);

  auto* hm = app.add_subcommand("hm", "signature bound on the stable length");
  in_hm.attach(hm);

  auto* twist = app.add_subcommand("twist", "twist regions and concentration");
  in_twist.attach(twist);

  auto* dec = app.add_subcommand("decompose", "Murasugi-sum tree");
  in_dec.attach(dec);

  auto* lor = app.add_subcommand("lorentzian", "Lorentzian property of a polynomial");
  std::string poly_path;
  std::vector<int> weights;
  lor->add_option("--poly", poly_path, "polynomial file, one term per line")
      ->required();
  lor->add_option("--weights", weights, "specialization weights (optional)");

  auto* census = app.add_subcommand("census", "sweep a census file");
  std::string census_path, report_path, format = "json", checks_str;
  int jobs = 1;
  bool timings = false;
  census->add_option("--census", census_path, "census file")->required();
  census->add_option("--report", report_path, "report output path");
  census->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  census->add_option("--jobs", jobs, "parallel workers");
  census->add_option("--checks", checks_str,
                     "subset of fox,hm,twist,decompose,foxmilnor,ratios");
  census->add_flag("--timings", timings, "include per-entry timings");

  auto* scan = app.add_subcommand("scan3", "alternating 3-braid refinement scan");
  int budget = 8;
  std::string scan_out;
  scan->add_option("--budget", budget, "crossing budget");
  scan->add_option("--out", scan_out, "CSV output path");
  scan->add_option("--jobs", jobs, "parallel workers");

  auto* gen = app.add_subcommand("gen-census", "enumerate alternating knot diagrams");
  int gen_max = 10, gen_strands = 5;
  std::string gen_out;
  gen->add_option("--max-crossings", gen_max, "crossing budget");
  gen->add_option("--max-strands", gen_strands, "braid strand budget");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (alex->parsed()) {
    return run_guarded([&] {
      LinkDiagram d = in_alex.diagram();
      CoeffSeq c = alexander_pd(d);
      bool agree = true;
      if (in_alex.is_braid()) {
        CoeffSeq cb = alexander_burau(parse_braid(in_alex.braid));
        agree = cb.mags == c.mags;
        if (!agree)
          throw validation_error("matrix and braid methods disagree");
      }
      if (as_json) {
        ordered_json j;
        j["coeffs"] = ordered_json::array();
        for (const Int& a : c.mags) j["coeffs"].push_back(to_string(a));
        j["signs_alternate"] = c.signs_alternate;
        j["determinant"] = to_string(link_determinant(c));
        if (in_alex.is_braid()) j["methods_agree"] = agree;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << coeff_list(c.mags) << "\n";
        if (in_alex.is_braid())
          std::cout << "methods agree: matrix and braid routes match\n";
      }
      return 0;
    });
  }

  if (sig->parsed()) {
    return run_guarded([&] {
      SignatureValue s = signature(in_sig.diagram());
      if (as_json) {
        ordered_json j;
        j["sigma"] = s.sigma;
        j["convention"] = s.convention;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "sigma = " << s.sigma << "\n";
      }
      return 0;
    });
  }

  if (trap->parsed()) {
    return run_guarded([&] {
      CoeffSeq c = alexander_pd(in_trap.diagram());
      TrapezoidReport r = is_trapezoidal(c);
      if (as_json) {
        ordered_json j;
        j["coeffs"] = ordered_json::array();
        for (const Int& a : c.mags) j["coeffs"].push_back(to_string(a));
        j["holds"] = r.holds;
        if (!r.holds) {
          j["fail_index"] = r.fail_index;
          j["fail_clause"] = r.fail_clause;
        }
        if (r.i0) j["i0"] = *r.i0;
        if (r.sl) j["sl"] = *r.sl;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << coeff_list(c.mags) << " trapezoidal: "
                  << (r.holds ? "yes" : "NO") << "\n";
        if (!r.holds)
          std::cout << "violation at index " << r.fail_index << " (clause "
                    << r.fail_clause << ")\n";
        else if (r.i0)
          std::cout << "i0 = " << *r.i0 << ", stable length = " << *r.sl
                    << "\n";
      }
      return r.holds ? 0 : 1;
    });
  }

  if (hm->parsed()) {
    return run_guarded([&] {
      LinkDiagram d = in_hm.diagram();
      CoeffSeq c = alexander_pd(d);
      SignatureValue s = signature(d);
      HMReport r = hm_check(c, s);
      if (as_json) {
        ordered_json j;
        j["sigma"] = s.sigma;
        if (r.ok) {
          j["holds"] = r.holds;
          j["sharp"] = r.sharp;
          j["lhs"] = r.lhs;
          j["rhs"] = r.rhs;
        } else {
          j["shape_violation_index"] = r.shape_witness;
        }
        std::cout << j.dump(2) << "\n";
      } else if (r.ok) {
        std::cout << (r.holds ? "holds" : "VIOLATED")
                  << (r.sharp ? ", sharp" : "") << ", lhs=" << r.lhs
                  << ", rhs=" << r.rhs << "\n";
      } else {
        std::cout << "strict coefficient shape violated at index "
                  << r.shape_witness << "\n";
      }
      return r.ok && r.holds ? 0 : 1;
    });
  }

  if (twist->parsed()) {
    return run_guarded([&] {
      LinkDiagram d = in_twist.diagram();
      TwistProfile tp = twist_regions(d);
      TwistConcentration tc = is_twist_concentrated(d);
      if (as_json) {
        ordered_json j;
        j["regions"] = ordered_json::array();
        for (const TwistRegion& r : tp.regions)
          j["regions"].push_back({{"size", r.size()},
                                  {"coherent", r.coherent},
                                  {"sign", r.sign}});
        j["mt"] = tp.mt;
        j["twist_concentrated"] = tc.holds;
        j["margin"] = to_string(tc.margin);
        j["guaranteed_prefix"] = guaranteed_prefix_from_mt(tp.mt);
        std::cout << j.dump(2) << "\n";
      } else {
        for (const TwistRegion& r : tp.regions)
          std::cout << "region size " << r.size()
                    << (r.coherent ? " coherent" : " incoherent") << " sign "
                    << (r.sign > 0 ? "+" : "-") << "\n";
        std::cout << "MT = " << tp.mt
                  << ", twist-concentrated: " << (tc.holds ? "yes" : "no")
                  << " (margin " << to_string(tc.margin) << ")\n"
                  << "guaranteed leading inequalities: "
                  << guaranteed_prefix_from_mt(tp.mt) << "\n";
      }
      return 0;
    });
  }

  if (dec->parsed()) {
    return run_guarded([&] {
      Decomposition d = decompose_murasugi(in_dec.diagram());
      if (as_json) {
        ordered_json j;
        j["pieces"] = ordered_json::array();
        for (const DecompPiece& p : d.pieces)
          j["pieces"].push_back({{"crossings", p.crossings.size()},
                                 {"sign", p.sign},
                                 {"pd", p.diagram.pd_code()}});
        j["edges"] = ordered_json::array();
        for (const DecompEdge& e : d.edges)
          j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"length", e.length}});
        j["max_sum_length"] = d.max_sum_length();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << d.pieces.size() << " special piece(s)\n";
        for (std::size_t i = 0; i < d.pieces.size(); ++i)
          std::cout << "  piece " << i << ": " << d.pieces[i].crossings.size()
                    << " crossings, sign "
                    << (d.pieces[i].sign > 0 ? "+" : "-") << "\n";
        for (const DecompEdge& e : d.edges)
          std::cout << "  sum " << e.a << " -- " << e.b << " length "
                    << e.length << "\n";
        std::cout << "all sums below 3: "
                  << (sums_below(d, 3) ? "yes" : "no") << "\n";
      }
      return 0;
    });
  }

  if (lor->parsed()) {
    return run_guarded([&] {
      std::ifstream in(poly_path);
      if (!in) throw validation_error("cannot open " + poly_path);
      std::stringstream buf;
      buf << in.rdbuf();
      MultiPoly p = MultiPoly::parse(buf.str());
      LorentzianResult r = is_lorentzian(p);
      if (as_json) {
        ordered_json j;
        j["lorentzian"] = r.lorentzian;
        if (!r.lorentzian) {
          j["reason"] = r.reason;
          if (r.reason == "hessian") {
            j["witness_chain"] = r.witness_chain;
            j["inertia"] = {r.witness_inertia.n_plus, r.witness_inertia.n_minus,
                            r.witness_inertia.n_zero};
          }
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "Lorentzian: " << (r.lorentzian ? "true" : "false")
                  << "\n";
        if (!r.lorentzian) std::cout << "reason: " << r.reason << "\n";
      }
      return 0;
    });
  }

  if (census->parsed()) {
    CensusOptions opt;
    opt.jobs = jobs;
    opt.timings = timings;
    if (!checks_str.empty()) {
      std::stringstream ss(checks_str);
      std::string item;
      while (std::getline(ss, item, ',')) opt.checks.insert(item);
    }
    CensusRun run = run_census(census_path, opt, format);
    if (run.exit_code == 2) {
      std::cerr << run.rendered;
      return 2;
    }
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out) {
        std::cerr << "cannot write report to " << report_path << "\n";
        return 2;
      }
      out << run.rendered;
    } else {
      std::cout << run.rendered;
    }
    if (!run.violations.empty()) {
      std::cerr << "violations found:\n" << render_violations_json(run.reports);
    }
    std::cerr << run.reports.size() << " entries, " << run.violations.size()
              << " violation(s)\n";
    return run.exit_code;
  }

  if (scan->parsed()) {
    return run_guarded([&] {
      ScanReport r = three_braid_nonlorentzian_scan(budget, jobs);
      std::string csv = r.to_csv();
      if (!scan_out.empty()) {
        std::ofstream out(scan_out);
        out << csv;
      } else {
        std::cout << csv;
      }
      std::cerr << r.rows.size() << " words: " << r.lorentzian_count
                << " Lorentzian, " << r.non_lorentzian_count << " not, "
                << r.skipped << " skipped\n";
      return 0;
    });
  }

  if (gen->parsed()) {
    return run_guarded([&] {
      auto entries = generate_alternating_knot_census(gen_max, gen_strands);
      std::string text = census_to_text(entries);
      if (!gen_out.empty()) {
        std::ofstream out(gen_out);
        out << text;
      } else {
        std::cout << text;
      }
      std::cerr << entries.size() << " entries\n";
      return 0;
    });
  }

  return 0;
}
