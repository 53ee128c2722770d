// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Takes the bundled census path as argv[1].
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "altk/conjectures.hpp"
#include "altk/harness.hpp"
#include "altk/invariants.hpp"
#include "altk/lorentzian.hpp"
#include "altk/structure.hpp"

using namespace altk;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
              detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<const char*> agreement_words() {
  return {
      "2 ; 1 1 1",           "2 ; 1 1",
      "2 ; 1 1 1 1",         "2 ; 1 1 1 1 1",
      "2 ; 1 1 1 1 1 1",     "2 ; 1 1 1 1 1 1 1",
      "2 ; -1 -1 -1",        "2 ; -1 -1 -1 -1 -1",
      "2 ; 1 1 1 1 1 1 1 1", "2 ; 1 1 1 1 1 1 1 1 1",
      "3 ; 1 -2 1 -2",       "3 ; 1 1 -2 -2",
      "3 ; 1 1 1 -2",        "3 ; 1 -2 1 -2 1 -2",
      "3 ; 1 1 -2 1 -2 -2",  "3 ; 1 2 1 2",
      "3 ; 1 2 1 2 1 2",     "3 ; 1 1 1 -2 -2 -2",
      "3 ; -1 2 -1 2",       "3 ; 1 1 -2",
      "3 ; 1 1 1 1 -2 -2",   "3 ; 1 -2 -2 1 -2 -2",
      "3 ; 1 1 1 1 1 -2",    "3 ; 1 -2 1 1 -2 1",
      "3 ; 1 1 1 1 -2 -2 -2 -2",
      "4 ; 1 -2 3 1 -2 3",   "4 ; 1 2 3 1 2 3",
      "4 ; 1 -2 3 -2 1 -2 3 -2",
      "4 ; 1 1 -2 3 3 -2",   "4 ; 1 2 -3 1 2 -3",
      "4 ; 1 -2 1 -2 3 3",   "4 ; 1 -2 3 1 -2 3 1 -2",
  };
}

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  auto words = agreement_words();
  int checked = 0;
  std::string fail;
  for (const char* w : words) {
    BraidWord b = parse_braid(w);
    LinkDiagram d = braid_closure(b);
    if (d.crossing_count() > 10) continue;
    LaurentPoly from_pd = alexander_pd_poly(d);
    LaurentPoly from_burau = alexander_burau_poly(b);
    LaurentPoly from_conway = conway_to_alexander(conway_skein(d));
    if (!(from_pd == from_burau) || !(from_pd == from_conway)) {
      fail = std::string("disagreement on ") + w;
      break;
    }
    ++checked;
  }
  double dt = seconds_since(t0);
  bool ok = fail.empty() && checked >= 30 && dt < 10.0;
  std::ostringstream os;
  os << "method agreement on " << checked << " braid inputs in "
     << static_cast<int>(dt * 1000) << " ms";
  if (!fail.empty()) os << " (" << fail << ")";
  report(1, ok, os.str());
}

void criterion2() {
  bool ok = true;
  std::ostringstream os;

  LinkDiagram tref = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  CoeffSeq ct = alexander_pd(tref);
  ok &= ct.mags == std::vector<Int>{1, 1, 1};
  ok &= signature(tref).sigma == -2;
  ok &= genus_alternating(tref, ct).from_span == 1;
  ok &= link_determinant(ct) == 3;

  LinkDiagram f8 = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
  CoeffSeq cf = alexander_pd(f8);
  SignatureValue sf = signature(f8);
  ok &= cf.mags == std::vector<Int>{1, 3, 1};
  ok &= sf.sigma == 0;
  StableLength slf = stable_length(cf);
  ok &= slf.ok && slf.sl == 1;
  HMReport hf = hm_check(cf, sf);
  ok &= hf.ok && hf.holds && hf.sharp;

  LinkDiagram hopf = braid_closure(parse_braid("2 ; 1 1"));
  CoeffSeq ch = alexander_pd(hopf);
  ok &= ch.mags == std::vector<Int>{1, 1};
  ok &= genus_alternating(hopf, ch).from_span == 0;

  LinkDiagram t25 = braid_closure(parse_braid("2 ; 1 1 1 1 1"));
  CoeffSeq c25 = alexander_pd(t25);
  SignatureValue s25 = signature(t25);
  ok &= c25.mags == std::vector<Int>{1, 1, 1, 1, 1};
  ok &= s25.sigma == -4;
  StableLength sl25 = stable_length(c25);
  ok &= sl25.ok && sl25.sl == 5;
  HMReport h25 = hm_check(c25, s25);
  ok &= h25.ok && h25.holds && h25.sharp && h25.lhs == 2 && h25.rhs == 2;

  os << "anchor values for trefoil, figure-eight, hopf link, (2,5) torus";
  report(2, ok, os.str());
}

std::vector<LinkReport> sweep_reports;

void criterion3(const std::string& census_path) {
  auto t0 = std::chrono::steady_clock::now();
  CensusOptions opt;
  opt.jobs = 4;
  CensusRun run = run_census(census_path, opt, "json");
  double dt = seconds_since(t0);
  sweep_reports = run.reports;

  std::ostringstream os;
  bool ok = run.exit_code == 0;
  int n = static_cast<int>(run.reports.size());
  int trap_viol = 0, hm_viol = 0, palin = 0, alt_signs = 0, genus_ok = 0,
      reduced = 0, errors = 0, shape_ok = 0;
  for (const LinkReport& r : run.reports) {
    if (!r.error.empty()) {
      ++errors;
      continue;
    }
    if (r.alternating && r.components == 1 && r.crossings <= 10) ++shape_ok;
    if (r.trapezoidal && !r.trapezoidal->holds) ++trap_viol;
    if (r.hm && (!r.hm->ok || !r.hm->holds)) ++hm_viol;
    if (r.palindromic) ++palin;
    if (r.signs_alternate) ++alt_signs;
    if (r.reduced) {
      ++reduced;
      if (r.genus && r.genus_agrees) ++genus_ok;
    }
  }
  ok &= n >= 200 && errors == 0 && shape_ok == n && trap_viol == 0 &&
        hm_viol == 0 && palin == n && alt_signs == n && genus_ok == reduced &&
        dt < 60.0;
  os << n << " entries in " << static_cast<int>(dt * 1000)
     << " ms at 4 jobs: " << trap_viol << " trapezoidal and " << hm_viol
     << " signature-bound violations, palindromic " << palin << "/" << n
     << ", alternating signs " << alt_signs << "/" << n << ", genus agreement "
     << genus_ok << "/" << reduced;
  report(3, ok, os.str());
}

void criterion4() {
  bool ok = !sweep_reports.empty();
  int concentrated = 0, prefix_checked = 0;
  for (const LinkReport& r : sweep_reports) {
    if (!r.error.empty()) continue;
    if (r.twist_concentrated && r.twist_concentrated->holds) {
      ++concentrated;
      if (!r.trapezoidal || !r.trapezoidal->holds) ok = false;
    }
    if (r.prefix_ok) {
      ++prefix_checked;
      if (!*r.prefix_ok) ok = false;
    }
  }
  std::ostringstream os;
  os << concentrated << " twist-concentrated entries all trapezoidal; leading "
     << "inequalities verified on " << prefix_checked << " entries";
  report(4, ok, os.str());
}

void criterion5() {
  bool ok = true;
  LinkDiagram tref = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  LinkDiagram f8 = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");

  LinkDiagram granny = connect_sum(tref, tref);
  Decomposition dg = decompose_murasugi(granny);
  ok &= dg.pieces.size() == 2 && dg.edges.size() == 1 &&
        dg.edges[0].length == 1;
  LaurentPoly prod = LaurentPoly::one();
  for (const DecompPiece& p : dg.pieces) prod *= alexander_pd_poly(p.diagram);
  ok &= prod.unit_normal() == alexander_pd_poly(granny);

  LinkDiagram tf = connect_sum(tref, f8);
  ok &= alexander_pd_poly(tf) ==
        (alexander_pd_poly(tref) * alexander_pd_poly(f8)).unit_normal();

  Decomposition df = decompose_murasugi(f8);
  ok &= df.pieces.size() == 2 && df.edges.size() == 1 &&
        df.edges[0].length == 2;
  for (const DecompPiece& p : df.pieces)
    ok &= p.diagram.is_special_alternating();
  ok &= sums_below(df, 3);

  report(5, ok,
         "connected sums split with length-1 edges and multiplicative "
         "polynomials; figure-eight plumbs two special pieces along a square");
}

void criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  MultiPoly e2(3);
  e2.add_term({1, 1, 0}, Int(1));
  e2.add_term({1, 0, 1}, Int(1));
  e2.add_term({0, 1, 1}, Int(1));
  ok &= is_lorentzian(e2).lorentzian;
  // Hessian of e2 itself has inertia (1,2,0)
  SymRatMatrix h = SymRatMatrix::from_int_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  ok &= signature_exact(h) == Inertia{1, 2, 0};

  MultiPoly sq(2);
  sq.add_term({2, 0}, Int(1));
  sq.add_term({0, 2}, Int(1));
  ok &= !is_lorentzian(sq).lorentzian;

  MConvexResult mc = is_m_convex(SupportSet{2, {{2, 0}, {0, 2}}});
  ok &= !mc.ok && mc.alpha == std::vector<int>{2, 0} &&
        mc.beta == std::vector<int>{0, 2} && mc.index == 0;

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> kdist(2, 4), ddist(2, 4), cdist(0, 3);
  int done = 0;
  while (done < 20) {
    int k = kdist(rng), d = ddist(rng);
    MultiPoly prodp(k);
    prodp.add_term(std::vector<int>(k, 0), Int(1));
    bool zero = false;
    for (int f = 0; f < d; ++f) {
      MultiPoly lin(k);
      for (int v = 0; v < k; ++v) {
        std::vector<int> e(k, 0);
        e[v] = 1;
        lin.add_term(e, Int(cdist(rng)));
      }
      if (lin.is_zero()) {
        zero = true;
        break;
      }
      prodp = prodp * lin;
    }
    if (zero) continue;
    ++done;
    if (!is_lorentzian(prodp).lorentzian) ok = false;
  }
  double dt = seconds_since(t0);
  ok &= dt < 5.0;
  std::ostringstream os;
  os << "Lorentzian toolkit anchors and 20 random products of nonnegative "
        "linear forms in "
     << static_cast<int>(dt * 1000) << " ms";
  report(6, ok, os.str());
}

void criterion7() {
  CoeffSeq c252;
  c252.mags = {Int(2), Int(5), Int(2)};
  ConcordanceCert cert = fox_milnor(c252);
  bool ok = cert.found && cert.factor == std::vector<Int>{-1, 2};

  CoeffSeq c111;
  c111.mags = {Int(1), Int(1), Int(1)};
  ok &= !fox_milnor(c111).found;
  report(7, ok,
         "(2,5,2) factors as 2t-1; (1,1,1) admits no factorization within "
         "the exhaustive bound");
}

void criterion8(const std::string& census_path) {
  std::ifstream in(census_path);
  std::stringstream buf;
  buf << in.rdbuf();
  CensusOptions o1;
  o1.jobs = 1;
  CensusRun r1 = run_census_text(buf.str(), o1, "json");
  CensusOptions o8;
  o8.jobs = 8;
  CensusRun r8 = run_census_text(buf.str(), o8, "json");
  bool ok = r1.exit_code == r8.exit_code && r1.rendered == r8.rendered &&
            !r1.rendered.empty();
  std::ostringstream os;
  os << "jobs=1 and jobs=8 reports are byte-identical ("
     << r1.rendered.size() << " bytes)";
  report(8, ok, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  std::string census_path =
      argc > 1 ? argv[1] : "data/census_alt_knots_10.txt";
  criterion1();
  criterion2();
  criterion3(census_path);
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8(census_path);
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
