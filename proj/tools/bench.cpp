// Benchmark: OpenMP census sweep and Hessian chain scan against their
// single-threaded reference paths.
#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "altk/harness.hpp"
#include "altk/lorentzian.hpp"

using namespace altk;

namespace {

double now_ms() { return omp_get_wtime() * 1000.0; }

MultiPoly product_of_forms(int k, int d) {
  // (x1 + ... + xk)^d scaled variants keep the sweep honest but cheap.
  MultiPoly prod(k);
  prod.add_term(std::vector<int>(k, 0), Int(1));
  for (int f = 0; f < d; ++f) {
    MultiPoly lin(k);
    for (int v = 0; v < k; ++v) {
      std::vector<int> e(k, 0);
      e[v] = 1;
      lin.add_term(e, Int(1 + (v + f) % 3));
    }
    prod = prod * lin;
  }
  return prod;
}

}  // namespace

int main(int argc, char** argv) {
  std::string census_path = argc > 1 ? argv[1] : "data/census_alt_knots_10.txt";
  int jobs = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();
  int repeat = argc > 3 ? std::atoi(argv[3]) : 3;

  std::ifstream in(census_path);
  if (!in) {
    std::cerr << "cannot open census: " << census_path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  auto entries = parse_census(buf.str());
  std::cout << "census: " << entries.size() << " entries, jobs=" << jobs
            << ", repeat=" << repeat << "\n";

  CensusOptions opt;
  opt.jobs = 1;
  double best_serial = 1e18, best_parallel = 1e18;
  std::string ref;
  for (int r = 0; r < repeat; ++r) {
    double t0 = now_ms();
    auto reports = run_entries_serial(entries, opt);
    double t1 = now_ms();
    best_serial = std::min(best_serial, t1 - t0);
    ref = render_reports_json(reports, false);
  }
  CensusOptions popt;
  popt.jobs = jobs;
  std::string par;
  for (int r = 0; r < repeat; ++r) {
    double t0 = now_ms();
    auto reports = run_entries_parallel(entries, popt);
    double t1 = now_ms();
    best_parallel = std::min(best_parallel, t1 - t0);
    par = render_reports_json(reports, false);
  }
  std::cout << "census sweep   serial " << best_serial << " ms, parallel "
            << best_parallel << " ms, speedup "
            << best_serial / best_parallel << "x, reports "
            << (ref == par ? "identical" : "DIFFER") << "\n";

  MultiPoly p = product_of_forms(5, 7);
  double t0 = now_ms();
  LorentzianResult rs = is_lorentzian_serial(p);
  double t1 = now_ms();
  LorentzianResult rp = is_lorentzian(p, jobs);
  double t2 = now_ms();
  std::cout << "hessian sweep  serial " << (t1 - t0) << " ms, parallel "
            << (t2 - t1) << " ms, speedup " << (t1 - t0) / (t2 - t1)
            << "x, verdicts "
            << (rs.lorentzian == rp.lorentzian ? "agree" : "DIFFER") << "\n";
  return (ref == par && rs.lorentzian == rp.lorentzian) ? 0 : 1;
}
