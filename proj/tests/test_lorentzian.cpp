#include <doctest.h>

#include <random>

#include "altk/errors.hpp"
#include "altk/invariants.hpp"
#include "altk/lorentzian.hpp"

using namespace altk;

namespace {
MultiPoly poly(int arity, std::vector<std::pair<std::vector<int>, long>> ts) {
  MultiPoly p(arity);
  for (auto& [e, c] : ts) p.add_term(e, Int(c));
  return p;
}
}  // namespace

TEST_CASE("exchange axiom on small supports") {
  SupportSet u23{3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
  CHECK(is_m_convex(u23).ok);

  SupportSet gap{2, {{2, 0}, {0, 2}}};
  MConvexResult r = is_m_convex(gap);
  CHECK_FALSE(r.ok);
  CHECK(r.alpha == std::vector<int>{2, 0});
  CHECK(r.beta == std::vector<int>{0, 2});
  CHECK(r.index == 0);

  SupportSet seg{2, {{2, 0}, {1, 1}, {0, 2}}};
  CHECK(is_m_convex(seg).ok);

  CHECK_THROWS_AS(is_m_convex(SupportSet{2, {{1, 0}, {0, 2}}}),
                  precondition_error);
}

TEST_CASE("hamming-distance-4 gaps always fail") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> pos(0, 3);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<int> a(4, 0), b(4, 0);
    int i = pos(rng), j = pos(rng);
    if (i == j) continue;
    a[i] = 2;
    b[j] = 2;
    SupportSet s{4, {a, b}};
    CHECK_FALSE(is_m_convex(s).ok);
  }
}

TEST_CASE("lorentzian verdicts on the anchor polynomials") {
  // e_2(x,y,z): Hessian inertia (1,2,0)
  MultiPoly e2 = poly(3, {{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}});
  LorentzianResult r = is_lorentzian(e2);
  CHECK(r.lorentzian);

  // x^2 + y^2: two positive eigenvalues
  MultiPoly sq = poly(2, {{{2, 0}, 1}, {{0, 2}, 1}});
  r = is_lorentzian(sq);
  CHECK_FALSE(r.lorentzian);
  CHECK(r.reason == "support");  // {(2,0),(0,2)} is not even M-convex

  // x^2 + xy + y^2 has M-convex support but a definite Hessian
  MultiPoly seg = poly(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  r = is_lorentzian(seg);
  CHECK_FALSE(r.lorentzian);
  CHECK(r.reason == "hessian");
  CHECK(r.witness_inertia.n_plus == 2);

  // xy: inertia (1,1,0)
  MultiPoly xy = poly(2, {{{1, 1}, 1}});
  CHECK(is_lorentzian(xy).lorentzian);

  // negative coefficient
  MultiPoly neg = poly(2, {{{1, 1}, -1}});
  r = is_lorentzian(neg);
  CHECK_FALSE(r.lorentzian);
  CHECK(r.reason == "negative-coefficient");

  CHECK_THROWS_AS(is_lorentzian(poly(2, {{{1, 0}, 1}, {{2, 0}, 1}})),
                  precondition_error);
}

TEST_CASE("elementary symmetric polynomials pass") {
  for (int k = 2; k <= 5; ++k) {
    MultiPoly e2(k);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        std::vector<int> e(k, 0);
        e[i] = e[j] = 1;
        e2.add_term(e, Int(1));
      }
    CHECK(is_lorentzian(e2).lorentzian);
  }
}

TEST_CASE("products of nonnegative linear forms pass") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> kdist(2, 4), ddist(2, 4), cdist(0, 3);
  int done = 0;
  while (done < 20) {
    int k = kdist(rng), d = ddist(rng);
    MultiPoly prod(k);
    prod.add_term(std::vector<int>(k, 0), Int(1));
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
      prod = prod * lin;
    }
    if (zero) continue;
    ++done;
    CAPTURE(prod.format());
    CHECK(is_lorentzian(prod).lorentzian);
  }
}

TEST_CASE("parallel and serial sweeps agree") {
  MultiPoly seg = poly(2, {{{3, 0}, 1}, {{2, 1}, 1}, {{1, 2}, 1}, {{0, 3}, 1}});
  LorentzianResult a = is_lorentzian(seg, 4);
  LorentzianResult b = is_lorentzian_serial(seg);
  CHECK(a.lorentzian == b.lorentzian);
  CHECK(a.reason == b.reason);
  CHECK(a.witness_chain == b.witness_chain);

  MultiPoly e2 = poly(3, {{{1, 1, 0}, 1}, {{1, 0, 1}, 2}, {{0, 1, 1}, 3}});
  CHECK(is_lorentzian(e2, 3).lorentzian == is_lorentzian_serial(e2).lorentzian);
}

TEST_CASE("lorentzian is invariant under variable permutation") {
  MultiPoly p = poly(3, {{{2, 1, 0}, 1}, {{1, 2, 0}, 1}, {{1, 1, 1}, 2},
                         {{0, 2, 1}, 1}, {{2, 0, 1}, 1}, {{1, 0, 2}, 1},
                         {{0, 1, 2}, 1}, {{3, 0, 0}, 1}, {{0, 3, 0}, 1},
                         {{0, 0, 3}, 1}});
  bool base = is_lorentzian(p).lorentzian;
  // permute variables (x,y,z) -> (z,x,y)
  MultiPoly q(3);
  for (const auto& [e, c] : p.terms()) q.add_term({e[2], e[0], e[1]}, c);
  CHECK(is_lorentzian(q).lorentzian == base);
}

TEST_CASE("torus piece refinement validates") {
  for (int m = 2; m <= 6; ++m) {
    Refinement r = torus_piece_refinement(m);
    CoeffSeq c;
    for (int i = 0; i < m; ++i) c.mags.push_back(Int(1));
    RefinementValidation v = refinement_validate(r.poly, c, r.weights);
    CHECK(v.all_coeffs_one);
    CHECK(v.m_convex);
    CHECK(v.specializes);
    // unit-coefficient matroid polynomials are Lorentzian (degree >= 2)
    if (m >= 3) CHECK(is_lorentzian(r.poly).lorentzian);
  }
}

TEST_CASE("refinement contracts on the segment example") {
  // {(2,0),(1,1),(0,2)} with unit coefficients specializes to (1,1,1)
  MultiPoly p = poly(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  CoeffSeq c;
  c.mags = {Int(1), Int(1), Int(1)};
  RefinementValidation v = refinement_validate(p, c);
  CHECK(v.all_coeffs_one);
  CHECK(v.m_convex);
  CHECK(v.specializes);

  MultiPoly p2 = poly(2, {{{2, 0}, 2}, {{1, 1}, 1}, {{0, 2}, 1}});
  CHECK_FALSE(refinement_validate(p2, c).all_coeffs_one);

  MultiPoly p3 = poly(2, {{{2, 0}, 1}, {{0, 2}, 1}});
  RefinementValidation v3 = refinement_validate(p3, c);
  CHECK_FALSE(v3.m_convex);
  CHECK_FALSE(v3.specializes);
}

TEST_CASE("three-braid refinement: figure-eight multiplicities") {
  auto syl = three_braid_syllables(parse_braid("3 ; 1 -2 1 -2"));
  REQUIRE(syl.has_value());
  CHECK(syl->pairs() == 2);
  ThreeBraidRefinement ref = three_braid_refinement(*syl);
  REQUIRE(ref.ok);
  REQUIRE(ref.n.size() == 2);
  REQUIRE(ref.n[0].size() == 2);
  CHECK(ref.n[0][0] == 1);
  CHECK(ref.n[0][1] == 2);
  CHECK(ref.n[1][0] == 1);
  CHECK(ref.n[1][1] == 1);
  CHECK_FALSE(ref.all_coeffs_one);

  // single-pair words spread to unit coefficients
  auto syl2 = three_braid_syllables(parse_braid("3 ; 1 1 -2 -2 -2"));
  REQUIRE(syl2.has_value());
  CHECK(syl2->pairs() == 1);
  ThreeBraidRefinement ref2 = three_braid_refinement(*syl2);
  REQUIRE(ref2.ok);
  CHECK(ref2.all_coeffs_one);
}

TEST_CASE("three-braid refinement specializes to the Alexander magnitudes") {
  for (const char* w : {"3 ; 1 1 -2 -2", "3 ; 1 -2 1 -2", "3 ; 1 1 -2 1 -2 -2",
                        "3 ; 1 1 1 -2 -2", "3 ; 1 -2 1 -2 1 -2"}) {
    auto syl = three_braid_syllables(parse_braid(w));
    REQUIRE(syl.has_value());
    ThreeBraidRefinement ref = three_braid_refinement(*syl);
    CAPTURE(w);
    REQUIRE(ref.ok);
    CoeffSeq c = alexander_burau(syl->braid());
    RefinementValidation v =
        refinement_validate(ref.refinement.poly, c, ref.refinement.weights);
    CHECK(v.m_convex);
    CHECK(v.specializes);
    CHECK(v.all_coeffs_one == ref.all_coeffs_one);
  }
}

TEST_CASE("empty scan budget yields an empty report") {
  ScanReport r = three_braid_nonlorentzian_scan(1);
  CHECK(r.rows.empty());
  CHECK(r.lorentzian_count == 0);
  CHECK(r.non_lorentzian_count == 0);
}

TEST_CASE("scan reproduces the connected-sum dichotomy at small sizes") {
  ScanReport report = three_braid_nonlorentzian_scan(7);
  CHECK(report.rows.size() > 0);
  int checked = 0;
  for (const ScanRow& r : report.rows) {
    if (r.lorentzian < 0) continue;
    ++checked;
    CAPTURE(r.word);
    CHECK((r.lorentzian == 1) == r.connected_sum);
    if (!r.connected_sum) CHECK(r.witness.find("hessian") != std::string::npos);
  }
  CHECK(checked > 0);
  CHECK(report.lorentzian_count > 0);
  CHECK(report.non_lorentzian_count > 0);
  // deterministic CSV header
  CHECK(report.to_csv().rfind("word;is_connected_sum;is_lorentzian;witness\n",
                              0) == 0);
}
