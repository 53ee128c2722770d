#include <doctest.h>

#include "altk/braid.hpp"
#include "altk/errors.hpp"
#include "altk/seifert.hpp"

using namespace altk;

namespace {
LinkDiagram pd(const char* code) { return parse_pd(code); }
const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kFig8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
}  // namespace

TEST_CASE("trefoil has two circles joined by three parallel edges") {
  SeifertData s = seifert_circles(pd(kTrefoil));
  CHECK(s.circle_count() == 2);
  CHECK(s.edges.size() == 3);
  for (auto [u, v] : s.edges) {
    CHECK(u != v);
  }
}

TEST_CASE("hopf closure has two circles and two edges") {
  SeifertData s = seifert_circles(braid_closure(parse_braid("2 ; 1 1")));
  CHECK(s.circle_count() == 2);
  CHECK(s.edges.size() == 2);
}

TEST_CASE("figure-eight has three circles") {
  SeifertData s = seifert_circles(pd(kFig8));
  CHECK(s.circle_count() == 3);
  CHECK(s.edges.size() == 4);
}

TEST_CASE("edge count always equals crossing count") {
  for (const char* w : {"2 ; 1 1 1", "3 ; 1 -2 1 -2", "4 ; 1 -2 3 1 -2 3",
                        "3 ; 1 1 1 -2 -2", "2 ; 1 1 1 1 1"}) {
    LinkDiagram d = braid_closure(parse_braid(w));
    SeifertData s = seifert_circles(d);
    CHECK(static_cast<int>(s.edges.size()) == d.crossing_count());
    // braid closures: one circle per strand
    CHECK(s.circle_count() == parse_braid(w).strands);
  }
}

TEST_CASE("arrangement classes form a tree over circles") {
  for (const char* w : {"2 ; 1 1 1", "3 ; 1 -2 1 -2", "4 ; 1 -2 3 1 -2 3"}) {
    LinkDiagram d = braid_closure(parse_braid(w));
    SeifertData s = seifert_circles(d);
    Arrangement ar = seifert_arrangement(d, s);
    CHECK(ar.class_count == s.circle_count() + 1);
    for (int k = 0; k < d.crossing_count(); ++k) {
      auto [cu, cv] = s.edges[k];
      // The band's region is adjacent to both endpoint circles.
      bool u_ok = ar.middle_class[k] == ar.circle_sides[cu].first ||
                  ar.middle_class[k] == ar.circle_sides[cu].second;
      bool v_ok = ar.middle_class[k] == ar.circle_sides[cv].first ||
                  ar.middle_class[k] == ar.circle_sides[cv].second;
      CHECK(u_ok);
      CHECK(v_ok);
    }
  }
}

TEST_CASE("smoothing all crossings leaves only free loops") {
  LinkDiagram d = pd(kTrefoil);
  std::vector<bool> all(d.crossing_count(), true);
  SmoothResult r = smooth_crossings(d, all);
  CHECK(r.tuples.empty());
  CHECK(r.free_loops == 2);  // the two Seifert circles
}

TEST_CASE("smoothing nothing is the identity") {
  LinkDiagram d = pd(kFig8);
  std::vector<bool> none(d.crossing_count(), false);
  SmoothResult r = smooth_crossings(d, none);
  CHECK(r.tuples.size() == 4);
  CHECK(r.free_loops == 0);
  LinkDiagram back = assemble_diagram(r.tuples, r.signs);
  CHECK(back.crossing_count() == 4);
}

TEST_CASE("split input rejected") {
  // Two stacked trefoil tuples with disjoint labels parse as a split diagram.
  LinkDiagram split = parse_pd(
      "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) X(7,10,8,11) X(9,12,10,7) "
      "X(11,8,12,9)");
  CHECK_FALSE(split.is_connected());
  CHECK_THROWS_AS(seifert_circles(split), precondition_error);
}
