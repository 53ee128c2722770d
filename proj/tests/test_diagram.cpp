#include <doctest.h>

#include "altk/diagram.hpp"
#include "altk/errors.hpp"

using namespace altk;

namespace {
const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kFig8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
const char* kHopf = "X(3,1,4,2) X(2,4,1,3)";
const char* kKink = "X(1,2,2,1)";
}  // namespace

TEST_CASE("trefoil parses with consistent signs") {
  LinkDiagram d = parse_pd(kTrefoil);
  CHECK(d.crossing_count() == 3);
  CHECK(d.component_count() == 1);
  CHECK(d.writhe() == 3);  // all positive under the successor rule
  CHECK(d.face_count() == 5);
  CHECK(d.is_connected());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_pd(""), parse_error);
  CHECK_THROWS_AS(parse_pd("Y(1,2,3,4)"), parse_error);
  CHECK_THROWS_AS(parse_pd("X(1,2,3"), parse_error);
  // arc label appearing three times
  CHECK_THROWS_AS(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,1)"),
                  validation_error);
  // out-of-range label
  CHECK_THROWS_AS(parse_pd("X(1,9,2,5) X(3,6,4,1) X(5,2,6,3)"),
                  validation_error);
}

TEST_CASE("every arc appears once in, once out") {
  for (const char* code : {kTrefoil, kFig8, kHopf, kKink}) {
    LinkDiagram d = parse_pd(code);
    for (int a = 1; a <= d.arc_count(); ++a) {
      CHECK(d.arc_exit(a).crossing >= 0);
      CHECK(d.arc_enter(a).crossing >= 0);
    }
    // Euler relation
    CHECK(d.face_count() == d.crossing_count() + 2);
  }
}

TEST_CASE("figure-eight predicates") {
  LinkDiagram d = parse_pd(kFig8);
  DiagramPredicates p = diagram_predicates(d);
  CHECK(p.is_alternating);
  CHECK(p.is_reduced);
  CHECK_FALSE(p.is_special_alternating);  // mixed signs
  CHECK(p.component_count == 1);
  CHECK(p.writhe == 0);
}

TEST_CASE("trefoil predicates") {
  DiagramPredicates p = diagram_predicates(parse_pd(kTrefoil));
  CHECK(p.is_alternating);
  CHECK(p.is_reduced);
  CHECK(p.is_special_alternating);
}

TEST_CASE("kink is not reduced") {
  LinkDiagram d = parse_pd(kKink);
  CHECK(d.crossing_count() == 1);
  CHECK(d.component_count() == 1);
  CHECK_FALSE(d.is_reduced());
}

TEST_CASE("hopf link") {
  LinkDiagram d = parse_pd(kHopf);
  CHECK(d.component_count() == 2);
  CHECK(d.writhe() == 2);
  CHECK(d.is_alternating());
  CHECK(d.is_special_alternating());
}

TEST_CASE("mirror is an involution and negates writhe") {
  for (const char* code : {kTrefoil, kFig8, kHopf}) {
    LinkDiagram d = parse_pd(code);
    LinkDiagram m = d.mirror();
    CHECK(m.writhe() == -d.writhe());
    CHECK(m.is_alternating() == d.is_alternating());
    LinkDiagram mm = m.mirror();
    CHECK(mm.pd_code() == d.pd_code());
  }
}

TEST_CASE("checkerboard coloring exists") {
  for (const char* code : {kTrefoil, kFig8, kHopf, kKink}) {
    LinkDiagram d = parse_pd(code);
    std::vector<int> col = d.checkerboard_colors();
    for (int k = 0; k < d.crossing_count(); ++k) {
      CHECK(col[d.corner_face(k, 0)] == col[d.corner_face(k, 2)]);
      CHECK(col[d.corner_face(k, 1)] == col[d.corner_face(k, 3)]);
      CHECK(col[d.corner_face(k, 0)] != col[d.corner_face(k, 1)]);
    }
  }
}

TEST_CASE("connected sum splices components") {
  LinkDiagram t = parse_pd(kTrefoil);
  LinkDiagram s = connect_sum(t, t);
  CHECK(s.crossing_count() == 6);
  CHECK(s.component_count() == 1);
  CHECK(s.writhe() == 6);
  CHECK(s.is_alternating());
  LinkDiagram f = parse_pd(kFig8);
  LinkDiagram s2 = connect_sum(t, f);
  CHECK(s2.crossing_count() == 7);
  CHECK(s2.component_count() == 1);
  CHECK(s2.is_alternating());
}
