#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "altk/ints.hpp"

namespace altk {

// One crossing of an oriented diagram, PD slots (a,b,c,d) listed
// counterclockwise starting at the incoming under-strand. The under-strand
// runs a -> c; the over-strand runs b -> d when the crossing is positive and
// d -> b when negative.
struct Crossing {
  std::array<int, 4> arcs;
  int sign = 0;

  int under_in() const { return arcs[0]; }
  int under_out() const { return arcs[2]; }
  int over_in() const { return sign > 0 ? arcs[1] : arcs[3]; }
  int over_out() const { return sign > 0 ? arcs[3] : arcs[1]; }
};

struct ArcEnd {
  int crossing = -1;
  int slot = -1;
  bool operator==(const ArcEnd&) const = default;
};

// Validated oriented link diagram. Arc labels are 1..2c, consecutive along
// the orientation within each component.
class LinkDiagram {
 public:
  // Empty placeholder; every usable instance comes from from_tuples.
  LinkDiagram() = default;

  // Builds and fully validates a diagram from PD tuples. Signs are derived
  // from the label-successor rule; where a 2-arc component leaves the
  // over-strand direction ambiguous, expected_signs breaks the tie.
  static LinkDiagram from_tuples(const std::vector<std::array<int, 4>>& tuples,
                                 const std::vector<int>& expected_signs = {});

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return 2 * crossing_count(); }
  const std::vector<Crossing>& crossings() const { return crossings_; }

  int component_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::pair<int, int>>& component_blocks() const {
    return blocks_;
  }
  int component_of(int arc) const { return comp_of_arc_[arc]; }
  int successor(int arc) const;

  int writhe() const;
  // Connectivity of the underlying 4-valent graph (split detection).
  bool is_connected() const { return graph_components_ == 1; }
  int graph_component_count() const { return graph_components_; }

  int face_count() const { return face_count_; }
  // Face at the corner between slots s and s+1 (mod 4) of a crossing.
  int corner_face(int crossing, int s) const {
    return corner_face_[crossing][s];
  }
  // Faces on the two sides of an arc.
  std::pair<int, int> arc_faces(int arc) const;
  // Number of arcs bounding each face (arcs counted with multiplicity).
  const std::vector<int>& face_sizes() const { return face_sizes_; }
  // Proper 2-coloring of the faces, color 0 for face 0.
  std::vector<int> checkerboard_colors() const;

  ArcEnd arc_exit(int arc) const { return arc_exit_[arc]; }
  ArcEnd arc_enter(int arc) const { return arc_enter_[arc]; }
  // True if the strand passes over at the given end of the arc.
  bool exit_is_over(int arc) const { return arc_exit_[arc].slot != 2; }
  bool enter_is_over(int arc) const { return arc_enter_[arc].slot != 0; }

  bool is_alternating() const;
  bool is_reduced() const;
  bool is_special_alternating() const;

  LinkDiagram mirror() const;

  std::string pd_code() const;

 private:
  std::vector<Crossing> crossings_;
  std::vector<std::pair<int, int>> blocks_;
  std::vector<int> comp_of_arc_;  // indexed by arc label, [0] unused
  std::vector<ArcEnd> arc_exit_, arc_enter_;
  std::vector<std::array<int, 4>> corner_face_;
  std::vector<int> face_sizes_;
  int face_count_ = 0;
  int graph_components_ = 0;
};

struct DiagramPredicates {
  bool is_alternating = false;
  bool is_reduced = false;
  bool is_special_alternating = false;
  int component_count = 0;
  int writhe = 0;
};

// Parse a PD code: whitespace-separated tokens X(a,b,c,d).
LinkDiagram parse_pd(const std::string& text);

DiagramPredicates diagram_predicates(const LinkDiagram& d);

// Relabel a diagram given by raw tuples with arbitrary arc identifiers plus
// explicit signs (which fix the over-strand direction) into the canonical
// 1..2c labeling, then validate.
LinkDiagram assemble_diagram(const std::vector<std::array<int, 4>>& tuples,
                             const std::vector<int>& signs);

// Connected sum: splices the component containing arc 1 of each diagram.
LinkDiagram connect_sum(const LinkDiagram& d1, const LinkDiagram& d2);

}  // namespace altk
