#pragma once

#include <array>
#include <utility>
#include <vector>

#include "altk/diagram.hpp"

namespace altk {

// Seifert circles of the oriented smoothing, with the data needed to walk
// the smoothed arrangement: the Seifert graph (vertex per circle, edge per
// crossing) and the cyclic order of crossings around each circle.
struct SeifertData {
  std::vector<std::vector<int>> circles;       // arcs in cyclic order
  std::vector<int> circle_of_arc;              // arc label -> circle index
  std::vector<std::pair<int, int>> edges;      // crossing -> joined circles
  std::vector<int> edge_signs;                 // crossing signs
  std::vector<std::vector<int>> attachments;   // circle -> crossings in order

  int circle_count() const { return static_cast<int>(circles.size()); }
};

// Requires a connected diagram; throws precondition_error on split input.
SeifertData seifert_circles(const LinkDiagram& d);

// Regions of the smoothed-circle arrangement, as classes of diagram faces.
// For a connected diagram the class/circle incidence graph is a tree.
struct Arrangement {
  std::vector<int> face_class;                  // diagram face -> class
  std::vector<std::pair<int, int>> circle_sides;  // circle -> its two classes
  std::vector<int> middle_class;                // crossing -> band's region
  int class_count = 0;
};

Arrangement seifert_arrangement(const LinkDiagram& d, const SeifertData& s);

// Oriented smoothing of a subset of crossings. Kept crossings are re-expressed
// over the merged arcs; crossingless components are returned as a count.
struct SmoothResult {
  std::vector<std::array<int, 4>> tuples;
  std::vector<int> signs;
  std::vector<int> kept;  // original crossing indices, in order
  int free_loops = 0;
};

SmoothResult smooth_crossings(const LinkDiagram& d,
                              const std::vector<bool>& smooth_mask);

// Genus of the surface built from the Seifert circles of this diagram.
int seifert_genus(const LinkDiagram& d, const SeifertData& s);

}  // namespace altk
