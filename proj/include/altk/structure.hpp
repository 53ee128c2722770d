#pragma once

#include <vector>

#include "altk/coeffseq.hpp"
#include "altk/diagram.hpp"
#include "altk/ints.hpp"

namespace altk {

// Maximal chain of crossings joined by bigon faces. Coherent when the two
// strands run parallel through the region (some bigon is bounded by arcs of
// opposite boundary sense).
struct TwistRegion {
  std::vector<int> crossings;
  bool coherent = false;
  int sign = 0;
  int size() const { return static_cast<int>(crossings.size()); }
};

struct TwistProfile {
  std::vector<TwistRegion> regions;
  int mt = 0;  // largest coherent region, 0 if none
};

// Requires a reduced alternating connected diagram.
TwistProfile twist_regions(const LinkDiagram& d);

struct TwistConcentration {
  bool holds = false;
  int mt = 0;
  int genus = 0;
  int components = 0;
  Rat margin;  // (MT - 3) - (g + |L|/2)
};

TwistConcentration is_twist_concentrated(const LinkDiagram& d);

// Number of leading coefficient inequalities guaranteed by a twist region of
// MT crossings: MT - 3, clamped at zero.
int guaranteed_prefix(const LinkDiagram& d);
int guaranteed_prefix_from_mt(int mt);

// Murasugi-sum tree of special alternating pieces. Edge lengths count half
// the boundary arcs of the gluing polygon: 1 is a connected sum, 2 a
// plumbing along a square.
struct DecompPiece {
  LinkDiagram diagram;
  std::vector<int> crossings;  // original crossing indices
  int sign = 0;
};

struct DecompEdge {
  int a = 0;
  int b = 0;
  int length = 0;
};

struct Decomposition {
  std::vector<DecompPiece> pieces;
  std::vector<DecompEdge> edges;
  std::vector<int> piece_of_crossing;
  int max_sum_length() const;
};

// Requires a reduced alternating connected diagram. Splits along separating
// Seifert circles, smallest side first, until every piece is special
// alternating.
Decomposition decompose_murasugi(const LinkDiagram& d);

bool sums_below(const Decomposition& dec, int bound);

}  // namespace altk
