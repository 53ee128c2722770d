#pragma once

#include <string>

#include "altk/braid.hpp"
#include "altk/coeffseq.hpp"
#include "altk/diagram.hpp"
#include "altk/laurent.hpp"

namespace altk {

struct SignatureValue {
  int sigma = 0;
  // Anchor: the all-positive trefoil (closure of "2 ; 1 1 1") has sigma -2.
  std::string convention = "goeritz-gl";
};

struct GenusInfo {
  int from_span = 0;
  int from_seifert = 0;
};

// Alexander polynomial magnitudes from the Wirtinger presentation of the
// diagram: one row per crossing over the overpass generators, (1-t) on the
// over-strand, t on the incoming and -1 on the outgoing under-strand for
// positive crossings (swapped for negative), one row and column deleted.
CoeffSeq alexander_pd(const LinkDiagram& d);

// Alexander polynomial via the reduced Burau representation:
// det(rho(b) - I) = units * Delta * (1 + t + ... + t^{n-1}).
CoeffSeq alexander_burau(const BraidWord& b);
// The same, as a unit-normalized polynomial (used by cross-checks).
LaurentPoly alexander_burau_poly(const BraidWord& b);
LaurentPoly alexander_pd_poly(const LinkDiagram& d);

// Conway polynomial in z by the skein relation, recursing toward descending
// diagrams. Diagrams up to 12 crossings; memoized per invocation.
LaurentPoly conway_skein(const LinkDiagram& d);

// Unit-normalized Alexander polynomial reconstructed from a Conway
// polynomial via z^2 = t - 2 + 1/t (odd parts carry a t - 1 factor).
LaurentPoly conway_to_alexander(const LaurentPoly& nabla);

// Signature via the Goeritz matrix with the Gordon-Litherland correction,
// computed from both checkerboard surfaces and cross-checked.
SignatureValue signature(const LinkDiagram& d);

// Genus of a reduced alternating non-split diagram, from the span of the
// Alexander polynomial and independently from the Seifert surface.
GenusInfo genus_alternating(const LinkDiagram& d, const CoeffSeq& c);

}  // namespace altk
