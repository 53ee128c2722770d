#pragma once

#include <string>
#include <vector>

#include "altk/diagram.hpp"

namespace altk {

// Braid word on `strands` strands; letter i (nonzero, |i| < strands) is the
// Artin generator sigma_|i| with the sign of i as crossing sign.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  // Permutation of strand positions induced by the word, as images of 0-based
  // top positions.
  std::vector<int> permutation() const;
  // Number of cycles of the permutation = components of the closure.
  int closure_components() const;
  std::string str() const;
};

// Grammar: "n ; i1 i2 ... ik".
BraidWord parse_braid(const std::string& text);

// Standard closure, all strands oriented downward; positive letters give
// positive crossings. Requires every strand to pass through at least one
// crossing (otherwise the closure has a crossing-free split component).
LinkDiagram braid_closure(const BraidWord& b);

// Alternating braid word: odd-index generators appear with one sign, even
// with the other. Closures of such words are alternating diagrams.
bool is_alternating_word(const BraidWord& b);

// Plat closure of a braid on an even number of strands: positions (1,2),
// (3,4), ... are capped above and below. Strand orientations are traced from
// the caps; positive letters put the strand heading down-right on top.
LinkDiagram plat_closure(const BraidWord& b);

}  // namespace altk
