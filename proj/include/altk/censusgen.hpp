#pragma once

#include <string>
#include <vector>

#include "altk/harness.hpp"

namespace altk {

// Enumerates alternating braid-word closures (2..max_strands strands, every
// generator used at least twice, one component) up to the crossing budget,
// deduplicated by the invariant fingerprint (crossings, coefficient
// magnitudes, signature, determinant). Both chiralities are kept when they
// differ. Output entries are PD codes, deterministic across runs.
std::vector<CensusEntry> generate_alternating_knot_census(int max_crossings,
                                                          int max_strands = 5);

std::string census_to_text(const std::vector<CensusEntry>& entries);

}  // namespace altk
