#pragma once

#include <array>
#include <span>

namespace g2 {

/// Checks that `lines` (triples of points 1..7) cover every unordered pair of
/// distinct points exactly once. Throws FanoAxiomError naming the first pair
/// covered twice, or else the first pair never covered.
void check_pair_coverage(std::span<const std::array<int, 3>> lines);

}  // namespace g2
