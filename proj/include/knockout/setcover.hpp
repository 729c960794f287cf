#pragma once

// Exact minimum-weight set covering: hit every recorded support at minimum
// total knockout weight. Desk-scale pools only, so the solver is an exact
// branch-and-bound seeded by a greedy cover.

#include <functional>
#include <optional>
#include <vector>

#include "knockout/core.hpp"

namespace knockout {

struct CoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;  // each nonempty, indices sorted ascending
  KnockoutWeights weights;
};

void validate(const CoverInstance& instance);  // throws InputError

struct CoverResult {
  std::vector<int> cover;  // sorted ascending
  Value weight = 0;
};

// Ratio greedy: repeatedly take the index minimising weight / newly-covered
// sets (ties to the lower index), after sweeping up all zero-weight indices
// that hit anything. Always returns a genuine cover.
std::vector<int> greedy_cover(const CoverInstance& instance);

// Minimum-weight cover; among minimum-weight covers the lexicographically
// smallest sorted index sequence. Branches on the elements of the first
// uncovered set; bound: chosen weight plus the cheapest element of each set
// in a maximal pairwise-disjoint family of uncovered sets.
CoverResult exact_cover(const CoverInstance& instance);

// Same search, but a completed cover is only admitted when `accept` passes.
// Returns nullopt when no cover is accepted. This is the kernel behind
// cover_with_survivor and the engine's survivor-guaranteed covering.
std::optional<CoverResult> exact_cover_if(
    const CoverInstance& instance,
    const std::function<bool(const std::vector<int>&)>& accept);

struct SurvivorCover {
  std::vector<int> cover;
  Value weight = 0;
  Value survivor_value = 0;  // optimum of the program restricted to the survivors
};

// Minimum-weight cover whose removal still leaves the base program feasible.
// The survivor check enumerates supports, so program.n <= 24 is enforced.
// Throws NoSurvivorCoverError when every qualifying cover kills the program.
SurvivorCover cover_with_survivor(const CoverInstance& instance,
                                  const BinaryProgram& program,
                                  const PropertySpec& spec);

namespace detail {
// Lower bound used inside the search; exposed for soundness tests.
// excluded: flags over the universe for elements barred from the cover;
// covered: flags over instance.sets. Returns kUncoverable when some
// uncovered set has no available element.
inline constexpr Value kUncoverable = -1;
Value disjoint_sets_bound(const CoverInstance& instance,
                          const std::vector<char>& covered,
                          const std::vector<char>& excluded);
}  // namespace detail

}  // namespace knockout
