#pragma once

#include <cstdint>
#include <optional>

#include "tangles/swap_list.hpp"

namespace tangles {

// Brute-force caps. The searches are exhaustive over (permutation, remaining
// swaps) states and are meant for tiny instances only.
struct OracleLimits {
    int max_wires = 5;
    std::uint64_t max_sublists = 1'000'000;
    std::uint64_t max_states = 20'000'000;
};

// Decides feasibility by memoized depth-first search, executing one swap per
// step (serializing layers loses no feasibility information).
bool oracle_feasible(const SwapList& list, const OracleLimits& limits = {});

// Minimum tangle height by breadth-first search where each transition
// performs a non-empty set of disjoint adjacent swaps from the remaining
// multiset. Empty result means no tangle realizes the list.
std::optional<std::uint64_t> oracle_min_height(const SwapList& list,
                                               const OracleLimits& limits = {});

} // namespace tangles
