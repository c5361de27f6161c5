#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tangles/options.hpp"
#include "tangles/sublist_index.hpp"
#include "tangles/swap_list.hpp"
#include "tangles/tangle.hpp"

namespace tangles {

// Connects two permutations by odd-even transposition rounds: round r swaps
// the out-of-order wires at the odd (even) position pairs. The result starts
// at p, ends at q, has height at most n+1, and performs every swap at most
// once.
Tangle connect_odd_even(const Permutation& p, const Permutation& q);

// Minimum-height tangle realizing a consistent simple list, by breadth-first
// search over the permutations whose inversions stay within the list; an edge
// exists where the swaps of a step are not already inverted. Throws
// InvalidInputError on non-simple or inconsistent input.
std::optional<Tangle> min_height_bfs(const SwapList& list, const SolveOptions& options = {});

// Per-sublist heights: height(key) is the minimum height of a tangle
// realizing the sublist, or infinity (represented as npos) if none exists.
class HeightTable {
public:
    static constexpr std::uint32_t infinite = UINT32_MAX;

    HeightTable(SublistIndex index, std::vector<std::uint32_t> heights,
                std::vector<std::uint32_t> back_masks)
        : index_(std::move(index)), heights_(std::move(heights)),
          back_masks_(std::move(back_masks)) {}

    const SublistIndex& index() const { return index_; }
    std::uint64_t entry_count() const { return heights_.size(); }
    std::uint32_t height(std::uint64_t key) const { return heights_[key]; }

    // Position-swap mask of the step chosen for the key's last transition.
    std::uint32_t back_mask(std::uint64_t key) const { return back_masks_[key]; }

private:
    SublistIndex index_;
    std::vector<std::uint32_t> heights_;
    std::vector<std::uint32_t> back_masks_;
};

// Fills the height table over all sublists of the list, ascending by key.
// Ties between equally good last steps go to the numerically smallest
// position mask, so witnesses are reproducible.
HeightTable compute_height_table(const SwapList& list, const SolveOptions& options = {});

struct MinHeightResult {
    std::optional<std::uint64_t> height; // empty means infeasible
    std::optional<Tangle> witness;       // present whenever height is

    bool feasible() const { return height.has_value(); }
};

// Minimum-height tangle for an arbitrary list via the sublist recurrence.
// Wires that never swap split the instance into independent blocks solved
// separately and rejoined side by side.
MinHeightResult min_height_dp(const SwapList& list, const SolveOptions& options = {});

// Rebuilds a tangle visiting the layers indexed by keep (1-based, must
// contain the first and the last) connected by odd-even rounds. Every swap of
// the input tangle must be witnessed by some kept layer having that pair
// inverted; the result then has entries bounded by min(original, |keep|-1)
// and the same type. Throws InvalidInputError when a swap has no witness.
Tangle shorten(const Tangle& t, const std::vector<int>& keep);

} // namespace tangles
