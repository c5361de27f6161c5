#pragma once

#include <cstdint>
#include <vector>

#include "tangles/options.hpp"
#include "tangles/sublist_index.hpp"
#include "tangles/swap_list.hpp"
#include "tangles/tangle.hpp"

namespace tangles {

// Simple lists are feasible exactly when they are consistent.
// Throws InvalidInputError on non-simple input.
bool feasible_simple(const SwapList& list);

// Odd lists (every nonzero entry odd) are feasible exactly when their parity
// list is consistent. Throws InvalidInputError on non-odd input.
bool feasible_odd(const SwapList& list);

// Witness for a feasible odd list: realizes the parity list by odd-even
// rounds, then repeats each swap in place until its multiplicity is met.
// Throws InvalidInputError on non-odd or infeasible input.
Tangle realize_odd(const SwapList& list);

// Per-sublist feasibility bits, one per sublist key.
class FeasibilityTable {
public:
    FeasibilityTable(SublistIndex index, std::vector<bool> feasible)
        : index_(std::move(index)), feasible_(std::move(feasible)) {}

    const SublistIndex& index() const { return index_; }
    std::uint64_t entry_count() const { return feasible_.size(); }
    bool feasible(std::uint64_t key) const { return feasible_[key]; }

private:
    SublistIndex index_;
    std::vector<bool> feasible_;
};

// Fills the table bottom-up: a sublist is feasible iff removing some swap
// leaves a feasible sublist whose final positions put that swap's wires next
// to each other.
FeasibilityTable compute_feasibility_table(const SwapList& list, const SolveOptions& options = {});

// Feasibility of an arbitrary list via the sublist table, behind cheap
// consistency and separability screens.
bool feasible_dp(const SwapList& list, const SolveOptions& options = {});

// Entry bound for the truncation: floor(n^2/4) + 1.
std::uint32_t fpt_entry_cap(int order);

// Caps every entry without changing its parity. The default cap is
// fpt_entry_cap(n); passing a smaller cap is for experimentation only and
// may lose feasible lists.
SwapList fpt_truncate(const SwapList& list, std::uint32_t entry_cap = 0);

// Feasibility via the truncated list: true iff some sublist of the truncated
// list is feasible and has the same type as the input.
bool feasible_fpt(const SwapList& list, const SolveOptions& options = {});

// Even lists whose entries are all 0 or >= n are feasible exactly when they
// are non-separable. Throws InvalidInputError if the precondition fails.
bool feasible_rich_even(const SwapList& list);

// Which decision path feasible_auto took.
enum class FeasMethod {
    consistency_screen,
    separability_screen,
    simple,
    odd,
    rich_even,
    fpt,
    dp,
};

// Cheapest-first dispatch: screens, then the closed-form families, then the
// truncated or full table.
bool feasible_auto(const SwapList& list, const SolveOptions& options = {},
                   FeasMethod* chosen = nullptr);

} // namespace tangles
