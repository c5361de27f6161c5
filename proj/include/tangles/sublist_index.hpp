#pragma once

#include <cstdint>
#include <vector>

#include "tangles/swap_list.hpp"

namespace tangles {

// Indexes the sublists of a root list. Each nonzero pair of the root is a
// slot; a sublist is a digit vector (one digit per slot, bounded by the root
// multiplicity) encoded as a mixed-radix integer with radix mult+1 per slot.
// Keys run from 0 (empty sublist) to size()-1 (the root itself), and removing
// a swap always decreases the key, so ascending key order is a valid
// evaluation order for sublist recurrences.
class SublistIndex {
public:
    struct Slot {
        int i = 0;
        int j = 0;
        std::uint32_t mult = 0;
        std::uint64_t stride = 0;
    };

    // Throws ResourceLimitError if the number of sublists exceeds the cap.
    SublistIndex(const SwapList& root, std::uint64_t max_entries);

    const SwapList& root() const { return root_; }
    int order() const { return root_.order(); }

    // Number of distinct sublists, product of (mult+1) over all slots.
    std::uint64_t size() const { return size_; }

    int slot_count() const { return static_cast<int>(slots_.size()); }
    const Slot& slot(int k) const { return slots_[static_cast<std::size_t>(k)]; }

    // Slot index for a wire pair, or -1 if the root has no such swap.
    int slot_of(int i, int j) const;

    std::uint64_t key_of(const SwapList& sublist) const;
    SwapList list_at(std::uint64_t key) const;
    std::vector<std::uint32_t> digits_at(std::uint64_t key) const;

private:
    SwapList root_;
    std::vector<Slot> slots_;
    std::vector<int> slot_lookup_; // n*n matrix, -1 where no slot
    std::uint64_t size_ = 1;
};

} // namespace tangles
