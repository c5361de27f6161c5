#include "tangles/sublist_index.hpp"

#include "tangles/errors.hpp"

namespace tangles {

SublistIndex::SublistIndex(const SwapList& root, std::uint64_t max_entries) : root_(root) {
    const int n = root.order();
    slot_lookup_.assign(static_cast<std::size_t>(n) * n, -1);
    unsigned __int128 size = 1;
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const std::uint32_t mult = root.get(i, j);
            if (mult == 0) continue;
            Slot slot;
            slot.i = i;
            slot.j = j;
            slot.mult = mult;
            slot.stride = static_cast<std::uint64_t>(size);
            size *= mult + 1;
            if (size > max_entries) {
                const std::string count =
                    size > static_cast<unsigned __int128>(UINT64_MAX)
                        ? std::string("more than 2^64")
                        : std::to_string(static_cast<std::uint64_t>(size));
                throw ResourceLimitError("sublist table would need " + count + " entries (cap " +
                                         std::to_string(max_entries) + ")");
            }
            const int k = static_cast<int>(slots_.size());
            slot_lookup_[static_cast<std::size_t>(i - 1) * n + (j - 1)] = k;
            slot_lookup_[static_cast<std::size_t>(j - 1) * n + (i - 1)] = k;
            slots_.push_back(slot);
        }
    }
    size_ = static_cast<std::uint64_t>(size);
}

int SublistIndex::slot_of(int i, int j) const {
    const int n = root_.order();
    if (i < 1 || j < 1 || i > n || j > n || i == j) return -1;
    return slot_lookup_[static_cast<std::size_t>(i - 1) * n + (j - 1)];
}

std::uint64_t SublistIndex::key_of(const SwapList& sublist) const {
    if (sublist.order() != root_.order()) throw InvalidInputError("sublist order mismatch");
    std::uint64_t key = 0;
    for (const Slot& slot : slots_) key += slot.stride * sublist.get(slot.i, slot.j);
    // Validate that it really is a sublist with the same support bound.
    for (int i = 1; i < sublist.order(); ++i)
        for (int j = i + 1; j <= sublist.order(); ++j)
            if (sublist.get(i, j) > root_.get(i, j))
                throw InvalidInputError("not a sublist of the root list");
    return key;
}

SwapList SublistIndex::list_at(std::uint64_t key) const {
    SwapList out(root_.order());
    for (const Slot& slot : slots_) {
        out.set(slot.i, slot.j, static_cast<std::uint32_t>(key / slot.stride % (slot.mult + 1)));
    }
    return out;
}

std::vector<std::uint32_t> SublistIndex::digits_at(std::uint64_t key) const {
    std::vector<std::uint32_t> digits(slots_.size(), 0);
    for (std::size_t k = 0; k < slots_.size(); ++k) {
        const Slot& slot = slots_[k];
        digits[k] = static_cast<std::uint32_t>(key / slot.stride % (slot.mult + 1));
    }
    return digits;
}

} // namespace tangles
