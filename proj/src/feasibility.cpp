#include "tangles/feasibility.hpp"

#include <cstdlib>

#include "tangles/errors.hpp"
#include "tangles/heightmin.hpp"

namespace tangles {

bool feasible_simple(const SwapList& list) {
    if (!list.is_simple()) throw InvalidInputError("list is not simple");
    return is_consistent(list);
}

bool feasible_odd(const SwapList& list) {
    if (!list.is_odd()) throw InvalidInputError("list is not odd");
    return is_consistent(parity(list));
}

Tangle realize_odd(const SwapList& list) {
    if (!list.is_odd()) throw InvalidInputError("list is not odd");
    if (!is_consistent(list)) throw InvalidInputError("list is not feasible");

    const SwapList base = parity(list);
    const Tangle simple_tangle =
        connect_odd_even(Permutation::identity(list.order()), final_permutation(base));

    std::vector<Permutation> layers{simple_tangle.first()};
    for (int step = 1; step < simple_tangle.height(); ++step) {
        const Permutation& next = simple_tangle.layer(step + 1);
        layers.push_back(next);
        for (const WirePair& pair : swap_diff(simple_tangle.layer(step), next)) {
            const std::uint32_t mult = list.get(pair.first, pair.second);
            Permutation bounce = next;
            for (std::uint32_t extra = 1; extra < mult; ++extra) {
                bounce.swap_positions(std::min(bounce.pos(pair.first), bounce.pos(pair.second)));
                layers.push_back(bounce);
            }
        }
    }
    return Tangle(std::move(layers));
}

namespace {

// Bottom-up sweep of the sublist feasibility recurrence: a sublist is
// feasible iff dropping one swap (i, j) leaves a feasible sublist whose final
// positions put wires i and j next to each other. on_feasible is called with
// the key and digit vector of every feasible sublist; returning true aborts
// the sweep. Returns the bit table and whether the sweep was aborted.
template <typename OnFeasible>
std::pair<std::vector<bool>, bool> feasibility_sweep(const SublistIndex& index,
                                                     OnFeasible on_feasible) {
    const std::uint64_t size = index.size();
    const int slot_count = index.slot_count();
    const int n = index.order();

    std::vector<bool> feasible(size, false);
    feasible[0] = true;

    std::vector<std::uint32_t> digits(static_cast<std::size_t>(slot_count), 0);
    std::vector<int> fp(static_cast<std::size_t>(n) + 1, 0);

    for (std::uint64_t key = 1; key < size; ++key) {
        for (int k = 0; k < slot_count; ++k) {
            std::uint32_t& digit = digits[static_cast<std::size_t>(k)];
            if (digit < index.slot(k).mult) {
                ++digit;
                break;
            }
            digit = 0;
        }

        // Raw final positions of this sublist; toggling one pair's parity
        // gives the positions for the sublist with that swap removed.
        for (int wire = 1; wire <= n; ++wire) fp[static_cast<std::size_t>(wire)] = wire;
        for (int k = 0; k < slot_count; ++k) {
            if (digits[static_cast<std::size_t>(k)] % 2 == 0) continue;
            const auto& slot = index.slot(k);
            ++fp[static_cast<std::size_t>(slot.i)];
            --fp[static_cast<std::size_t>(slot.j)];
        }

        bool value = false;
        for (int k = 0; k < slot_count && !value; ++k) {
            const std::uint32_t digit = digits[static_cast<std::size_t>(k)];
            if (digit == 0) continue;
            const auto& slot = index.slot(k);
            if (!feasible[key - slot.stride]) continue;
            const int flip = digit % 2 == 1 ? -1 : 1;
            const int pos_i = fp[static_cast<std::size_t>(slot.i)] + flip;
            const int pos_j = fp[static_cast<std::size_t>(slot.j)] - flip;
            if (std::abs(pos_i - pos_j) == 1) value = true;
        }
        if (!value) continue;
        feasible[key] = true;
        if (on_feasible(key, digits)) return {std::move(feasible), true};
    }
    return {std::move(feasible), false};
}

} // namespace

FeasibilityTable compute_feasibility_table(const SwapList& list, const SolveOptions& options) {
    SublistIndex index(list, options.max_table_entries);
    auto [table, aborted] = feasibility_sweep(
        index, [](std::uint64_t, const std::vector<std::uint32_t>&) { return false; });
    (void)aborted;
    return FeasibilityTable(std::move(index), std::move(table));
}

bool feasible_dp(const SwapList& list, const SolveOptions& options) {
    if (!is_consistent(list)) return false;
    if (!is_non_separable(list)) return false;
    const FeasibilityTable table = compute_feasibility_table(list, options);
    return table.feasible(table.index().size() - 1);
}

std::uint32_t fpt_entry_cap(int order) {
    return static_cast<std::uint32_t>(order) * static_cast<std::uint32_t>(order) / 4 + 1;
}

SwapList fpt_truncate(const SwapList& list, std::uint32_t entry_cap) {
    const std::uint32_t cap = entry_cap > 0 ? entry_cap : fpt_entry_cap(list.order());
    if (cap < 2) throw InvalidInputError("truncation cap must be at least 2");
    SwapList out(list.order());
    for (int i = 1; i < list.order(); ++i)
        for (int j = i + 1; j <= list.order(); ++j) {
            const std::uint32_t m = list.get(i, j);
            if (m <= cap)
                out.set(i, j, m);
            else
                out.set(i, j, m % 2 == cap % 2 ? cap : cap - 1);
        }
    return out;
}

bool feasible_fpt(const SwapList& list, const SolveOptions& options) {
    if (!is_consistent(list)) return false;
    if (!is_non_separable(list)) return false;
    if (list.length() == 0) return true; // only the empty sublist matches the empty type

    SublistIndex index(fpt_truncate(list), options.max_table_entries);
    // A feasible sublist of the input's type proves the input feasible; the
    // truncation keeps parities, so such a sublist survives it.
    auto [table, found] =
        feasibility_sweep(index, [&](std::uint64_t, const std::vector<std::uint32_t>& digits) {
            for (int k = 0; k < index.slot_count(); ++k) {
                const std::uint32_t digit = digits[static_cast<std::size_t>(k)];
                const std::uint32_t original = list.get(index.slot(k).i, index.slot(k).j);
                if (digit == 0 || digit % 2 != original % 2) return false;
            }
            return true;
        });
    (void)table;
    return found;
}

bool feasible_rich_even(const SwapList& list) {
    if (!list.is_even()) throw InvalidInputError("list is not even");
    for (const WirePair& pair : list.support())
        if (list.get(pair.first, pair.second) < static_cast<std::uint32_t>(list.order()))
            throw InvalidInputError("nonzero entries must be at least the wire count");
    return is_non_separable(list);
}

bool feasible_auto(const SwapList& list, const SolveOptions& options, FeasMethod* chosen) {
    const auto decide = [&](FeasMethod method, bool value) {
        if (chosen != nullptr) *chosen = method;
        return value;
    };

    if (!is_consistent(list)) return decide(FeasMethod::consistency_screen, false);
    if (!is_non_separable(list)) return decide(FeasMethod::separability_screen, false);
    if (list.is_simple()) return decide(FeasMethod::simple, feasible_simple(list));
    if (list.is_odd()) return decide(FeasMethod::odd, feasible_odd(list));
    if (list.is_even()) {
        bool rich = true;
        for (const WirePair& pair : list.support())
            if (list.get(pair.first, pair.second) < static_cast<std::uint32_t>(list.order()))
                rich = false;
        if (rich) return decide(FeasMethod::rich_even, feasible_rich_even(list));
    }
    if (list.max_entry() > fpt_entry_cap(list.order()))
        return decide(FeasMethod::fpt, feasible_fpt(list, options));
    return decide(FeasMethod::dp, feasible_dp(list, options));
}

} // namespace tangles
