#include "tangles/heightmin.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <unordered_map>

#include "tangles/errors.hpp"

namespace tangles {

Tangle connect_odd_even(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw InvalidInputError("permutations of different sizes");
    const int n = p.size();

    std::vector<Permutation> layers{p};
    Permutation cur = p;
    auto sorted = [&] {
        for (int position = 1; position < n; ++position)
            if (q.pos(cur.wire_at(position)) > q.pos(cur.wire_at(position + 1))) return false;
        return true;
    };

    for (int round = 1; !sorted(); ++round) {
        assert(round <= n); // odd-even rounds sort within n passes
        Permutation next = cur;
        for (int position = (round % 2 == 1) ? 1 : 2; position + 1 <= n; position += 2) {
            if (q.pos(next.wire_at(position)) > q.pos(next.wire_at(position + 1)))
                next.swap_positions(position);
        }
        layers.push_back(next);
        cur = next;
    }
    return Tangle(std::move(layers));
}

std::optional<Tangle> min_height_bfs(const SwapList& list, const SolveOptions& options) {
    if (!list.is_simple()) throw InvalidInputError("list is not simple");
    if (!is_consistent(list)) throw InvalidInputError("list is not consistent");
    const int n = list.order();
    if (n > 16) throw ResourceLimitError("breadth-first search supports at most 16 wires");

    const Permutation id = Permutation::identity(n);
    const Permutation target = final_permutation(list);
    const std::uint64_t start = id.pack();
    const std::uint64_t goal = target.pack();

    const std::vector<std::uint64_t> masks = disjoint_swap_masks(n);
    std::unordered_map<std::uint64_t, std::uint64_t> parent; // pack -> predecessor pack
    parent.emplace(start, start);
    std::deque<std::uint64_t> queue{start};

    while (!queue.empty() && parent.find(goal) == parent.end()) {
        const std::uint64_t pack = queue.front();
        queue.pop_front();
        const Permutation perm = Permutation::unpack(pack, n);

        for (std::uint64_t mask : masks) {
            bool allowed = true;
            for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
                const int position = std::countr_zero(bits) + 1;
                const int a = perm.wire_at(position);
                const int b = perm.wire_at(position + 1);
                // The step may only create inversions the list still owes:
                // the pair must be in natural order here and swapped in the list.
                if (a > b || list.get(a, b) != 1) {
                    allowed = false;
                    break;
                }
            }
            if (!allowed) continue;
            const std::uint64_t next = perm.with_mask(mask).pack();
            if (parent.emplace(next, pack).second) {
                if (parent.size() > options.max_table_entries)
                    throw ResourceLimitError("breadth-first search exceeds the table cap");
                queue.push_back(next);
            }
        }
    }

    if (parent.find(goal) == parent.end()) return std::nullopt;
    std::vector<Permutation> layers;
    for (std::uint64_t at = goal;; at = parent.at(at)) {
        layers.push_back(Permutation::unpack(at, n));
        if (at == parent.at(at)) break;
    }
    std::reverse(layers.begin(), layers.end());
    return Tangle(std::move(layers));
}

HeightTable compute_height_table(const SwapList& list, const SolveOptions& options) {
    const int n = list.order();
    if (n > 32) throw ResourceLimitError("height table supports at most 32 wires");
    SublistIndex index(list, options.max_table_entries);
    const std::uint64_t size = index.size();
    const int slot_count = index.slot_count();

    std::vector<std::uint32_t> heights(size, HeightTable::infinite);
    std::vector<std::uint32_t> back_masks(size, 0);
    const std::vector<std::uint64_t> masks = disjoint_swap_masks(n);

    std::vector<std::uint32_t> digits(static_cast<std::size_t>(slot_count), 0);
    std::vector<int> fp(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> inv(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint64_t> seen(static_cast<std::size_t>(n) + 1, UINT64_MAX);

    for (std::uint64_t key = 0; key < size; ++key) {
        if (key > 0) {
            // Odometer step from the previous key.
            for (int k = 0; k < slot_count; ++k) {
                std::uint32_t& digit = digits[static_cast<std::size_t>(k)];
                if (digit < index.slot(k).mult) {
                    ++digit;
                    break;
                }
                digit = 0;
            }
        }
        if (key == 0) {
            heights[0] = 1;
            continue;
        }

        // Final positions of the sublist, then the consistency screen.
        for (int wire = 1; wire <= n; ++wire) fp[static_cast<std::size_t>(wire)] = wire;
        for (int k = 0; k < slot_count; ++k) {
            if (digits[static_cast<std::size_t>(k)] % 2 == 0) continue;
            const auto& slot = index.slot(k);
            ++fp[static_cast<std::size_t>(slot.i)];
            --fp[static_cast<std::size_t>(slot.j)];
        }
        bool consistent = true;
        for (int wire = 1; wire <= n && consistent; ++wire) {
            const int position = fp[static_cast<std::size_t>(wire)];
            if (position < 1 || position > n || seen[static_cast<std::size_t>(position)] == key)
                consistent = false;
            else {
                seen[static_cast<std::size_t>(position)] = key;
                inv[static_cast<std::size_t>(position)] = wire;
            }
        }
        if (!consistent) continue;

        // Minimize over the last step's disjoint swap sets on the final layer.
        std::uint32_t best = HeightTable::infinite;
        std::uint32_t best_mask = 0;
        for (std::uint64_t mask : masks) {
            std::uint64_t child = key;
            bool applicable = true;
            for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
                const int position = std::countr_zero(bits) + 1;
                const int k = index.slot_of(inv[static_cast<std::size_t>(position)],
                                            inv[static_cast<std::size_t>(position + 1)]);
                if (k < 0 || digits[static_cast<std::size_t>(k)] == 0) {
                    applicable = false;
                    break;
                }
                child -= index.slot(k).stride;
            }
            if (!applicable) continue;
            const std::uint32_t below = heights[child];
            if (below != HeightTable::infinite && below + 1 < best) {
                best = below + 1;
                best_mask = static_cast<std::uint32_t>(mask);
            }
        }
        heights[key] = best;
        back_masks[key] = best_mask;
    }

    return HeightTable(std::move(index), std::move(heights), std::move(back_masks));
}

namespace {

// Walks the chosen last steps back from the full list down to the empty one.
Tangle reconstruct_witness(const HeightTable& table) {
    const SublistIndex& index = table.index();
    std::uint64_t key = index.size() - 1;
    Permutation layer = final_permutation(index.root());

    std::vector<Permutation> layers{layer};
    while (key != 0) {
        const std::uint64_t mask = table.back_mask(key);
        for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
            const int position = std::countr_zero(bits) + 1;
            const int k = index.slot_of(layer.wire_at(position), layer.wire_at(position + 1));
            key -= index.slot(k).stride;
        }
        layer = layer.with_mask(mask);
        layers.push_back(layer);
    }
    std::reverse(layers.begin(), layers.end());
    return Tangle(std::move(layers));
}

struct Block {
    int from = 0; // first wire, inclusive
    int to = 0;   // last wire, inclusive
};

SwapList restrict_to_block(const SwapList& list, const Block& block) {
    SwapList out(block.to - block.from + 1);
    for (int i = block.from; i < block.to; ++i)
        for (int j = i + 1; j <= block.to; ++j)
            out.set(i - block.from + 1, j - block.from + 1, list.get(i, j));
    return out;
}

} // namespace

MinHeightResult min_height_dp(const SwapList& list, const SolveOptions& options) {
    const int n = list.order();

    std::vector<char> in_swap(static_cast<std::size_t>(n) + 1, 0);
    for (const WirePair& pair : list.support()) {
        in_swap[static_cast<std::size_t>(pair.first)] = 1;
        in_swap[static_cast<std::size_t>(pair.second)] = 1;
    }
    // A wire that never swaps pins every other wire to its side; a swap
    // across it cannot be realized.
    for (const WirePair& pair : list.support())
        for (int k = pair.first + 1; k < pair.second; ++k)
            if (!in_swap[static_cast<std::size_t>(k)]) return {};

    std::vector<Block> blocks;
    for (int wire = 1; wire <= n; ++wire) {
        if (!in_swap[static_cast<std::size_t>(wire)]) {
            blocks.push_back({wire, wire});
        } else {
            if (blocks.empty() || blocks.back().to != wire - 1 ||
                !in_swap[static_cast<std::size_t>(blocks.back().to)])
                blocks.push_back({wire, wire});
            else
                blocks.back().to = wire;
        }
    }

    std::vector<Tangle> parts;
    std::uint64_t height = 1;
    for (const Block& block : blocks) {
        if (block.from == block.to) {
            parts.push_back(Tangle::single(Permutation::identity(1)));
            continue;
        }
        const HeightTable table = compute_height_table(restrict_to_block(list, block), options);
        const std::uint32_t block_height = table.height(table.index().size() - 1);
        if (block_height == HeightTable::infinite) return {};
        parts.push_back(reconstruct_witness(table));
        height = std::max<std::uint64_t>(height, block_height);
    }

    // Rejoin the blocks side by side, repeating final layers where a block
    // finishes early.
    std::vector<Permutation> layers;
    for (std::uint64_t t = 1; t <= height; ++t) {
        std::vector<int> display;
        display.reserve(static_cast<std::size_t>(n));
        for (std::size_t b = 0; b < parts.size(); ++b) {
            const Tangle& part = parts[b];
            const int local = static_cast<int>(std::min<std::uint64_t>(t, part.height()));
            const int offset = blocks[b].from - 1;
            for (int wire : part.layer(local).display()) display.push_back(wire + offset);
        }
        layers.push_back(Permutation::from_display(display));
    }

    MinHeightResult result;
    result.height = height;
    result.witness = Tangle(std::move(layers));
    return result;
}

Tangle shorten(const Tangle& t, const std::vector<int>& keep) {
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.empty() || kept.front() != 1 || kept.back() != t.height())
        throw InvalidInputError("kept layers must include the first and last layer");
    for (int index : kept)
        if (index < 1 || index > t.height()) throw InvalidInputError("kept layer out of range");

    for (const WirePair& pair : tangle_list(t).support()) {
        bool witnessed = false;
        for (int index : kept) {
            const Permutation& layer = t.layer(index);
            if (layer.pos(pair.second) < layer.pos(pair.first)) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed)
            throw InvalidInputError("no kept layer witnesses swap (" +
                                    std::to_string(pair.first) + "," +
                                    std::to_string(pair.second) + ")");
    }

    std::vector<Permutation> layers{t.first()};
    for (std::size_t k = 0; k + 1 < kept.size(); ++k) {
        const Tangle segment = connect_odd_even(t.layer(kept[k]), t.layer(kept[k + 1]));
        for (int i = 2; i <= segment.height(); ++i) layers.push_back(segment.layer(i));
    }
    return Tangle(std::move(layers));
}

} // namespace tangles
