#include "tangles/oracle.hpp"

#include <bit>
#include <cstdlib>
#include <deque>
#include <unordered_map>

#include "tangles/errors.hpp"
#include "tangles/sublist_index.hpp"

namespace tangles {

namespace {

struct StateKey {
    std::uint64_t perm;
    std::uint64_t remaining;

    bool operator==(const StateKey&) const = default;
};

struct StateHash {
    std::size_t operator()(const StateKey& s) const {
        std::uint64_t h = s.perm * 0x9e3779b97f4a7c15ULL;
        h ^= s.remaining + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

void check_limits(const SwapList& list, const OracleLimits& limits) {
    if (list.order() > limits.max_wires)
        throw ResourceLimitError("oracle supports at most " + std::to_string(limits.max_wires) +
                                 " wires, got " + std::to_string(list.order()));
}

} // namespace

bool oracle_feasible(const SwapList& list, const OracleLimits& limits) {
    check_limits(list, limits);
    const SublistIndex index(list, limits.max_sublists);
    const int slot_count = index.slot_count();

    Permutation cur = Permutation::identity(list.order());
    std::uint64_t cur_key = index.size() - 1; // full list
    std::vector<std::uint32_t> digits = index.digits_at(cur_key);

    std::unordered_map<StateKey, bool, StateHash> memo;

    struct Frame {
        int next_slot = 0;
        int taken_slot = -1; // move that produced this frame, undone on pop
        bool entered = false;
        bool child_true = false;
    };
    std::vector<Frame> stack;
    stack.push_back({});

    bool answer = false;
    while (!stack.empty()) {
        Frame& frame = stack.back();
        bool have_value = false;
        bool value = false;

        if (!frame.entered) {
            frame.entered = true;
            if (cur_key == 0) {
                have_value = true;
                value = true;
            } else {
                auto it = memo.find({cur.pack(), cur_key});
                if (it != memo.end()) {
                    have_value = true;
                    value = it->second;
                }
            }
        }
        if (!have_value && frame.child_true) {
            have_value = true;
            value = true;
        }

        if (!have_value) {
            int k = frame.next_slot;
            while (k < slot_count) {
                if (digits[static_cast<std::size_t>(k)] > 0) {
                    const auto& slot = index.slot(k);
                    if (std::abs(cur.pos(slot.i) - cur.pos(slot.j)) == 1) break;
                }
                ++k;
            }
            if (k == slot_count) {
                have_value = true;
                value = false;
            } else {
                frame.next_slot = k + 1;
                const auto& slot = index.slot(k);
                cur.swap_positions(std::min(cur.pos(slot.i), cur.pos(slot.j)));
                --digits[static_cast<std::size_t>(k)];
                cur_key -= slot.stride;
                stack.push_back(Frame{0, k, false, false});
                continue;
            }
        }

        memo.emplace(StateKey{cur.pack(), cur_key}, value);
        if (memo.size() > limits.max_states)
            throw ResourceLimitError("oracle state space exceeds the configured cap");
        const int taken = frame.taken_slot;
        stack.pop_back();
        if (taken >= 0) {
            const auto& slot = index.slot(taken);
            ++digits[static_cast<std::size_t>(taken)];
            cur_key += slot.stride;
            cur.swap_positions(std::min(cur.pos(slot.i), cur.pos(slot.j)));
        }
        if (stack.empty()) {
            answer = value;
        } else if (value) {
            stack.back().child_true = true;
        }
    }
    return answer;
}

std::optional<std::uint64_t> oracle_min_height(const SwapList& list, const OracleLimits& limits) {
    check_limits(list, limits);
    const SublistIndex index(list, limits.max_sublists);
    const int n = list.order();
    const std::vector<std::uint64_t> masks = disjoint_swap_masks(n);

    const Permutation id = Permutation::identity(n);
    const std::uint64_t full = index.size() - 1;
    if (full == 0) return 1; // empty list: the single-layer tangle

    std::unordered_map<StateKey, std::uint64_t, StateHash> dist;
    std::deque<StateKey> queue;
    const StateKey start{id.pack(), full};
    dist.emplace(start, 0);
    queue.push_back(start);

    while (!queue.empty()) {
        const StateKey state = queue.front();
        queue.pop_front();
        const std::uint64_t d = dist.at(state);
        const Permutation perm = Permutation::unpack(state.perm, n);
        const std::vector<std::uint32_t> digits = index.digits_at(state.remaining);

        for (std::uint64_t mask : masks) {
            std::uint64_t next_key = state.remaining;
            bool applicable = true;
            for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
                const int position = std::countr_zero(bits) + 1;
                const int a = perm.wire_at(position);
                const int b = perm.wire_at(position + 1);
                const int k = index.slot_of(a, b);
                // Disjoint position pairs give distinct slots, so one check
                // against the state's digits suffices per bit.
                if (k < 0 || digits[static_cast<std::size_t>(k)] == 0) {
                    applicable = false;
                    break;
                }
                next_key -= index.slot(k).stride;
            }
            if (!applicable) continue;
            const StateKey next{perm.with_mask(mask).pack(), next_key};
            if (next_key == 0) return d + 2; // transitions + the starting layer
            if (dist.emplace(next, d + 1).second) {
                if (dist.size() > limits.max_states)
                    throw ResourceLimitError("oracle state space exceeds the configured cap");
                queue.push_back(next);
            }
        }
    }
    return std::nullopt;
}

} // namespace tangles
