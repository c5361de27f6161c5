#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tangles/errors.hpp"

namespace tangles {

// An unordered pair of wires, stored as (low, high).
using WirePair = std::pair<int, int>;

inline WirePair make_wire_pair(int a, int b) {
    return a < b ? WirePair{a, b} : WirePair{b, a};
}

// A set of pairwise-disjoint swaps performed in one step, sorted by low wire.
using SwapSet = std::vector<WirePair>;

// A permutation of the wires 1..n. pos(i) is the position of wire i,
// wire_at(p) the wire occupying position p; both views are kept in sync.
// Written out as the sequence wire_at(1) .. wire_at(n).
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n);

    // Builds from the display sequence (wire_at(1), ..., wire_at(n)).
    static Permutation from_display(const std::vector<int>& wires);

    // Builds from a wire -> position map; throws if it is not a bijection.
    static Permutation from_positions(const std::vector<int>& positions);

    // Parses "2134" (single digits) or "2 1 3 4" (space separated).
    static Permutation parse_display(std::string_view text);

    int size() const { return n_; }
    int pos(int wire) const { return pos_[static_cast<std::size_t>(wire)]; }
    int wire_at(int position) const { return inv_[static_cast<std::size_t>(position)]; }

    // Display sequence wire_at(1) .. wire_at(n).
    std::vector<int> display() const;
    std::string display_string() const;

    // Swaps the wires at positions p and p+1.
    void swap_positions(int p);

    // Applies a set of position swaps given as a bitmask: bit k set means the
    // wires at positions k+1 and k+2 exchange. Bits must be pairwise
    // non-adjacent so the swaps are disjoint.
    Permutation with_mask(std::uint64_t mask) const;

    // Packs the display sequence into 4-bit nibbles; requires n <= 16.
    std::uint64_t pack() const;
    static Permutation unpack(std::uint64_t key, int n);

    bool operator==(const Permutation& other) const = default;

private:
    int n_ = 0;
    std::vector<int> pos_; // index 0 unused
    std::vector<int> inv_; // index 0 unused
};

// True iff no wire's position differs by more than one between p and q.
bool are_adjacent(const Permutation& p, const Permutation& q);

// The set of swaps by which two adjacent permutations differ.
// Throws InvalidInputError if p and q are not adjacent.
SwapSet swap_diff(const Permutation& p, const Permutation& q);

// All bitmasks over n-1 position slots with no two adjacent bits set,
// excluding the empty mask, in increasing numeric order. There are
// F(n+1) - 1 of them.
std::vector<std::uint64_t> disjoint_swap_masks(int n);

// Every permutation adjacent to p (and distinct from it), ordered by the
// numeric value of the position-swap mask that produces it.
std::vector<Permutation> neighbors(const Permutation& p);

} // namespace tangles
