#pragma once

#include <cstdint>
#include <vector>

#include "tangles/permutation.hpp"

namespace tangles {

// A multiset of swaps over the wires 1..n: a symmetric multiplicity matrix
// with zero diagonal, stored upper-triangular. length() is the total number
// of swaps.
class SwapList {
public:
    SwapList() = default;
    explicit SwapList(int n);

    int order() const { return n_; }

    std::uint32_t get(int i, int j) const;
    void set(int i, int j, std::uint32_t mult);
    void add(int i, int j, std::int64_t delta);

    // Sum of all multiplicities.
    std::uint64_t length() const { return length_; }

    std::uint32_t max_entry() const;
    int nonzero_pairs() const;

    // Pairs with positive multiplicity in row-major (i, j) order, i < j.
    std::vector<WirePair> support() const;

    bool is_simple() const; // every entry 0 or 1
    bool is_odd() const;    // every nonzero entry odd
    bool is_even() const;   // every entry even

    bool operator==(const SwapList& other) const = default;

private:
    std::size_t slot(int i, int j) const;

    int n_ = 0;
    std::uint64_t length_ = 0;
    std::vector<std::uint32_t> mult_;
};

// Entrywise multiplicity mod 2.
SwapList parity(const SwapList& list);

// Entrywise type: 0 for zero, 1 for odd, 2 for positive even.
SwapList type_of(const SwapList& list);

// True iff base can be turned into target by repeatedly adding two swaps to
// an already-swapping pair: same type and entrywise <=.
bool extends_to(const SwapList& base, const SwapList& target);

// Final position of every wire after applying all swaps of the list to the
// given start permutation: position plus the number of odd partners to the
// right minus the number to the left. Index 0 of the result is unused.
// Values are returned raw and need not form a permutation.
std::vector<int> final_positions(const Permutation& start, const SwapList& list);

// True iff final_positions(id, list) is a bijection of 1..n.
bool is_consistent(const SwapList& list);

// The final layer of any tangle realizing the list from the identity.
// Throws InvalidInputError if the list is not consistent.
Permutation final_permutation(const SwapList& list);

// The simple list whose swaps are the inversions of p; the unique simple
// list that takes the identity to p.
SwapList inversion_list(const Permutation& p);

// True iff every swapped pair (i, k) has a swap with some wire strictly
// between i and k. Necessary for feasibility; O(n^3).
bool is_non_separable(const SwapList& list);

} // namespace tangles
