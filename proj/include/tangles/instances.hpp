#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tangles/nae_formula.hpp"
#include "tangles/swap_list.hpp"

namespace tangles {

// The loop family: all pairs among the first n-2 wires swap once, each of
// those wires loops twice around whichever of the last two wires shares its
// parity, and the last two wires swap n-1 times. Its minimum tangle height
// is 3n-4. Requires n >= 3.
SwapList loop_list(int n);

// Every pair swaps exactly once; a realization is a pseudo-line arrangement.
SwapList complete_list(int n);

// 2^m wires labeled 0..2^m-1 externally (stored 1-based): wires i < j swap
// twice unless the bitwise OR of their labels equals j. Even, non-separable,
// and infeasible from m = 4 on.
SwapList hypercube_list(int m);

// External 0-based label of each wire of hypercube_list(m), by wire index.
std::vector<int> hypercube_labels(int m);

// Wire layout of the list produced by reduce_to_list. Groups from left to
// right: the variable blocks in descending variable order, the clause blocks
// in descending clause order, the two loop wires, seven spacer wires, and
// the primed variable blocks in ascending order.
class WireMap {
public:
    WireMap(int variable_count, int clause_count);

    int variable_count() const { return vars_; }
    int clause_count() const { return clauses_; }
    int total_wires() const { return 13 * vars_ + 13 * clauses_ + 9; }

    int loop_left() const { return 6 * vars_ + 13 * clauses_ + 1; }  // lambda
    int loop_right() const { return loop_left() + 1; }               // lambda'

    // Variable block i (1-based): fence wires alpha/alpha', five ladder
    // wires on each side, and the variable wire itself.
    int alpha(int i) const;
    int alpha_prime(int i) const;
    int beta(int i, int t) const;       // t in 1..5
    int beta_prime(int i, int t) const; // t in 1..5
    int variable(int i) const;

    // Clause block j (1-based) with per-occurrence guard and ladder wires.
    int clause(int j) const;
    int gamma(int j, int k) const;      // occurrence k in 1..3
    int psi(int j, int k, int t) const; // t in 1..3

    int spacer(int k) const; // phi_k, k in 1..7

    // Role name for every wire, for diagnostics and file comments.
    std::vector<std::pair<std::string, int>> roles() const;

private:
    int vars_ = 0;
    int clauses_ = 0;
};

// Builds the hardness-instance list for a normalized formula: a tangle
// realizes it exactly when the formula has a not-all-equal assignment. Every
// entry is at most 8. Throws InvalidInputError unless the formula is
// positive with distinct variables per clause.
std::pair<SwapList, WireMap> reduce_to_list(const NaeFormula& formula);

} // namespace tangles
