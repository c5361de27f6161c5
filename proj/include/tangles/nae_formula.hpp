#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace tangles {

// A not-all-equal 3-SAT formula. Literals are signed 1-based variable
// indices; a clause is satisfied when its three literals do not all share
// one truth value.
struct NaeFormula {
    int var_count = 0;
    std::vector<std::array<int, 3>> clauses;

    // All literals positive and the three variables of every clause distinct.
    bool is_positive_diff() const;

    // Throws InvalidInputError on empty/zero/out-of-range literals.
    void validate() const;
};

// Rewrites a formula into an equivalent one with only positive literals and
// three distinct variables per clause. Negated occurrences get a complement
// variable forced by a coupling clause; clauses with repeated literals are
// spread over a fresh variable triple. Input without negations or repeats
// passes through unchanged.
NaeFormula normalize_nae(const NaeFormula& input);

// Text format: header "p nae3sat <vars> <clauses>", then one clause per line
// as three nonzero integers followed by 0. Lines starting with 'c' are
// comments.
NaeFormula parse_nae_formula(std::istream& in);
std::string write_nae_formula(const NaeFormula& formula);

} // namespace tangles
