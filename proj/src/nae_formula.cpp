#include "tangles/nae_formula.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <istream>
#include <sstream>

#include "tangles/errors.hpp"

namespace tangles {

bool NaeFormula::is_positive_diff() const {
    for (const auto& clause : clauses) {
        for (int literal : clause)
            if (literal <= 0) return false;
        if (clause[0] == clause[1] || clause[0] == clause[2] || clause[1] == clause[2])
            return false;
    }
    return true;
}

void NaeFormula::validate() const {
    if (var_count < 1) throw InvalidInputError("formula must have at least one variable");
    for (const auto& clause : clauses)
        for (int literal : clause) {
            if (literal == 0) throw InvalidInputError("zero literal in clause");
            if (std::abs(literal) > var_count)
                throw InvalidInputError("literal " + std::to_string(literal) +
                                        " exceeds the variable count");
        }
}

namespace {

// Lazily allocated triple of fresh variables tied together by one clause.
struct GadgetTriple {
    std::array<int, 3> vars{0, 0, 0};

    bool allocated() const { return vars[0] != 0; }
    bool contains(int v) const { return v == vars[0] || v == vars[1] || v == vars[2]; }
};

} // namespace

NaeFormula normalize_nae(const NaeFormula& input) {
    input.validate();

    NaeFormula out;
    out.var_count = input.var_count;

    bool has_negative = false;
    for (const auto& clause : input.clauses)
        for (int literal : clause)
            if (literal < 0) has_negative = true;

    std::deque<std::array<int, 3>> pending;
    if (has_negative) {
        // Positive occurrences keep their index; negated ones map to a
        // complement variable, coupled below so the two always disagree.
        const int n = input.var_count;
        out.var_count = 2 * n;
        for (auto clause : input.clauses) {
            for (int& literal : clause) literal = literal > 0 ? literal : n - literal;
            pending.push_back(clause);
        }
        for (int v = 1; v <= n; ++v) pending.push_back({v, n + v, n + v});
    } else {
        for (const auto& clause : input.clauses) pending.push_back(clause);
    }

    GadgetTriple primary;
    GadgetTriple secondary;
    const auto allocate = [&](GadgetTriple& triple) {
        for (int& v : triple.vars) v = ++out.var_count;
        out.clauses.push_back(triple.vars);
    };

    while (!pending.empty()) {
        std::array<int, 3> clause = pending.front();
        pending.pop_front();
        std::array<int, 3> sorted = clause;
        std::sort(sorted.begin(), sorted.end());

        if (sorted[0] != sorted[1] && sorted[1] != sorted[2]) {
            out.clauses.push_back(clause);
            continue;
        }
        if (sorted[0] == sorted[2]) {
            // All three literals equal: never not-all-equal. Spreading over
            // the primary triple forces that triple all-equal, so the result
            // stays unsatisfiable.
            if (!primary.allocated()) allocate(primary);
            const int z = sorted[0];
            for (int g : primary.vars) pending.push_back({z, z, g});
            continue;
        }
        // Exactly one repeated literal: demand it differs from the single
        // one by spreading the pair over a triple disjoint from both.
        const int repeated = sorted[0] == sorted[1] ? sorted[0] : sorted[2];
        const int single = sorted[0] == sorted[1] ? sorted[2] : sorted[0];
        GadgetTriple* triple = &primary;
        if (primary.allocated() && (primary.contains(repeated) || primary.contains(single)))
            triple = &secondary;
        if (!triple->allocated()) allocate(*triple);
        for (int g : triple->vars) out.clauses.push_back({repeated, single, g});
    }
    return out;
}

NaeFormula parse_nae_formula(std::istream& in) {
    NaeFormula formula;
    bool have_header = false;
    int expected_clauses = 0;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        if (first == "c") continue;
        if (first == "p") {
            std::string kind;
            if (have_header) throw ParseError("duplicate header", line_no);
            if (!(fields >> kind >> formula.var_count >> expected_clauses) || kind != "nae3sat")
                throw ParseError("expected 'p nae3sat <vars> <clauses>'", line_no);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError("clause before 'p nae3sat' header", line_no);
        std::array<int, 3> clause{};
        try {
            clause[0] = std::stoi(first);
        } catch (const std::exception&) {
            throw ParseError("expected a literal, got '" + first + "'", line_no);
        }
        int terminator = 0;
        if (!(fields >> clause[1] >> clause[2] >> terminator) || terminator != 0)
            throw ParseError("expected three literals terminated by 0", line_no);
        for (int literal : clause)
            if (literal == 0) throw ParseError("zero literal in clause", line_no);
        formula.clauses.push_back(clause);
    }
    if (!have_header) throw ParseError("missing 'p nae3sat' header");
    if (static_cast<int>(formula.clauses.size()) != expected_clauses)
        throw ParseError("header announces " + std::to_string(expected_clauses) +
                         " clauses, found " + std::to_string(formula.clauses.size()));
    formula.validate();
    return formula;
}

std::string write_nae_formula(const NaeFormula& formula) {
    std::string out = "p nae3sat " + std::to_string(formula.var_count) + " " +
                      std::to_string(formula.clauses.size()) + "\n";
    for (const auto& clause : formula.clauses) {
        out += std::to_string(clause[0]) + " " + std::to_string(clause[1]) + " " +
               std::to_string(clause[2]) + " 0\n";
    }
    return out;
}

} // namespace tangles
