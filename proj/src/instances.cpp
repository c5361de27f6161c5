#include "tangles/instances.hpp"

#include <stdexcept>

#include "tangles/errors.hpp"

namespace tangles {

SwapList loop_list(int n) {
    if (n < 3) throw InvalidInputError("loop list needs at least 3 wires");
    SwapList list(n);
    for (int i = 1; i <= n - 2; ++i)
        for (int j = i + 1; j <= n - 2; ++j) list.set(i, j, 1);
    for (int i = 1; i <= n - 2; ++i) {
        const int partner = (i % 2 == (n - 1) % 2) ? n - 1 : n;
        list.set(i, partner, 2);
    }
    list.set(n - 1, n, static_cast<std::uint32_t>(n - 1));
    return list;
}

SwapList complete_list(int n) {
    SwapList list(n);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) list.set(i, j, 1);
    return list;
}

SwapList hypercube_list(int m) {
    if (m < 1) throw InvalidInputError("hypercube list needs m >= 1");
    if (m > 12) throw ResourceLimitError("hypercube list above m = 12 does not fit in memory");
    const int count = 1 << m;
    SwapList list(count);
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if ((i | j) != j) list.set(i + 1, j + 1, 2);
    return list;
}

std::vector<int> hypercube_labels(int m) {
    if (m < 1) throw InvalidInputError("hypercube list needs m >= 1");
    std::vector<int> labels(static_cast<std::size_t>(1) << m);
    for (std::size_t w = 0; w < labels.size(); ++w) labels[w] = static_cast<int>(w);
    return labels;
}

WireMap::WireMap(int variable_count, int clause_count)
    : vars_(variable_count), clauses_(clause_count) {
    if (variable_count < 1 || clause_count < 1)
        throw InvalidInputError("wire map needs at least one variable and one clause");
}

// Variable blocks sit leftmost in descending variable order; block i holds
// beta(i,5) .. beta(i,1) then alpha(i).
int WireMap::alpha(int i) const { return (vars_ - i) * 6 + 6; }
int WireMap::beta(int i, int t) const { return (vars_ - i) * 6 + (6 - t); }

// Clause blocks follow in descending clause order; block j holds the
// occurrence groups for k = 3, 2, 1 (each psi(k,3..1) then gamma(k)) and the
// clause wire last.
int WireMap::clause(int j) const { return 6 * vars_ + (clauses_ - j) * 13 + 13; }
int WireMap::gamma(int j, int k) const {
    return 6 * vars_ + (clauses_ - j) * 13 + (3 - k) * 4 + 4;
}
int WireMap::psi(int j, int k, int t) const {
    return 6 * vars_ + (clauses_ - j) * 13 + (3 - k) * 4 + (4 - t);
}

int WireMap::spacer(int k) const { return 6 * vars_ + 13 * clauses_ + 2 + k; }

// Primed variable blocks sit rightmost in ascending order; block i holds
// alpha_prime(i), beta_prime(i,1..5), then the variable wire.
int WireMap::alpha_prime(int i) const { return 6 * vars_ + 13 * clauses_ + 9 + (i - 1) * 7 + 1; }
int WireMap::beta_prime(int i, int t) const {
    return 6 * vars_ + 13 * clauses_ + 9 + (i - 1) * 7 + 1 + t;
}
int WireMap::variable(int i) const { return 6 * vars_ + 13 * clauses_ + 9 + (i - 1) * 7 + 7; }

std::vector<std::pair<std::string, int>> WireMap::roles() const {
    std::vector<std::pair<std::string, int>> out;
    const auto name = [](const std::string& base, int a, int b = 0, int c = 0) {
        std::string s = base + "(" + std::to_string(a);
        if (b > 0) s += "," + std::to_string(b);
        if (c > 0) s += "," + std::to_string(c);
        return s + ")";
    };
    for (int i = 1; i <= vars_; ++i) {
        for (int t = 1; t <= 5; ++t) out.emplace_back(name("beta", i, t), beta(i, t));
        out.emplace_back(name("alpha", i), alpha(i));
        out.emplace_back(name("alpha'", i), alpha_prime(i));
        for (int t = 1; t <= 5; ++t) out.emplace_back(name("beta'", i, t), beta_prime(i, t));
        out.emplace_back(name("v", i), variable(i));
    }
    for (int j = 1; j <= clauses_; ++j) {
        out.emplace_back(name("c", j), clause(j));
        for (int k = 1; k <= 3; ++k) {
            out.emplace_back(name("gamma", j, k), gamma(j, k));
            for (int t = 1; t <= 3; ++t) out.emplace_back(name("psi", j, k, t), psi(j, k, t));
        }
    }
    out.emplace_back("lambda", loop_left());
    out.emplace_back("lambda'", loop_right());
    for (int k = 1; k <= 7; ++k) out.emplace_back(name("phi", k), spacer(k));
    return out;
}

std::pair<SwapList, WireMap> reduce_to_list(const NaeFormula& formula) {
    formula.validate();
    if (!formula.is_positive_diff())
        throw InvalidInputError("reduction needs a normalized formula "
                                "(positive literals, distinct variables per clause)");
    if (formula.clauses.empty()) throw InvalidInputError("formula has no clauses");

    const int n = formula.var_count;
    const int m = static_cast<int>(formula.clauses.size());
    WireMap map(n, m);
    SwapList list(map.total_wires());

    // Every rule below owns its wire pairs exclusively; a second write to the
    // same pair means the schedule itself is wrong.
    const auto put = [&list](int a, int b, std::uint32_t mult) {
        if (list.get(a, b) != 0) throw std::logic_error("reduction schedule overlap");
        list.set(a, b, mult);
    };

    const int lam = map.loop_left();
    const int lam_p = map.loop_right();
    put(lam, lam_p, 8);

    // Variable gadgets: the variable wire visits the loops on the lambda
    // side only; the alpha fences cross both loop wires twice; the beta
    // ladders pin down how many loops lie beyond each fence.
    for (int i = 1; i <= n; ++i) {
        put(map.variable(i), lam, 4);
        put(map.alpha(i), lam, 2);
        put(map.alpha(i), lam_p, 2);
        put(map.alpha_prime(i), lam, 2);
        put(map.alpha_prime(i), lam_p, 2);
        for (int t = 1; t <= 5; ++t)
            for (int u = t + 1; u <= 5; ++u) {
                put(map.beta(i, t), map.beta(i, u), 1);
                put(map.beta_prime(i, t), map.beta_prime(i, u), 1);
            }
        for (int t = 1; t <= 5; ++t) put(map.beta_prime(i, t), map.variable(i), 4);
        for (int t : {1, 3, 5}) put(map.beta(i, t), lam, 2);
        for (int t : {2, 4}) put(map.beta(i, t), lam_p, 2);
        for (int t : {2, 4}) put(map.beta_prime(i, t), lam, 2);
        for (int t : {1, 3, 5}) put(map.beta_prime(i, t), lam_p, 2);
    }

    // Later variable gadgets pass through earlier ones: fences cross whole
    // blocks twice, ladders four times, variable wires six times.
    for (int i = 1; i <= n; ++i) {
        std::vector<int> block;       // V_i
        std::vector<int> block_prime; // V'_i
        for (int t = 1; t <= 5; ++t) block.push_back(map.beta(i, t));
        block.push_back(map.alpha(i));
        block_prime.push_back(map.alpha_prime(i));
        for (int t = 1; t <= 5; ++t) block_prime.push_back(map.beta_prime(i, t));
        block_prime.push_back(map.variable(i));

        for (int j = i + 1; j <= n; ++j) {
            for (int w : block) {
                put(map.alpha(j), w, 2);
                put(map.alpha_prime(j), w, 2);
                for (int t = 1; t <= 5; ++t) put(map.beta(j, t), w, 4);
            }
            for (int w : block_prime) {
                put(map.alpha(j), w, 2);
                put(map.alpha_prime(j), w, 2);
                for (int t = 1; t <= 5; ++t) put(map.beta_prime(j, t), w, 4);
                // Uniformly six with the whole primed block: the variable
                // wire must be able to reach both loops of either polarity
                // across it. Not four as for the ladder wires.
                put(map.variable(j), w, 6);
            }
            for (int t = 1; t <= 5; ++t) put(map.beta(j, t), map.alpha_prime(i), 4);
            for (int t = 1; t <= 5; ++t) put(map.beta_prime(j, t), map.alpha(i), 4);
            put(map.variable(j), map.alpha(i), 6);
        }
    }

    // The spacer ladder: odd spacers dip to the lambda side and meet every
    // clause and guard wire, even spacers stay on the lambda' side.
    for (int k = 1; k <= 7; ++k)
        for (int l = k + 1; l <= 7; ++l) put(map.spacer(k), map.spacer(l), 1);
    for (int k : {1, 3, 5, 7}) put(map.spacer(k), lam, 2);
    for (int k : {2, 4, 6}) put(map.spacer(k), lam_p, 2);

    // Clause gadgets.
    for (int j = 1; j <= m; ++j) {
        put(map.clause(j), lam_p, 8);
        for (int k : {1, 3, 5, 7}) put(map.spacer(k), map.clause(j), 2);
        for (int k = 1; k <= 3; ++k) {
            const int var_wire = map.variable(formula.clauses[static_cast<std::size_t>(j - 1)]
                                                             [static_cast<std::size_t>(k - 1)]);
            put(map.gamma(j, k), lam_p, 8);
            put(map.gamma(j, k), map.clause(j), 2);
            // The guarded arm is reachable only across the guard itself, so
            // the occurrence's variable wire crosses it in and out.
            put(map.gamma(j, k), var_wire, 2);
            for (int l : {1, 3, 5, 7}) put(map.spacer(l), map.gamma(j, k), 2);
            for (int t = 1; t <= 3; ++t)
                for (int u = t + 1; u <= 3; ++u) put(map.psi(j, k, t), map.psi(j, k, u), 1);
            put(map.psi(j, k, 1), map.clause(j), 2);
            put(map.psi(j, k, 3), map.clause(j), 2);
            put(map.psi(j, k, 2), lam_p, 2);
            put(map.psi(j, k, 2), var_wire, 2);
            put(var_wire, map.clause(j), 2);
        }
        // Occurrence groups of one clause stay mutually flexible.
        for (int k = 1; k <= 3; ++k)
            for (int l = k + 1; l <= 3; ++l) {
                put(map.gamma(j, k), map.gamma(j, l), 2);
                for (int t = 1; t <= 3; ++t)
                    for (int u = 1; u <= 3; ++u) put(map.psi(j, k, t), map.psi(j, l, u), 2);
                for (int u = 1; u <= 3; ++u) {
                    put(map.gamma(j, k), map.psi(j, l, u), 4);
                    put(map.gamma(j, l), map.psi(j, k, u), 4);
                }
            }
    }

    // Later clause blocks pass through earlier ones.
    for (int i = 1; i <= m; ++i) {
        std::vector<int> block{map.clause(i)}; // C_i
        for (int k = 1; k <= 3; ++k) {
            block.push_back(map.gamma(i, k));
            for (int t = 1; t <= 3; ++t) block.push_back(map.psi(i, k, t));
        }
        for (int j = i + 1; j <= m; ++j)
            for (int w : block) {
                put(map.clause(j), w, 8);
                for (int k = 1; k <= 3; ++k) {
                    put(map.gamma(j, k), w, 8);
                    for (int t = 1; t <= 3; ++t) put(map.psi(j, k, t), w, 2);
                }
            }
    }

    // Clause blocks versus variable gadgets, and the spacers' passage
    // through the primed blocks.
    for (int j = 1; j <= m; ++j) {
        std::vector<int> block{map.clause(j)};
        for (int k = 1; k <= 3; ++k) {
            block.push_back(map.gamma(j, k));
            for (int t = 1; t <= 3; ++t) block.push_back(map.psi(j, k, t));
        }
        for (int w : block)
            for (int i = 1; i <= n; ++i) {
                for (int t = 1; t <= 5; ++t) put(w, map.beta(i, t), 2);
                put(w, map.alpha(i), 2);
                put(w, map.alpha_prime(i), 2);
            }
    }
    for (int k = 1; k <= 7; ++k)
        for (int i = 1; i <= n; ++i) {
            put(map.spacer(k), map.alpha(i), 2);
            put(map.spacer(k), map.alpha_prime(i), 2);
            for (int t = 1; t <= 5; ++t) put(map.spacer(k), map.beta_prime(i, t), 2);
            put(map.spacer(k), map.variable(i), 4);
        }

    return {std::move(list), std::move(map)};
}

} // namespace tangles
