// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/mini_dpll.hpp"
#include "tangles/cnf.hpp"
#include "tangles/feasibility.hpp"
#include "tangles/heightmin.hpp"
#include "tangles/instances.hpp"
#include "tangles/list_io.hpp"
#include "tangles/oracle.hpp"

using namespace tangles;
using testsupport::Rng;
using testsupport::SatResult;

namespace {

SwapList list_of(int n, std::initializer_list<std::array<int, 3>> entries) {
    SwapList list(n);
    for (const auto& e : entries) list.set(e[0], e[1], static_cast<std::uint32_t>(e[2]));
    return list;
}

SwapList fig1_list() { return list_of(4, {{1, 2, 1}, {1, 3, 1}, {1, 4, 1}, {2, 3, 1}}); }

bool check(bool condition, const std::string& what, std::string& detail) {
    if (!condition && detail.empty()) detail = what;
    return condition;
}

// ---- criterion bodies ---------------------------------------------------

bool fibonacci_adjacency(std::string& detail) {
    const std::size_t expected[] = {0, 1, 2, 4, 7, 12, 20, 33, 54, 88, 143, 232};
    bool ok = true;
    for (int n = 1; n <= 12; ++n) {
        const std::size_t got = neighbors(Permutation::identity(n)).size();
        ok &= check(got == expected[n - 1],
                    "n=" + std::to_string(n) + " gave " + std::to_string(got), detail);
    }
    return ok;
}

bool loop_list_optimum(std::string& detail) {
    bool ok = true;
    for (int n = 4; n <= 6; ++n) {
        const MinHeightResult result = min_height_dp(loop_list(n));
        const std::uint64_t expected = static_cast<std::uint64_t>(3 * n - 4);
        ok &= check(result.height == expected, "dp at n=" + std::to_string(n), detail);
        ok &= check(result.witness &&
                        validate_tangle(*result.witness, loop_list(n), Permutation::identity(n)).ok,
                    "witness at n=" + std::to_string(n), detail);
        if (n <= 5)
            ok &= check(oracle_min_height(loop_list(n)) == expected,
                        "oracle at n=" + std::to_string(n), detail);
    }
    return ok;
}

bool simple_characterization(std::string& detail) {
    bool ok = true;
    int checked = 0;
    for (int n = 3; n <= 4; ++n) {
        std::vector<WirePair> index;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) index.push_back({i, j});
        for (std::uint32_t bits = 0; bits < (1u << index.size()); ++bits) {
            SwapList list(n);
            for (std::size_t k = 0; k < index.size(); ++k)
                if ((bits >> k) & 1) list.set(index[k].first, index[k].second, 1);
            ok &= check(feasible_simple(list) == oracle_feasible(list),
                        "mismatch at n=" + std::to_string(n) + " bits=" + std::to_string(bits),
                        detail);
            ++checked;
        }
    }
    if (detail.empty()) detail = std::to_string(checked) + " simple lists";
    return ok;
}

bool dp_vs_oracle(std::string& detail) {
    bool ok = true;
    for (std::uint32_t code = 0; code < 64; ++code) {
        const SwapList list = list_of(3, {{1, 2, static_cast<int>(code % 4)},
                                          {1, 3, static_cast<int>(code / 4 % 4)},
                                          {2, 3, static_cast<int>(code / 16 % 4)}});
        ok &= check(feasible_dp(list) == oracle_feasible(list),
                    "order-3 code " + std::to_string(code), detail);
    }
    Rng rng(9104);
    for (int round = 0; round < 500; ++round) {
        const SwapList list = testsupport::random_list(rng, 4, 3);
        ok &= check(feasible_dp(list) == oracle_feasible(list),
                    "order-4 round " + std::to_string(round), detail);
    }
    if (detail.empty()) detail = "64 exhaustive + 500 random lists";
    return ok;
}

bool odd_equivalences(std::string& detail) {
    Rng rng(9105);
    bool ok = true;
    for (int round = 0; round < 200; ++round) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const SwapList list = testsupport::random_list_from(rng, n, {0, 1, 3});
        const bool full = feasible_dp(list);
        ok &= check(full == feasible_dp(parity(list)), "statement 2", detail);
        ok &= check(full == is_consistent(list), "statement 5", detail);
        ok &= check(full == is_consistent(parity(list)), "statement 6", detail);

        bool triples = true;        // statements 3/4/7/8 on the induced triple
        bool triples_zeroed = true; // and on the order-n zero-out
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c) {
                    SwapList induced(3);
                    induced.set(1, 2, list.get(a, b));
                    induced.set(1, 3, list.get(a, c));
                    induced.set(2, 3, list.get(b, c));
                    const bool f = feasible_dp(induced);
                    triples &= f;
                    triples &= f == feasible_dp(parity(induced));
                    triples &= f == is_consistent(induced);
                    triples &= f == is_consistent(parity(induced));

                    SwapList zeroed(n);
                    zeroed.set(a, b, list.get(a, b));
                    zeroed.set(a, c, list.get(a, c));
                    zeroed.set(b, c, list.get(b, c));
                    const bool z = feasible_dp(zeroed);
                    triples_zeroed &= z == feasible_dp(parity(zeroed));
                    triples_zeroed &= z == is_consistent(zeroed);
                    triples_zeroed &= z == is_consistent(parity(zeroed));
                }
        ok &= check(full == triples, "triple battery", detail);
        ok &= check(triples_zeroed, "zeroed triple battery", detail);
        if (full)
            ok &= check(validate_tangle(realize_odd(list), list, Permutation::identity(n)).ok,
                        "witness round " + std::to_string(round), detail);
    }
    if (detail.empty()) detail = "200 odd lists, all triples";
    return ok;
}

bool known_infeasibles(std::string& detail) {
    SwapList extended = fig1_list();
    extended.add(1, 2, 1);
    const std::vector<SwapList> culprits{list_of(3, {{1, 3, 2}}), extended};
    bool ok = true;
    int solved = 0, skipped = 0;
    for (const SwapList& list : culprits) {
        ok &= check(!feasible_dp(list), "table accepted an infeasible list", detail);
        ok &= check(!feasible_fpt(list), "truncation accepted an infeasible list", detail);
        ok &= check(!oracle_feasible(list), "oracle accepted an infeasible list", detail);
        std::ostringstream cnf;
        export_cnf(list, list.length() + 1, cnf);
        const SatResult verdict = testsupport::solve_dimacs(cnf.str());
        if (verdict == SatResult::unknown)
            ++skipped; // optional per the solver budget
        else {
            ok &= check(verdict == SatResult::unsat, "CNF satisfiable at |L|+1", detail);
            ++solved;
        }
    }
    if (detail.empty())
        detail = "2 lists rejected; CNF checks: " + std::to_string(solved) + " unsat, " +
                 std::to_string(skipped) + " skipped (optional)";
    return ok;
}

bool fpt_truncation(std::string& detail) {
    bool ok = check(fpt_entry_cap(4) == 5, "cap at n=4", detail);
    Rng rng(9107);
    for (int round = 0; round < 200; ++round) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const SwapList list = testsupport::random_list(rng, n, 6);
        ok &= check(feasible_fpt(list) == feasible_dp(list), "round " + std::to_string(round),
                    detail);
    }
    if (detail.empty()) detail = "200 random lists, cap(4)=5";
    return ok;
}

bool odd_even_connection(std::string& detail) {
    Rng rng(9108);
    bool ok = true;
    for (int round = 0; round < 1000; ++round) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Permutation p = testsupport::random_permutation(rng, n);
        const Permutation q = testsupport::random_permutation(rng, n);
        const Tangle t = connect_odd_even(p, q);
        ok &= check(t.height() <= n + 1, "height bound", detail);
        ok &= check(t.first() == p && t.last() == q, "endpoints", detail);
        ok &= check(tangle_list(t).is_simple(), "simple list", detail);
    }
    for (int round = 0; round < 100; ++round) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const SwapList list = inversion_list(testsupport::random_permutation(rng, n));
        const Tangle quick = connect_odd_even(Permutation::identity(n), final_permutation(list));
        const MinHeightResult best = min_height_dp(list);
        ok &= check(best.feasible() &&
                        static_cast<std::uint64_t>(quick.height()) <= *best.height + 1,
                    "one-more-than-optimal bound", detail);
    }
    if (detail.empty()) detail = "1000 pairs + 100 optimality gaps";
    return ok;
}

bool shortening(std::string& detail) {
    Rng rng(9109);
    bool ok = true;
    for (int round = 0; round < 200; ++round) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const Tangle t = testsupport::random_tangle(rng, n, 1 + static_cast<int>(rng() % 11));
        const SwapList list = tangle_list(t);

        // Witness set: first and last layer, one witnessing layer per swapped
        // pair, then a few random extras.
        std::vector<int> keep{1, t.height()};
        for (const WirePair& pair : list.support()) {
            bool witnessed = false;
            for (int at : keep)
                witnessed |= t.layer(at).pos(pair.second) < t.layer(at).pos(pair.first);
            if (witnessed) continue;
            for (int at = 1; at <= t.height(); ++at)
                if (t.layer(at).pos(pair.second) < t.layer(at).pos(pair.first)) {
                    keep.push_back(at);
                    break;
                }
        }
        for (int extras = static_cast<int>(rng() % 3); extras > 0; --extras)
            keep.push_back(1 + static_cast<int>(rng() % t.height()));

        const Tangle shortened = shorten(t, keep);
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        const SwapList after = tangle_list(shortened);
        ok &= check(type_of(after) == type_of(list), "type preserved", detail);
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                ok &= check(after.get(i, j) <=
                                std::min<std::uint32_t>(list.get(i, j),
                                                        static_cast<std::uint32_t>(keep.size() - 1)),
                            "entry bound", detail);
        ok &= check(validate_tangle(shortened, after, t.first()).ok, "witness validates", detail);
    }
    if (detail.empty()) detail = "200 random tangles";
    return ok;
}

bool hypercube_family(std::string& detail) {
    static const char* rows[16] = {
        "0000000000000000", "0020202020202020", "0000220022002200", "0000222022202220",
        "0000000022220000", "0000002022222020", "0000000022222200", "0000000022222220",
        "0000000000000000", "0000000000202020", "0000000000002200", "0000000000002220",
        "0000000000000000", "0000000000000020", "0000000000000000", "0000000000000000"};
    bool ok = true;
    const SwapList cube4 = hypercube_list(4);
    for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j)
            ok &= check(cube4.get(i + 1, j + 1) == (rows[i][j] == '2' ? 2u : 0u),
                        "matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ")",
                        detail);
    for (int m = 1; m <= 3; ++m)
        ok &= check(feasible_dp(hypercube_list(m)), "m=" + std::to_string(m) + " feasible", detail);
    ok &= check(oracle_feasible(hypercube_list(2)), "oracle at m=2", detail);
    for (int m = 1; m <= 5; ++m)
        ok &= check(is_non_separable(hypercube_list(m)) && hypercube_list(m).is_even(),
                    "structure at m=" + std::to_string(m), detail);

    std::ostringstream cnf;
    const CnfStats stats = export_cnf(cube4, 111, cnf);
    ok &= check(stats.clauses > 0 && cnf.str().size() > 0, "CNF export", detail);
    if (detail.empty())
        detail = "matrix + small members; m=4 CNF emitted (" + std::to_string(stats.clauses) +
                 " clauses), UNSAT check left to an external solver (optional)";
    return ok;
}

bool reduction_structure(std::string& detail) {
    Rng rng(9111);
    bool ok = true;
    for (int round = 0; round < 20; ++round) {
        const int vars = 3 + static_cast<int>(rng() % 3); // 3..5
        const int clauses = 1 + static_cast<int>(rng() % 3);
        const NaeFormula formula = testsupport::random_diff_formula(rng, vars, clauses);
        const auto [list, map] = reduce_to_list(formula);
        ok &= check(list.max_entry() == 8, "max multiplicity", detail);
        ok &= check(is_consistent(list), "consistency", detail);
        ok &= check(is_non_separable(list), "separability", detail);
        ok &= check(list.order() == 2 + 13 * vars + 7 + 13 * clauses, "wire count", detail);
        ok &= check(map.total_wires() == list.order(), "wire map size", detail);
    }
    if (detail.empty()) detail = "20 random formulas";
    return ok;
}

bool round_trips(std::string& detail) {
    bool ok = true;
    std::vector<int> wires{1, 2, 3, 4, 5};
    do {
        const Permutation p = Permutation::from_display(wires);
        const auto fp = final_positions(Permutation::identity(5), inversion_list(p));
        for (int wire = 1; wire <= 5; ++wire)
            ok &= check(fp[static_cast<std::size_t>(wire)] == p.pos(wire),
                        "inversion round trip at " + p.display_string(), detail);
    } while (std::next_permutation(wires.begin(), wires.end()));

    Rng rng(9112);
    for (int round = 0; round < 500; ++round) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Tangle t = testsupport::random_tangle(rng, n, static_cast<int>(rng() % 12));
        const auto fp = final_positions(t.first(), tangle_list(t));
        for (int wire = 1; wire <= n; ++wire)
            ok &= check(fp[static_cast<std::size_t>(wire)] == t.last().pos(wire),
                        "endpoint law round " + std::to_string(round), detail);
    }
    if (detail.empty()) detail = "120 permutations + 500 tangles";
    return ok;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double budget_seconds; // 0 = no stated budget
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "Fibonacci neighbor counts, n = 1..12", 1.0, fibonacci_adjacency},
        {2, "loop-list optimum 3n-4, n = 4..6", 60.0, loop_list_optimum},
        {3, "simple lists: feasible iff consistent (exhaustive)", 10.0, simple_characterization},
        {4, "feasibility table vs brute force", 300.0, dp_vs_oracle},
        {5, "odd-list equivalence battery", 0.0, odd_equivalences},
        {6, "known infeasible lists rejected everywhere", 0.0, known_infeasibles},
        {7, "parity-preserving truncation matches the full table", 0.0, fpt_truncation},
        {8, "odd-even connection bounds", 0.0, odd_even_connection},
        {9, "shortening bounds and type preservation", 0.0, shortening},
        {10, "hypercube family structure", 0.0, hypercube_family},
        {11, "hardness reduction structure", 0.0, reduction_structure},
        {12, "inversion-list and tangle-list round trips", 0.0, round_trips},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& error) {
            detail = std::string("exception: ") + error.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.budget_seconds > 0 && seconds >= criterion.budget_seconds) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
        }
        std::printf("[%s] criterion %2d: %s%s%s%s [%.2fs]\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.title, detail.empty() ? "" : " (", detail.c_str(),
                    detail.empty() ? "" : ")", seconds);
        if (!ok) ++failures;
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
