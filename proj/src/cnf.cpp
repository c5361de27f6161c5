#include "tangles/cnf.hpp"

#include <ostream>
#include <vector>

#include "tangles/errors.hpp"

namespace tangles {

namespace {

// Clause buffer: literals with 0 terminating each clause.
class ClauseBuffer {
public:
    explicit ClauseBuffer(std::uint64_t max_clauses) : max_clauses_(max_clauses) {}

    void add(std::initializer_list<int> literals) {
        for (int literal : literals) data_.push_back(literal);
        data_.push_back(0);
        if (++count_ > max_clauses_)
            throw ResourceLimitError("CNF would exceed the clause cap of " +
                                     std::to_string(max_clauses_));
    }

    std::uint64_t count() const { return count_; }

    void write(std::ostream& out) const {
        std::string chunk;
        for (int literal : data_) {
            if (literal == 0) {
                chunk += "0\n";
                if (chunk.size() > 1 << 20) {
                    out << chunk;
                    chunk.clear();
                }
            } else {
                chunk += std::to_string(literal);
                chunk += ' ';
            }
        }
        out << chunk;
    }

private:
    std::uint64_t max_clauses_;
    std::uint64_t count_ = 0;
    std::vector<int> data_;
};

} // namespace

CnfStats export_cnf(const SwapList& list, std::uint64_t height, std::ostream& out,
                    const CnfOptions& options) {
    if (height < 1) throw InvalidInputError("height must be at least 1");
    const int n = list.order();
    const std::uint64_t h = height;
    const std::uint64_t steps = h - 1;
    const std::uint64_t pair_count = static_cast<std::uint64_t>(n) * (n - 1) / 2;

    // Variable layout, all 1-based and contiguous.
    const std::uint64_t base_pos = 0;                                   // pos[t][w][p]
    const std::uint64_t base_gt = base_pos + h * n * n;                 // gt[t][w][p], p < n
    const std::uint64_t base_left = base_gt + h * n * (n - 1);          // left[t][pair]
    const std::uint64_t base_swp = base_left + h * pair_count;          // swp[t][pair]
    std::uint64_t next_var = base_swp + steps * pair_count + 1;         // first counter id

    const auto pos_var = [&](std::uint64_t t, int w, int p) {
        return static_cast<int>(base_pos + ((t - 1) * n + (w - 1)) * n + p);
    };
    const auto gt_var = [&](std::uint64_t t, int w, int p) {
        return static_cast<int>(base_gt + ((t - 1) * n + (w - 1)) * (n - 1) + p);
    };
    std::vector<int> pair_id(static_cast<std::size_t>(n) * n, -1);
    {
        int id = 0;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                pair_id[static_cast<std::size_t>(i - 1) * n + (j - 1)] = id++;
            }
    }
    const auto left_var = [&](std::uint64_t t, int i, int j) {
        return static_cast<int>(base_left + (t - 1) * pair_count +
                                pair_id[static_cast<std::size_t>(i - 1) * n + (j - 1)] + 1);
    };
    const auto swp_var = [&](std::uint64_t t, int i, int j) {
        return static_cast<int>(base_swp + (t - 1) * pair_count +
                                pair_id[static_cast<std::size_t>(i - 1) * n + (j - 1)] + 1);
    };

    if (next_var > INT32_MAX / 2)
        throw ResourceLimitError("CNF would need too many variables");

    ClauseBuffer clauses(options.max_clauses);

    // First layer is the identity.
    for (int w = 1; w <= n; ++w) clauses.add({pos_var(1, w, w)});
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) clauses.add({left_var(1, i, j)});

    for (std::uint64_t t = 1; t <= h; ++t) {
        for (int w = 1; w <= n; ++w) {
            // Order-encoded position: gt[p] means "right of position p",
            // chained downward, channeled to the one-hot pos variables.
            for (int p = 1; p + 1 <= n - 1; ++p)
                clauses.add({-gt_var(t, w, p + 1), gt_var(t, w, p)});
            for (int p = 1; p <= n; ++p) {
                const int at = pos_var(t, w, p);
                if (p == 1) {
                    if (n > 1) {
                        clauses.add({-at, -gt_var(t, w, 1)});
                        clauses.add({at, gt_var(t, w, 1)});
                    } else {
                        clauses.add({at});
                    }
                } else if (p == n) {
                    clauses.add({-at, gt_var(t, w, n - 1)});
                    clauses.add({at, -gt_var(t, w, n - 1)});
                } else {
                    clauses.add({-at, gt_var(t, w, p - 1)});
                    clauses.add({-at, -gt_var(t, w, p)});
                    clauses.add({at, -gt_var(t, w, p - 1), gt_var(t, w, p)});
                }
            }
        }
        // No two wires share a position.
        for (int p = 1; p <= n; ++p)
            for (int a = 1; a < n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    clauses.add({-pos_var(t, a, p), -pos_var(t, b, p)});

        // Relative order from the order encoding.
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const int lv = left_var(t, i, j);
                for (int p = 1; p <= n; ++p) {
                    if (p < n) {
                        clauses.add({-pos_var(t, i, p), -gt_var(t, j, p), lv});
                        clauses.add({-pos_var(t, i, p), gt_var(t, j, p), -lv});
                    } else {
                        clauses.add({-pos_var(t, i, n), -lv});
                    }
                }
            }
    }

    // Between layers a wire moves at most one position.
    for (std::uint64_t t = 1; t <= steps; ++t)
        for (int w = 1; w <= n; ++w)
            for (int p = 1; p <= n; ++p) {
                if (p == 1 && p == n)
                    clauses.add({-pos_var(t, w, p), pos_var(t + 1, w, p)});
                else if (p == 1)
                    clauses.add({-pos_var(t, w, p), pos_var(t + 1, w, 1), pos_var(t + 1, w, 2)});
                else if (p == n)
                    clauses.add({-pos_var(t, w, p), pos_var(t + 1, w, n - 1), pos_var(t + 1, w, n)});
                else
                    clauses.add({-pos_var(t, w, p), pos_var(t + 1, w, p - 1), pos_var(t + 1, w, p),
                                 pos_var(t + 1, w, p + 1)});
            }

    // Order flips: pairs that never swap keep their order; for the others a
    // flip variable marks each step where the order changes.
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const bool swaps = list.get(i, j) > 0;
            for (std::uint64_t t = 1; t <= steps; ++t) {
                const int before = left_var(t, i, j);
                const int after = left_var(t + 1, i, j);
                if (!swaps) {
                    clauses.add({-before, after});
                    clauses.add({before, -after});
                } else {
                    const int flip = swp_var(t, i, j);
                    clauses.add({-before, after, flip});
                    clauses.add({before, -after, flip});
                    clauses.add({-before, -after, -flip});
                    clauses.add({before, after, -flip});
                }
            }
        }

    // Exactly l_ij flips per pair, by a sequential counter over the steps.
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const std::uint64_t target = list.get(i, j);
            if (target == 0) continue;
            if (target > steps) {
                clauses.add({}); // more swaps than steps: unsatisfiable
                continue;
            }
            // reg[t][k] (k <= min(t, target)) says "at least k flips in the
            // first t steps"; reg[t-1][target] forbids further flips.
            std::vector<std::vector<int>> reg(steps + 1);
            for (std::uint64_t t = 1; t <= steps; ++t) {
                const std::uint64_t top = std::min<std::uint64_t>(t, target);
                reg[t].assign(top + 1, 0);
                for (std::uint64_t k = 1; k <= top; ++k)
                    reg[t][k] = static_cast<int>(next_var++);
            }
            for (std::uint64_t t = 1; t <= steps; ++t) {
                const int flip = swp_var(t, i, j);
                for (std::uint64_t k = 1; k < reg[t].size(); ++k) {
                    const int cur = reg[t][k];
                    const int carry = (t >= 2 && k < reg[t - 1].size()) ? reg[t - 1][k] : 0;
                    const int below = k == 1 ? -1 : (t >= 2 && k - 1 < reg[t - 1].size())
                                                        ? reg[t - 1][k - 1]
                                                        : 0;
                    // cur <-> carry | (below & flip); below = true when k = 1,
                    // and absent registers are false.
                    if (below == 0) {
                        // cur <-> carry (flip cannot raise the count to k here)
                        if (carry == 0) {
                            clauses.add({-cur});
                        } else {
                            clauses.add({-carry, cur});
                            clauses.add({carry, -cur});
                        }
                    } else if (below == -1) {
                        if (carry == 0) {
                            clauses.add({-flip, cur});
                            clauses.add({flip, -cur});
                        } else {
                            clauses.add({-carry, cur});
                            clauses.add({-flip, cur});
                            clauses.add({-cur, carry, flip});
                        }
                    } else {
                        if (carry == 0) {
                            clauses.add({-below, -flip, cur});
                            clauses.add({-cur, below});
                            clauses.add({-cur, flip});
                        } else {
                            clauses.add({-carry, cur});
                            clauses.add({-below, -flip, cur});
                            clauses.add({-cur, carry, below});
                            clauses.add({-cur, carry, flip});
                        }
                    }
                }
                // Once the target is reached no further flip may fire.
                if (t >= 2 && reg[t - 1].size() > target)
                    clauses.add({-reg[t - 1][target], -flip});
            }
            clauses.add({reg[steps][target]}); // at least target flips overall
        }

    const CnfStats stats{next_var - 1, clauses.count()};
    out << "c tangle realization: " << n << " wires, height " << h << "\n";
    out << "c pos vars 1.." << base_gt << " (layer-major, wire-major, position)\n";
    out << "c gt vars " << base_gt + 1 << ".." << base_left << ", left vars " << base_left + 1
        << ".." << base_swp << ", flip vars " << base_swp + 1 << ".." << base_swp + steps * pair_count
        << ", counters above\n";
    out << "p cnf " << stats.variables << " " << stats.clauses << "\n";
    clauses.write(out);
    return stats;
}

} // namespace tangles
