#include "tangles/swap_list.hpp"

#include <algorithm>

namespace tangles {

SwapList::SwapList(int n) : n_(n) {
    if (n < 1) throw InvalidInputError("list order must be positive");
    mult_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
}

std::size_t SwapList::slot(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_ || i == j) throw InvalidInputError("wire pair out of range");
    return static_cast<std::size_t>(i - 1) * (2 * n_ - i) / 2 + static_cast<std::size_t>(j - i - 1);
}

std::uint32_t SwapList::get(int i, int j) const {
    return mult_[slot(i, j)];
}

void SwapList::set(int i, int j, std::uint32_t mult) {
    std::uint32_t& cell = mult_[slot(i, j)];
    length_ = length_ - cell + mult;
    cell = mult;
}

void SwapList::add(int i, int j, std::int64_t delta) {
    std::uint32_t& cell = mult_[slot(i, j)];
    const std::int64_t next = static_cast<std::int64_t>(cell) + delta;
    if (next < 0) throw InvalidInputError("multiplicity would become negative");
    length_ = length_ + static_cast<std::uint64_t>(next) - cell;
    cell = static_cast<std::uint32_t>(next);
}

std::uint32_t SwapList::max_entry() const {
    std::uint32_t best = 0;
    for (std::uint32_t m : mult_) best = std::max(best, m);
    return best;
}

int SwapList::nonzero_pairs() const {
    int count = 0;
    for (std::uint32_t m : mult_)
        if (m > 0) ++count;
    return count;
}

std::vector<WirePair> SwapList::support() const {
    std::vector<WirePair> pairs;
    for (int i = 1; i < n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (get(i, j) > 0) pairs.push_back({i, j});
    return pairs;
}

bool SwapList::is_simple() const {
    return std::all_of(mult_.begin(), mult_.end(), [](std::uint32_t m) { return m <= 1; });
}

bool SwapList::is_odd() const {
    return std::all_of(mult_.begin(), mult_.end(),
                       [](std::uint32_t m) { return m == 0 || m % 2 == 1; });
}

bool SwapList::is_even() const {
    return std::all_of(mult_.begin(), mult_.end(), [](std::uint32_t m) { return m % 2 == 0; });
}

SwapList parity(const SwapList& list) {
    SwapList out(list.order());
    for (int i = 1; i < list.order(); ++i)
        for (int j = i + 1; j <= list.order(); ++j)
            out.set(i, j, list.get(i, j) % 2);
    return out;
}

SwapList type_of(const SwapList& list) {
    SwapList out(list.order());
    for (int i = 1; i < list.order(); ++i)
        for (int j = i + 1; j <= list.order(); ++j) {
            const std::uint32_t m = list.get(i, j);
            out.set(i, j, m == 0 ? 0 : (m % 2 == 1 ? 1 : 2));
        }
    return out;
}

bool extends_to(const SwapList& base, const SwapList& target) {
    if (base.order() != target.order()) throw InvalidInputError("lists of different order");
    for (int i = 1; i < base.order(); ++i)
        for (int j = i + 1; j <= base.order(); ++j) {
            const std::uint32_t b = base.get(i, j);
            const std::uint32_t t = target.get(i, j);
            if (b > t) return false;
            if (b % 2 != t % 2) return false;
            if (b == 0 && t != 0) return false;
        }
    return true;
}

std::vector<int> final_positions(const Permutation& start, const SwapList& list) {
    if (start.size() != list.order()) throw InvalidInputError("permutation and list order differ");
    const int n = list.order();
    std::vector<int> fp(static_cast<std::size_t>(n) + 1, 0);
    for (int wire = 1; wire <= n; ++wire) fp[static_cast<std::size_t>(wire)] = start.pos(wire);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (list.get(i, j) % 2 == 0) continue;
            if (start.pos(i) < start.pos(j)) {
                ++fp[static_cast<std::size_t>(i)];
                --fp[static_cast<std::size_t>(j)];
            } else {
                --fp[static_cast<std::size_t>(i)];
                ++fp[static_cast<std::size_t>(j)];
            }
        }
    return fp;
}

bool is_consistent(const SwapList& list) {
    const int n = list.order();
    const std::vector<int> fp = final_positions(Permutation::identity(n), list);
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int wire = 1; wire <= n; ++wire) {
        const int p = fp[static_cast<std::size_t>(wire)];
        if (p < 1 || p > n || seen[static_cast<std::size_t>(p)]) return false;
        seen[static_cast<std::size_t>(p)] = 1;
    }
    return true;
}

Permutation final_permutation(const SwapList& list) {
    if (!is_consistent(list)) throw InvalidInputError("list is not consistent");
    std::vector<int> fp = final_positions(Permutation::identity(list.order()), list);
    fp.erase(fp.begin());
    return Permutation::from_positions(fp);
}

SwapList inversion_list(const Permutation& p) {
    SwapList out(p.size());
    for (int i = 1; i < p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j)
            if (p.pos(i) > p.pos(j)) out.set(i, j, 1);
    return out;
}

bool is_non_separable(const SwapList& list) {
    const int n = list.order();
    for (int i = 1; i < n; ++i)
        for (int k = i + 2; k <= n; ++k) {
            if (list.get(i, k) == 0) continue;
            for (int j = i + 1; j < k; ++j)
                if (list.get(i, j) == 0 && list.get(j, k) == 0) return false;
        }
    return true;
}

} // namespace tangles
