#include "tangles/permutation.hpp"

#include <bit>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace tangles {

Permutation Permutation::identity(int n) {
    if (n < 1) throw InvalidInputError("permutation size must be positive");
    Permutation p;
    p.n_ = n;
    p.pos_.resize(static_cast<std::size_t>(n) + 1);
    p.inv_.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        p.pos_[static_cast<std::size_t>(i)] = i;
        p.inv_[static_cast<std::size_t>(i)] = i;
    }
    return p;
}

Permutation Permutation::from_display(const std::vector<int>& wires) {
    const int n = static_cast<int>(wires.size());
    if (n < 1) throw InvalidInputError("permutation must have at least one wire");
    Permutation p;
    p.n_ = n;
    p.pos_.assign(static_cast<std::size_t>(n) + 1, 0);
    p.inv_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int position = 1; position <= n; ++position) {
        const int wire = wires[static_cast<std::size_t>(position - 1)];
        if (wire < 1 || wire > n) throw InvalidInputError("wire index out of range");
        if (p.pos_[static_cast<std::size_t>(wire)] != 0)
            throw InvalidInputError("duplicate wire in permutation");
        p.pos_[static_cast<std::size_t>(wire)] = position;
        p.inv_[static_cast<std::size_t>(position)] = wire;
    }
    return p;
}

Permutation Permutation::from_positions(const std::vector<int>& positions) {
    const int n = static_cast<int>(positions.size());
    if (n < 1) throw InvalidInputError("permutation must have at least one wire");
    Permutation p;
    p.n_ = n;
    p.pos_.assign(static_cast<std::size_t>(n) + 1, 0);
    p.inv_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int wire = 1; wire <= n; ++wire) {
        const int position = positions[static_cast<std::size_t>(wire - 1)];
        if (position < 1 || position > n) throw InvalidInputError("position out of range");
        if (p.inv_[static_cast<std::size_t>(position)] != 0)
            throw InvalidInputError("two wires share a position");
        p.pos_[static_cast<std::size_t>(wire)] = position;
        p.inv_[static_cast<std::size_t>(position)] = wire;
    }
    return p;
}

Permutation Permutation::parse_display(std::string_view text) {
    std::vector<int> wires;
    if (text.find(' ') == std::string_view::npos) {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InvalidInputError("bad permutation literal");
            wires.push_back(c - '0');
        }
    } else {
        std::istringstream in{std::string(text)};
        int w = 0;
        while (in >> w) wires.push_back(w);
    }
    return from_display(wires);
}

std::vector<int> Permutation::display() const {
    return std::vector<int>(inv_.begin() + 1, inv_.end());
}

std::string Permutation::display_string() const {
    std::string out;
    for (int p = 1; p <= n_; ++p) {
        if (p > 1) out += ' ';
        out += std::to_string(wire_at(p));
    }
    return out;
}

void Permutation::swap_positions(int p) {
    const int a = inv_[static_cast<std::size_t>(p)];
    const int b = inv_[static_cast<std::size_t>(p + 1)];
    std::swap(inv_[static_cast<std::size_t>(p)], inv_[static_cast<std::size_t>(p + 1)]);
    std::swap(pos_[static_cast<std::size_t>(a)], pos_[static_cast<std::size_t>(b)]);
}

Permutation Permutation::with_mask(std::uint64_t mask) const {
    Permutation out = *this;
    while (mask != 0) {
        const int bit = std::countr_zero(mask);
        mask &= mask - 1;
        out.swap_positions(bit + 1);
    }
    return out;
}

std::uint64_t Permutation::pack() const {
    if (n_ > 16) throw ResourceLimitError("permutation packing supports at most 16 wires");
    std::uint64_t key = 0;
    for (int p = n_; p >= 1; --p)
        key = (key << 4) | static_cast<std::uint64_t>(wire_at(p) - 1);
    return key;
}

Permutation Permutation::unpack(std::uint64_t key, int n) {
    std::vector<int> wires(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        wires[static_cast<std::size_t>(p)] = static_cast<int>(key & 0xF) + 1;
        key >>= 4;
    }
    return from_display(wires);
}

bool are_adjacent(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw InvalidInputError("permutations of different sizes");
    for (int wire = 1; wire <= p.size(); ++wire) {
        if (std::abs(p.pos(wire) - q.pos(wire)) > 1) return false;
    }
    return true;
}

SwapSet swap_diff(const Permutation& p, const Permutation& q) {
    if (!are_adjacent(p, q)) throw InvalidInputError("permutations are not adjacent");
    SwapSet swaps;
    for (int position = 1; position < p.size(); ++position) {
        const int a = p.wire_at(position);
        if (q.pos(a) == position + 1) {
            const int b = p.wire_at(position + 1);
            swaps.push_back(make_wire_pair(a, b));
            ++position;
        }
    }
    return swaps;
}

std::vector<std::uint64_t> disjoint_swap_masks(int n) {
    if (n < 1) throw InvalidInputError("wire count must be positive");
    const int slots = n - 1;
    if (slots > 62) throw ResourceLimitError("too many wires for mask enumeration");
    // masks[b] grows as: masks over b slots = masks over b-1 slots, then
    // (top bit | masks over b-2 slots). Keeping the full ascending list and
    // appending preserves numeric order.
    std::vector<std::uint64_t> masks{0};
    std::size_t prev_size = 1; // |masks over b-2 slots|, starts at |over 0|
    for (int b = 1; b <= slots; ++b) {
        const std::size_t cur_size = masks.size();
        const std::uint64_t top = std::uint64_t{1} << (b - 1);
        for (std::size_t k = 0; k < prev_size; ++k) masks.push_back(top | masks[k]);
        prev_size = cur_size;
    }
    masks.erase(masks.begin()); // drop the empty mask
    return masks;
}

std::vector<Permutation> neighbors(const Permutation& p) {
    std::vector<Permutation> out;
    for (std::uint64_t mask : disjoint_swap_masks(p.size())) out.push_back(p.with_mask(mask));
    return out;
}

} // namespace tangles
