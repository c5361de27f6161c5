#include "tangles/tangle.hpp"

namespace tangles {

Tangle::Tangle(std::vector<Permutation> layers) : layers_(std::move(layers)) {
    if (layers_.empty()) throw InvalidInputError("tangle must have at least one layer");
    for (std::size_t t = 1; t < layers_.size(); ++t) {
        if (layers_[t].size() != layers_.front().size())
            throw InvalidInputError("tangle layers have mixed sizes");
        if (!are_adjacent(layers_[t - 1], layers_[t]))
            throw InvalidInputError("tangle layers " + std::to_string(t) + " and " +
                                    std::to_string(t + 1) + " are not adjacent");
    }
}

const Permutation& Tangle::layer(int index) const {
    if (index < 1 || index > height()) throw InvalidInputError("layer index out of range");
    return layers_[static_cast<std::size_t>(index - 1)];
}

Tangle Tangle::subtangle(int from, int to) const {
    if (from < 1 || to > height() || from > to) throw InvalidInputError("bad subtangle range");
    return Tangle(std::vector<Permutation>(layers_.begin() + (from - 1), layers_.begin() + to));
}

SwapList tangle_list(const Tangle& t) {
    SwapList list(t.wires());
    for (int step = 1; step < t.height(); ++step)
        for (const WirePair& swap : swap_diff(t.layer(step), t.layer(step + 1)))
            list.add(swap.first, swap.second, 1);
    return list;
}

std::string to_string(TangleValidation::Reason reason) {
    switch (reason) {
        case TangleValidation::Reason::valid: return "valid";
        case TangleValidation::Reason::start_mismatch: return "start-mismatch";
        case TangleValidation::Reason::size_mismatch: return "size-mismatch";
        case TangleValidation::Reason::not_adjacent: return "not-adjacent";
        case TangleValidation::Reason::list_mismatch: return "list-mismatch";
    }
    return "unknown";
}

TangleValidation validate_tangle(const Tangle& t, const SwapList& list, const Permutation& start) {
    TangleValidation result;
    if (t.wires() != start.size() || t.wires() != list.order()) {
        result.reason = TangleValidation::Reason::size_mismatch;
        return result;
    }
    if (!(t.first() == start)) {
        result.reason = TangleValidation::Reason::start_mismatch;
        return result;
    }
    SwapList performed(t.wires());
    for (int step = 1; step < t.height(); ++step) {
        if (!are_adjacent(t.layer(step), t.layer(step + 1))) {
            result.reason = TangleValidation::Reason::not_adjacent;
            result.layer = step;
            return result;
        }
        for (const WirePair& swap : swap_diff(t.layer(step), t.layer(step + 1)))
            performed.add(swap.first, swap.second, 1);
    }
    if (!(performed == list)) {
        result.reason = TangleValidation::Reason::list_mismatch;
        return result;
    }
    result.ok = true;
    return result;
}

} // namespace tangles
