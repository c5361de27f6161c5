#pragma once

#include <string>
#include <vector>

#include "tangles/permutation.hpp"
#include "tangles/swap_list.hpp"

namespace tangles {

// A sequence of layers (permutations of the same wires) in which consecutive
// layers are adjacent. Height is the number of layers.
class Tangle {
public:
    // Validates the layer sequence; throws InvalidInputError on an empty
    // sequence, mixed sizes, or non-adjacent consecutive layers.
    explicit Tangle(std::vector<Permutation> layers);

    static Tangle single(const Permutation& layer) { return Tangle({layer}); }

    int wires() const { return layers_.front().size(); }
    int height() const { return static_cast<int>(layers_.size()); }

    const Permutation& layer(int index) const; // 1-based
    const Permutation& first() const { return layers_.front(); }
    const Permutation& last() const { return layers_.back(); }
    const std::vector<Permutation>& layers() const { return layers_; }

    // Contiguous slice, 1-based and inclusive.
    Tangle subtangle(int from, int to) const;

private:
    std::vector<Permutation> layers_;
};

// The multiset of swaps performed by the tangle.
SwapList tangle_list(const Tangle& t);

// Outcome of checking a tangle against a list and start layer. The reason
// identifies the first violated condition.
struct TangleValidation {
    enum class Reason { valid, start_mismatch, size_mismatch, not_adjacent, list_mismatch };

    bool ok = false;
    Reason reason = Reason::valid;
    int layer = 0; // first offending layer for adjacency failures

    explicit operator bool() const { return ok; }
};

std::string to_string(TangleValidation::Reason reason);

// True iff the tangle starts at the given layer, consecutive layers are
// adjacent, and its swap multiset equals the list. Never throws; failures
// carry a reason code.
TangleValidation validate_tangle(const Tangle& t, const SwapList& list, const Permutation& start);

} // namespace tangles
