#pragma once

#include <cstdint>
#include <iosfwd>

#include "tangles/swap_list.hpp"

namespace tangles {

struct CnfOptions {
    std::uint64_t max_clauses = 50'000'000;
};

struct CnfStats {
    std::uint64_t variables = 0;
    std::uint64_t clauses = 0;
};

// Writes a DIMACS formula that is satisfiable exactly when some tangle of
// height at most `height` realizes the list (trailing layers may repeat, so
// exactly-height models cover all smaller heights). With height = |L|+1 the
// formula decides feasibility outright.
//
// Encoding: one-hot wire positions per layer channeled against an order
// encoding ("wire right of position p"), per-step movement limited to one
// position, relative-order variables per wire pair, flip variables marking
// the steps where a pair's order changes, and a sequential counter pinning
// each pair's flip count to its multiplicity.
//
// Throws ResourceLimitError when the clause count would exceed the cap.
CnfStats export_cnf(const SwapList& list, std::uint64_t height, std::ostream& out,
                    const CnfOptions& options = {});

} // namespace tangles
