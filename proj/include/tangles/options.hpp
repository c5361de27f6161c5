#pragma once

#include <cstdint>

namespace tangles {

// Resource limits shared by the table-based solvers. max_table_entries bounds
// the number of distinct sublists (and the BFS visited set); solvers refuse
// larger instances with a ResourceLimitError instead of thrashing.
struct SolveOptions {
    std::uint64_t max_table_entries = 100'000'000;
};

} // namespace tangles
