#pragma once

#include <iosfwd>
#include <string>

#include "tangles/swap_list.hpp"
#include "tangles/tangle.hpp"

namespace tangles {

// List file format:
//   tanglelist 1
//   n <wires>
//   <i> <j> <mult>      one line per swapped pair, 1 <= i < j <= n, mult >= 1
// Lines starting with '#' are comments. Unlisted pairs have multiplicity 0;
// duplicate pairs are an error. write_list emits the canonical form (pairs
// ascending), so parse/write round-trip exactly.
SwapList parse_list(std::istream& in);
std::string write_list(const SwapList& list);

// Tangle file format:
//   tangle 1
//   n <wires>
//   start <n wires>     optional; the first layer defaults to the identity
//   <n wires>           one line per layer, wires by position
// Consecutive layers must be adjacent and the first layer must match the
// start (or the identity).
Tangle parse_tangle(std::istream& in);
std::string write_tangle(const Tangle& t);

} // namespace tangles
