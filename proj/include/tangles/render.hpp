#pragma once

#include <string>

#include "tangles/tangle.hpp"

namespace tangles {

// One row per layer showing the wire order, with an X between the columns of
// every swapped pair on the rows in between.
std::string render_ascii(const Tangle& t);

// Wires as polylines over equally spaced layers with gray layer bars.
// Pure function of the tangle: no timestamps, fixed viewport math.
std::string render_svg(const Tangle& t);

} // namespace tangles
