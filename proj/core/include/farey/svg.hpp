#pragma once

#include <string>

#include "farey/cone.hpp"
#include "farey/metric.hpp"

namespace farey {

// Upper-half-plane pictures of reports. Lattice points are circles colored
// by distance, cones are translucent sectors from the origin, and the lines
// x = +-1, y = 1 are drawn. Exactly one marker element per ball member. The
// canvas mapping is documented in the file header comment; `scale` is pixels
// per lattice unit.
std::string render_svg(const BallReport& report, int scale = 8);
std::string render_svg(const CoverReport& report, int scale = 8);

}  // namespace farey
