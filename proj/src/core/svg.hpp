#pragma once
#include "core/polygon.hpp"

#include <string>

namespace cyclact {

// Decorative Euclidean rendering: regular polygon, paired sides
// color-matched, orientation arrows, rotation angle annotated.
std::string render_svg(const SidePairedPolygon &p);

} // namespace cyclact
