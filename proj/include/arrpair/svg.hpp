#pragma once

#include <string>

#include "arrpair/arrangement.hpp"

namespace arrpair {

/// SVG picture of a planar arrangement: lines clipped to a box around all
/// vertices, bounded regions shaded and labeled F1..Fr in complex order,
/// vertices dotted. Throws PreconditionError unless m = 2.
std::string render_svg(const Arrangement& arr, const BoundedComplex& complex);

}  // namespace arrpair
