#pragma once

#include <string>

#include "fishbij/fish.hpp"
#include "fishbij/ternary.hpp"

namespace fishbij {

// SVG diagram of a fish on the rigid 45-degree lattice.  Cells are drawn with
// partial fill opacity so overlapping cells of the branching surface stay
// visible; stem cells get a center dot, and head / tails / branch cells are
// color coded.
std::string render_fish_svg(const Fish& f);

// SVG diagram of a ternary tree, depth top-down, abscissa as the horizontal
// position (axis oriented to the left: a left child sits one unit left of its
// parent).
std::string render_tree_svg(const TernaryTree& t);

}  // namespace fishbij
