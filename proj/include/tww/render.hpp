#pragma once

#include <string>

#include "tww/permgraph.hpp"

namespace tww {

/// Permutation diagram: sigma on the top line, tau on the bottom line, one
/// segment per vertex at its integer slots.
std::string render_svg(const Realiser& r);
/// Two aligned rows listing the vertices in sigma and tau order.
std::string render_text(const Realiser& r);

}  // namespace tww
