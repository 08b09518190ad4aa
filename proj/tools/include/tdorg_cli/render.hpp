#pragma once

#include <string>

#include "tdorg/graph.hpp"
#include "tdorg/representation.hpp"

namespace tdorg::cli {

/// Ray diagram on the rank grid: the endpoint of w sits at (1 + rank_x(w), 1 + rank_y(w)) with y
/// growing upward; u-rays point right, v-rays point down. Throws PreconditionError unless `rep`
/// realizes `g`.
std::string render_svg(const BipartiteGraph& g, const Representation& rep);

}  // namespace tdorg::cli
