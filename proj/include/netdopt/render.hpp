#pragma once

#include <cstdint>
#include <string>

#include "netdopt/criteria.hpp"
#include "netdopt/graph.hpp"

namespace netdopt {

// Standalone SVG of the network with nodes colored by assignment.
// Force-directed layout, deterministic per seed.
std::string render_svg(const Network& net, const Design& x,
                       std::uint64_t seed);

void render_svg_file(const Network& net, const Design& x, std::uint64_t seed,
                     const std::string& path);

}  // namespace netdopt
