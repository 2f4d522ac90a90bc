#pragma once

#include "patrol/solver.hpp"

#include <string>

namespace patrol {

/// SVG drawing of a 2-D Euclidean solution: sites, one closed polygon per
/// part and a legend with robots per part and the latency. Throws
/// NotRenderable for matrix instances or points outside two dimensions.
std::string renderSvg(const MetricSpace& space, const CyclicSolution& solution);

void writeSvg(const MetricSpace& space, const CyclicSolution& solution, const std::string& path);

} // namespace patrol
