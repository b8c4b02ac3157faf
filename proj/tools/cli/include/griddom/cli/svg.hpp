#pragma once

#include <string>

#include "griddom/grid.hpp"

namespace griddom::cli {

/// Colored squares with the color id printed in each cell.
std::string render_svg(const Coloring & c, const std::string & title);

} // namespace griddom::cli
