#pragma once

// Hand-built colorings for radius 3 and the complete table of d_3.

#include <string>
#include <vector>

#include "griddom/grid.hpp"

namespace griddom {

struct GalleryEntry
{
    GridDims dims;
    int k;
    int t;
    Coloring coloring;
    /// Label of the figure panel the coloring was transcribed from.
    std::string source;
};

/// All entries, smallest grid first. Each is a proper coloring with t colors.
const std::vector<GalleryEntry> & gallery_entries();

/// d_3(G_{r,l}) for any r, l >= 1.
int d3_value(int r, int l);

} // namespace griddom
