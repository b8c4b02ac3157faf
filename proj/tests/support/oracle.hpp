#pragma once

// Slow, independent reference implementations. They share only the plain data
// types with the library and recompute everything from the grid graph itself.

#include <cstdint>
#include <vector>

#include "griddom/grid.hpp"

namespace oracle {

using griddom::GridDims;
using griddom::Vertex;

/// Breadth-first distances from `source` over the 4-neighbour grid graph.
std::vector<int> bfs_distances(const GridDims & dims, Vertex source);

/// Cell indices within graph distance k of each cell.
std::vector<std::vector<int>> bfs_balls(const GridDims & dims, int k);

/// Does every radius-k ball see every color 1..palette?
bool is_proper(const GridDims & dims, int k, int palette, const std::vector<int> & cells);

/// Number of distinct values in cells.
int distinct_colors(const std::vector<int> & cells);

/// Maximum number of classes in a partition of V into k-dominating sets, by
/// enumerating restricted growth strings. Grids up to 20 cells.
int domatic_number(const GridDims & dims, int k);

/// Is there a partition into exactly t k-dominating classes?
bool partition_exists(const GridDims & dims, int k, int t);

/// Cells of a grid given as rows of colors.
std::vector<int> flatten(const std::vector<std::vector<int>> & rows);

} // namespace oracle
