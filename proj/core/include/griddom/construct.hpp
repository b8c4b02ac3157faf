#pragma once

// Block colorings and stamp plans.
//
// A block of height rho <= k+1 and width w = 2k - rho + 3 is colored by a
// permutation f of its first half: in column-major order, position p gets
// f(p) for p <= N and f(2N+1-p) otherwise, with N = rho*w/2. The identity
// gives the standard block coloring, which is a proper k-distance domatic
// coloring with N colors. Larger grids are covered by overlapping copies whose
// permutations are produced by h/v shift recipes.

#include <optional>
#include <string>
#include <vector>

#include "griddom/grid.hpp"
#include "griddom/permutation.hpp"

namespace griddom {

class BlockSpec
{
public:
    /// Throws ParameterError unless k >= 1 and 1 <= height <= k+1.
    BlockSpec(int k, int height);

    int k() const noexcept { return k_; }
    int height() const noexcept { return height_; }
    int width() const noexcept { return 2 * k_ - height_ + 3; }
    int half_size() const noexcept { return height_ * width() / 2; }

    friend bool operator==(const BlockSpec &, const BlockSpec &) = default;

private:
    int k_;
    int height_;
};

struct ShiftOp
{
    enum class Kind { H, V };

    Kind kind;
    int param;

    static ShiftOp h(int s) { return {Kind::H, s}; }
    static ShiftOp v(int t) { return {Kind::V, t}; }

    friend bool operator==(const ShiftOp &, const ShiftOp &) = default;
};

/// Shift maps applied in order to the identity permutation.
using Recipe = std::vector<ShiftOp>;

/// "h2", "v1" style text; the empty recipe is "id".
std::string to_string(const Recipe & recipe);

struct Placement
{
    Vertex origin;
    Recipe recipe;

    friend bool operator==(const Placement &, const Placement &) = default;
};

struct StampPlan
{
    GridDims dims;
    int k;
    BlockSpec block;
    /// When set, placements are laid out on dims.transposed() and the stamped
    /// grid is transposed at the end.
    bool transposed = false;
    std::vector<Placement> placements;
};

/// Evaluates a recipe for the given block.
Permutation resolve(const Recipe & recipe, const BlockSpec & block);

/// Column-major stamp of f onto a single block.
Coloring stamp(const Permutation & f, const BlockSpec & block);

Coloring standard_block(int k, int height);

/// Whether plan_grid has a construction for G_{rows,cols} at radius k.
bool plannable(int k, int rows, int cols);

/// Throws UnsupportedShape for shapes outside the construction's coverage.
StampPlan plan_grid(int k, int rows, int cols);

/// Stamps the placements in order. Throws OverlapConflict when a later block
/// disagrees with an already colored cell, BoundsError when a block leaves the
/// grid and ValidationError when some cell stays uncovered.
Coloring apply_plan(const StampPlan & plan);

/// The palette a successful plan for G_{rows,cols} produces: N_r when the
/// short side r is at most k, (k+1)(k+2)/2 otherwise.
int planned_palette(int k, int rows, int cols);

} // namespace griddom
