#pragma once

// The modular coloring of the infinite grid Z^2:
//   chi(a, b) = (2k+1)a + b  mod  2k^2+2k+1.
// Every radius-k ball has exactly 2k^2+2k+1 cells and receives every residue
// once. Residues are 0-based, unlike finite colorings.

#include <cstdint>
#include <vector>

#include "griddom/error.hpp"

namespace griddom {

struct InfiniteColoringSpec
{
    int k;
    std::int64_t modulus;
    std::int64_t row_coefficient;

    /// Throws ParameterError unless k >= 1.
    static InfiniteColoringSpec make(int k);
};

std::int64_t infinite_color(std::int64_t a, std::int64_t b, int k);

struct IntRange
{
    std::int64_t first;
    std::int64_t last; // inclusive

    std::int64_t size() const noexcept { return last - first + 1; }
};

struct InfiniteWindow
{
    InfiniteColoringSpec spec;
    IntRange rows;
    IntRange cols;
    std::vector<std::int64_t> values; // row-major residues

    std::int64_t at(std::int64_t a, std::int64_t b) const;
};

/// Throws ParameterError on an empty range.
InfiniteWindow infinite_window(int k, IntRange rows, IntRange cols);

/// Number of distinct residues on the radius-k ball around the origin.
std::int64_t origin_ball_distinct_colors(int k);

/// True iff no nonzero point within distance 2k of the origin has residue 0.
/// By linearity of chi this is equivalent to: any two distinct points at
/// distance <= 2k get different colors.
bool separation_holds(int k);

struct WindowBallCheck
{
    std::int64_t balls_checked = 0;
    std::int64_t balls_rainbow = 0;
};

/// Directly checks every radius-k ball lying entirely inside the window.
WindowBallCheck check_window_balls(const InfiniteWindow & window);

} // namespace griddom
