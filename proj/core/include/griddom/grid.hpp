#pragma once

// Grid geometry, colorings and the properness check.
//
// Vertices are 1-based (row, col). Colors of finite colorings are 1-based ids
// in 1..palette. Cells are stored row-major.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "griddom/error.hpp"

namespace griddom {

struct Vertex
{
    int row = 1;
    int col = 1;

    friend constexpr auto operator<=>(const Vertex &, const Vertex &) = default;
};

/// Unchecked L1 distance.
constexpr int l1_distance(Vertex u, Vertex v) noexcept
{
    const int dr = u.row > v.row ? u.row - v.row : v.row - u.row;
    const int dc = u.col > v.col ? u.col - v.col : v.col - u.col;
    return dr + dc;
}

class GridDims
{
public:
    /// Throws ParameterError unless rows, cols >= 1.
    GridDims(int rows, int cols);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int cells() const noexcept { return rows_ * cols_; }

    bool contains(Vertex v) const noexcept
    {
        return v.row >= 1 && v.row <= rows_ && v.col >= 1 && v.col <= cols_;
    }

    /// Row-major index of an in-bounds vertex.
    std::size_t index(Vertex v) const noexcept
    {
        return static_cast<std::size_t>(v.row - 1) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(v.col - 1);
    }

    Vertex vertex(std::size_t index) const noexcept
    {
        return {static_cast<int>(index / static_cast<std::size_t>(cols_)) + 1,
                static_cast<int>(index % static_cast<std::size_t>(cols_)) + 1};
    }

    GridDims transposed() const noexcept { return {cols_, rows_}; }

    /// The four corners in the order (1,1), (1,l), (r,1), (r,l).
    std::vector<Vertex> corners() const;

    void require(Vertex v) const;

    friend bool operator==(const GridDims &, const GridDims &) = default;

private:
    int rows_;
    int cols_;
};

using Color = int;

/// A total assignment of colors 1..palette to the cells of a grid, tagged with
/// the domination radius k it is meant for.
///
/// Construction validates that every cell holds a color in 1..palette. A color
/// that never appears is not an error here; verify_coloring reports it.
class Coloring
{
public:
    Coloring(GridDims dims, int k, int palette, std::vector<Color> cells);

    const GridDims & dims() const noexcept { return dims_; }
    int k() const noexcept { return k_; }
    int palette() const noexcept { return palette_; }

    Color at(Vertex v) const;
    Color operator[](std::size_t index) const noexcept { return cells_[index]; }
    std::span<const Color> cells() const noexcept { return cells_; }

    /// Same cells, different radius.
    Coloring with_radius(int k) const;

    friend bool operator==(const Coloring &, const Coloring &) = default;

private:
    GridDims dims_;
    int k_;
    int palette_;
    std::vector<Color> cells_;
};

/// L1 distance from every cell to the nearest source cell.
class DistanceField
{
public:
    static constexpr std::int32_t unreachable = INT32_MAX / 4;

    /// Two-pass chamfer transform; `sources` is row-major, nonzero marks a source.
    static DistanceField compute(const GridDims & dims, std::span<const std::uint8_t> sources);

    /// Distance to the nearest cell of `color` in `c`.
    static DistanceField of_color(const Coloring & c, Color color);

    const GridDims & dims() const noexcept { return dims_; }
    std::int32_t at(Vertex v) const { return values_[dims_.index(v)]; }
    std::span<const std::int32_t> values() const noexcept { return values_; }

private:
    DistanceField(GridDims dims, std::vector<std::int32_t> values) :
        dims_(dims), values_(std::move(values))
    {
    }

    GridDims dims_;
    std::vector<std::int32_t> values_;
};

struct Violation
{
    Vertex vertex;
    Color missing;

    friend constexpr auto operator<=>(const Violation &, const Violation &) = default;
};

struct VerificationReport
{
    bool proper = true;
    /// Row-major by vertex, then ascending color.
    std::vector<Violation> violations;
};

int grid_distance(const GridDims & dims, Vertex u, Vertex v);

/// |{y : d(x,y) <= k}|.
int ball_size(const GridDims & dims, Vertex x, int k);

/// Cells of the radius-k ball around x, row-major.
std::vector<Vertex> ball(const GridDims & dims, Vertex x, int k);

/// Closed form of the smallest ball size, attained at a corner:
/// sum_{i=0}^{r-1} max(0, min(l, k+1-i)) with r <= l (transposed internally).
int min_k_degree(const GridDims & dims, int k);

/// The per-row terms of the min_k_degree sum, in row order.
std::vector<int> min_k_degree_terms(const GridDims & dims, int k);

/// Every (vertex, color) pair with no cell of that color within distance k.
/// Work is split across `workers` threads by color; the report is identical for
/// any worker count.
VerificationReport verify_coloring(const Coloring & c, unsigned workers = 1);

/// Vertices whose radius-k ball is the whole grid, row-major.
std::vector<Vertex> dominating_vertices(const GridDims & dims, int k);

Coloring transpose(const Coloring & c);

} // namespace griddom
