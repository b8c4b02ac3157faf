#include "griddom/grid.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace griddom {

namespace {

std::string show(Vertex v)
{
    return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

void require_radius(int k)
{
    if (k < 0)
        throw ParameterError("radius must be nonnegative, got " + std::to_string(k));
}

void chamfer_pass(int rows, int cols, std::vector<std::int32_t> & d)
{
    // forward: top-left to bottom-right
    for (int i = 0; i < rows; ++i) {
        std::int32_t * row = d.data() + static_cast<std::ptrdiff_t>(i) * cols;
        const std::int32_t * above = i > 0 ? row - cols : nullptr;
        for (int j = 0; j < cols; ++j) {
            std::int32_t v = row[j];
            if (above && above[j] + 1 < v)
                v = above[j] + 1;
            if (j > 0 && row[j - 1] + 1 < v)
                v = row[j - 1] + 1;
            row[j] = v;
        }
    }
    // backward: bottom-right to top-left
    for (int i = rows - 1; i >= 0; --i) {
        std::int32_t * row = d.data() + static_cast<std::ptrdiff_t>(i) * cols;
        const std::int32_t * below = i + 1 < rows ? row + cols : nullptr;
        for (int j = cols - 1; j >= 0; --j) {
            std::int32_t v = row[j];
            if (below && below[j] + 1 < v)
                v = below[j] + 1;
            if (j + 1 < cols && row[j + 1] + 1 < v)
                v = row[j + 1] + 1;
            row[j] = v;
        }
    }
}

// Vertices (as row-major indices) lacking `color` within distance k.
std::vector<std::size_t> uncovered_by(const Coloring & c, Color color, std::vector<std::int32_t> & scratch)
{
    const auto & dims = c.dims();
    const auto cells = c.cells();
    scratch.assign(cells.size(), DistanceField::unreachable);
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i] == color)
            scratch[i] = 0;
    chamfer_pass(dims.rows(), dims.cols(), scratch);

    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < scratch.size(); ++i)
        if (scratch[i] > c.k())
            out.push_back(i);
    return out;
}

} // namespace

GridDims::GridDims(int rows, int cols) :
    rows_(rows), cols_(cols)
{
    if (rows < 1 || cols < 1)
        throw ParameterError("grid dimensions must be positive, got " + std::to_string(rows) + "x" +
                             std::to_string(cols));
}

std::vector<Vertex> GridDims::corners() const
{
    return {{1, 1}, {1, cols_}, {rows_, 1}, {rows_, cols_}};
}

void GridDims::require(Vertex v) const
{
    if (!contains(v))
        throw BoundsError("vertex " + show(v) + " outside " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                          " grid");
}

Coloring::Coloring(GridDims dims, int k, int palette, std::vector<Color> cells) :
    dims_(dims), k_(k), palette_(palette), cells_(std::move(cells))
{
    if (k < 0)
        throw ValidationError("coloring radius must be nonnegative");
    if (palette < 1)
        throw ValidationError("palette must be positive");
    if (cells_.size() != static_cast<std::size_t>(dims_.cells()))
        throw ValidationError("coloring has " + std::to_string(cells_.size()) + " cells, grid needs " +
                              std::to_string(dims_.cells()));

    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const Color c = cells_[i];
        if (c < 1 || c > palette)
            throw ValidationError("cell " + show(dims_.vertex(i)) + " has color " + std::to_string(c) +
                                  " outside 1.." + std::to_string(palette));
    }
}

Color Coloring::at(Vertex v) const
{
    dims_.require(v);
    return cells_[dims_.index(v)];
}

Coloring Coloring::with_radius(int k) const
{
    return Coloring(dims_, k, palette_, cells_);
}

DistanceField DistanceField::compute(const GridDims & dims, std::span<const std::uint8_t> sources)
{
    if (sources.size() != static_cast<std::size_t>(dims.cells()))
        throw ValidationError("source mask size does not match grid");
    std::vector<std::int32_t> d(sources.size(), unreachable);
    for (std::size_t i = 0; i < sources.size(); ++i)
        if (sources[i])
            d[i] = 0;
    chamfer_pass(dims.rows(), dims.cols(), d);
    return DistanceField(dims, std::move(d));
}

DistanceField DistanceField::of_color(const Coloring & c, Color color)
{
    std::vector<std::uint8_t> mask(c.cells().size());
    std::ranges::transform(c.cells(), mask.begin(), [color](Color x) { return x == color ? 1 : 0; });
    return compute(c.dims(), mask);
}

int grid_distance(const GridDims & dims, Vertex u, Vertex v)
{
    dims.require(u);
    dims.require(v);
    return l1_distance(u, v);
}

int ball_size(const GridDims & dims, Vertex x, int k)
{
    dims.require(x);
    require_radius(k);
    int count = 0;
    for (int row = 1; row <= dims.rows(); ++row) {
        const int reach = k - (row > x.row ? row - x.row : x.row - row);
        if (reach < 0)
            continue;
        const int lo = std::max(1, x.col - reach);
        const int hi = std::min(dims.cols(), x.col + reach);
        count += hi - lo + 1;
    }
    return count;
}

std::vector<Vertex> ball(const GridDims & dims, Vertex x, int k)
{
    dims.require(x);
    require_radius(k);
    std::vector<Vertex> out;
    for (int row = std::max(1, x.row - k); row <= std::min(dims.rows(), x.row + k); ++row) {
        const int reach = k - (row > x.row ? row - x.row : x.row - row);
        for (int col = std::max(1, x.col - reach); col <= std::min(dims.cols(), x.col + reach); ++col)
            out.push_back({row, col});
    }
    return out;
}

std::vector<int> min_k_degree_terms(const GridDims & dims, int k)
{
    require_radius(k);
    const int r = std::min(dims.rows(), dims.cols());
    const int l = std::max(dims.rows(), dims.cols());
    std::vector<int> terms;
    terms.reserve(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        terms.push_back(std::max(0, std::min(l, k + 1 - i)));
    return terms;
}

int min_k_degree(const GridDims & dims, int k)
{
    int total = 0;
    for (int term : min_k_degree_terms(dims, k))
        total += term;
    return total;
}

VerificationReport verify_coloring(const Coloring & c, unsigned workers)
{
    const int palette = c.palette();
    std::vector<std::vector<std::size_t>> per_color(static_cast<std::size_t>(palette));

    const unsigned threads = std::clamp(workers, 1u, static_cast<unsigned>(palette));
    if (threads == 1) {
        std::vector<std::int32_t> scratch;
        for (Color color = 1; color <= palette; ++color)
            per_color[static_cast<std::size_t>(color - 1)] = uncovered_by(c, color, scratch);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                std::vector<std::int32_t> scratch;
                for (Color color = static_cast<Color>(w) + 1; color <= palette; color += static_cast<Color>(threads))
                    per_color[static_cast<std::size_t>(color - 1)] = uncovered_by(c, color, scratch);
            });
        }
    }

    VerificationReport report;
    for (Color color = 1; color <= palette; ++color)
        for (std::size_t index : per_color[static_cast<std::size_t>(color - 1)])
            report.violations.push_back({c.dims().vertex(index), color});
    std::ranges::sort(report.violations);
    report.proper = report.violations.empty();
    return report;
}

std::vector<Vertex> dominating_vertices(const GridDims & dims, int k)
{
    require_radius(k);
    const auto corners = dims.corners();
    std::vector<Vertex> out;
    for (int row = 1; row <= dims.rows(); ++row)
        for (int col = 1; col <= dims.cols(); ++col) {
            const Vertex x{row, col};
            if (std::ranges::all_of(corners, [&](Vertex corner) { return l1_distance(x, corner) <= k; }))
                out.push_back(x);
        }
    return out;
}

Coloring transpose(const Coloring & c)
{
    const GridDims out_dims = c.dims().transposed();
    std::vector<Color> cells(c.cells().size());
    for (int row = 1; row <= out_dims.rows(); ++row)
        for (int col = 1; col <= out_dims.cols(); ++col)
            cells[out_dims.index({row, col})] = c.at({col, row});
    return Coloring(out_dims, c.k(), c.palette(), std::move(cells));
}

} // namespace griddom
