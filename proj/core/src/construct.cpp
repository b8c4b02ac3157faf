#include "griddom/construct.hpp"

#include <algorithm>

#include "griddom/error.hpp"

namespace griddom {

namespace {

struct ChainLink
{
    int offset; // 0-based start of this copy
    std::vector<int> shifts;
};

// Covers `length` consecutive lines with copies of a block `block_len` long.
// Copies are disjoint except in the tail, where either two copies overlap in
// block_len - extra lines, or three copies overlap in floor(block_len/2) and
// ceil(block_len/2) - extra lines. Each overlap is bridged by one shift whose
// parameter is the overlap length.
std::optional<std::vector<ChainLink>> extension_chain(int length, int block_len)
{
    const int copies = length / block_len;
    const int extra = length % block_len;
    const int half_up = (block_len + 1) / 2;
    const int half_down = block_len / 2;
    if (copies == 0)
        return std::nullopt;

    std::vector<ChainLink> links;
    if (extra == 0 || extra >= half_up) {
        for (int i = 0; i < copies; ++i)
            links.push_back({i * block_len, {}});
        if (extra > 0)
            links.push_back({(copies - 1) * block_len + extra, {block_len - extra}});
        return links;
    }

    if (copies < 2)
        return std::nullopt;
    for (int i = 0; i + 1 < copies; ++i)
        links.push_back({i * block_len, {}});
    const int start = (copies - 2) * block_len;
    links.push_back({start + half_up, {half_down}});
    links.push_back({start + block_len + extra, {half_down, half_up - extra}});
    return links;
}

struct Layout
{
    BlockSpec block;
    std::vector<Placement> placements;
};

// Plan for a frame with `rows` rows and `cols` columns, if one exists.
std::optional<Layout> layout_frame(int k, int rows, int cols)
{
    if (rows <= k) {
        const BlockSpec block(k, rows);
        const auto columns = extension_chain(cols, block.width());
        if (!columns)
            return std::nullopt;
        Layout out{block, {}};
        for (const auto & c : *columns) {
            Recipe recipe;
            for (int s : c.shifts)
                recipe.push_back(ShiftOp::h(s));
            out.placements.push_back({{1, c.offset + 1}, std::move(recipe)});
        }
        return out;
    }

    const BlockSpec block(k, k + 1);
    const auto row_links = extension_chain(rows, block.height());
    const auto col_links = extension_chain(cols, block.width());
    if (!row_links || !col_links)
        return std::nullopt;
    Layout out{block, {}};
    for (const auto & r : *row_links)
        for (const auto & c : *col_links) {
            Recipe recipe;
            for (int s : c.shifts)
                recipe.push_back(ShiftOp::h(s));
            for (int t : r.shifts)
                recipe.push_back(ShiftOp::v(t));
            out.placements.push_back({{r.offset + 1, c.offset + 1}, std::move(recipe)});
        }
    return out;
}

std::string unsupported_reason(int k, int rows, int cols)
{
    const int a = std::min(rows, cols);
    if (a <= k) {
        const int w = 2 * k - a + 3;
        return "short side " + std::to_string(a) + " <= k needs long side " + std::to_string(w) + " or >= " +
               std::to_string(w + (w + 1) / 2);
    }
    const int gap_hi = k + (k + 2) / 2;
    if (a >= k + 3 && a <= gap_hi)
        return "short side " + std::to_string(a) + " lies in the open range " + std::to_string(k + 3) + ".." +
               std::to_string(gap_hi) + " where no extension of the block coloring is known";
    return "finitely many exceptional shapes near the block size are not covered by the extension lemmas";
}

int block_color(const Permutation & f, const BlockSpec & block, int row, int col)
{
    const int n = block.half_size();
    const int p = (col - 1) * block.height() + row;
    return p <= n ? f(p) : f(2 * n + 1 - p);
}

} // namespace

BlockSpec::BlockSpec(int k, int height) :
    k_(k), height_(height)
{
    if (k < 1)
        throw ParameterError("k must be positive, got " + std::to_string(k));
    if (height < 1 || height > k + 1)
        throw ParameterError("block height must lie in 1.." + std::to_string(k + 1) + ", got " +
                             std::to_string(height));
}

std::string to_string(const Recipe & recipe)
{
    if (recipe.empty())
        return "id";
    std::string out;
    for (const auto & op : recipe) {
        if (!out.empty())
            out += ' ';
        out += op.kind == ShiftOp::Kind::H ? 'h' : 'v';
        out += std::to_string(op.param);
    }
    return out;
}

Permutation resolve(const Recipe & recipe, const BlockSpec & block)
{
    Permutation f = Permutation::identity(block.half_size());
    for (const auto & op : recipe) {
        if (op.kind == ShiftOp::Kind::H) {
            f = h_shift(f, op.param, block.height());
        } else {
            if (block.height() != block.k() + 1)
                throw ParameterError("v shifts need blocks of height k+1");
            f = v_shift(f, op.param, block.k());
        }
    }
    return f;
}

Coloring stamp(const Permutation & f, const BlockSpec & block)
{
    if (f.size() != block.half_size())
        throw ParameterError("stamp needs a permutation of size " + std::to_string(block.half_size()) + ", got " +
                             std::to_string(f.size()));
    const GridDims dims(block.height(), block.width());
    std::vector<Color> cells(static_cast<std::size_t>(dims.cells()));
    for (int row = 1; row <= dims.rows(); ++row)
        for (int col = 1; col <= dims.cols(); ++col)
            cells[dims.index({row, col})] = block_color(f, block, row, col);
    return Coloring(dims, block.k(), block.half_size(), std::move(cells));
}

Coloring standard_block(int k, int height)
{
    const BlockSpec block(k, height);
    return stamp(Permutation::identity(block.half_size()), block);
}

bool plannable(int k, int rows, int cols)
{
    if (k < 1 || rows < 1 || cols < 1)
        return false;
    return layout_frame(k, rows, cols).has_value() || layout_frame(k, cols, rows).has_value();
}

StampPlan plan_grid(int k, int rows, int cols)
{
    if (k < 1)
        throw ParameterError("k must be positive, got " + std::to_string(k));
    const GridDims dims(rows, cols);
    if (auto direct = layout_frame(k, rows, cols))
        return {dims, k, direct->block, false, std::move(direct->placements)};
    if (auto flipped = layout_frame(k, cols, rows))
        return {dims, k, flipped->block, true, std::move(flipped->placements)};
    throw UnsupportedShape(rows, cols, k, unsupported_reason(k, rows, cols));
}

Coloring apply_plan(const StampPlan & plan)
{
    const BlockSpec & block = plan.block;
    if (block.k() != plan.k)
        throw ParameterError("plan radius and block radius differ");
    const GridDims frame = plan.transposed ? plan.dims.transposed() : plan.dims;
    std::vector<Color> cells(static_cast<std::size_t>(frame.cells()), 0);

    for (const auto & placement : plan.placements) {
        const Vertex o = placement.origin;
        const Vertex far{o.row + block.height() - 1, o.col + block.width() - 1};
        if (!frame.contains(o) || !frame.contains(far))
            throw BoundsError("block at (" + std::to_string(o.row) + "," + std::to_string(o.col) +
                              ") leaves the grid");
        const Permutation f = resolve(placement.recipe, block);
        for (int row = 1; row <= block.height(); ++row)
            for (int col = 1; col <= block.width(); ++col) {
                const Vertex v{o.row + row - 1, o.col + col - 1};
                const Color incoming = block_color(f, block, row, col);
                Color & cell = cells[frame.index(v)];
                if (cell == 0) {
                    cell = incoming;
                } else if (cell != incoming) {
                    const Vertex shown = plan.transposed ? Vertex{v.col, v.row} : v;
                    throw OverlapConflict(shown.row, shown.col, cell, incoming);
                }
            }
    }

    if (auto hole = std::ranges::find(cells, 0); hole != cells.end()) {
        Vertex v = frame.vertex(static_cast<std::size_t>(hole - cells.begin()));
        if (plan.transposed)
            v = {v.col, v.row};
        throw ValidationError("plan leaves cell (" + std::to_string(v.row) + "," + std::to_string(v.col) +
                              ") uncovered");
    }

    Coloring out(frame, plan.k, block.half_size(), std::move(cells));
    return plan.transposed ? transpose(out) : out;
}

int planned_palette(int k, int rows, int cols)
{
    const int a = std::min(rows, cols);
    if (a <= k)
        return BlockSpec(k, a).half_size();
    return full_block_half_size(k);
}

} // namespace griddom
