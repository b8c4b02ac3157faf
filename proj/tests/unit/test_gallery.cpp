#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "griddom/construct.hpp"
#include "griddom/gallery.hpp"
#include "oracle.hpp"

using namespace griddom;

namespace {

const std::set<std::pair<int, int>> not_full = {{2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4},
                                                {3, 5}, {4, 4}, {4, 6}, {5, 5}};

} // namespace

TEST(Gallery, EntriesAreProper)
{
    for (const auto & e : gallery_entries()) {
        EXPECT_EQ(e.k, 3);
        EXPECT_EQ(e.coloring.palette(), e.t);
        EXPECT_EQ(e.coloring.dims(), e.dims);
        const std::vector<int> cells(e.coloring.cells().begin(), e.coloring.cells().end());
        EXPECT_TRUE(oracle::is_proper(e.dims, 3, e.t, cells)) << e.source;
        EXPECT_TRUE(verify_coloring(e.coloring).proper) << e.source;
    }
}

TEST(Gallery, OnePanelPerEntry)
{
    std::set<std::string> sources;
    for (const auto & e : gallery_entries())
        sources.insert(e.source);
    EXPECT_EQ(sources.size(), gallery_entries().size());
    EXPECT_EQ(gallery_entries().size(), 18u);
}

TEST(Gallery, PrintedColumns)
{
    const auto find = [](int r, int l) -> const GalleryEntry & {
        for (const auto & e : gallery_entries())
            if (e.dims == GridDims(r, l))
                return e;
        throw std::runtime_error("missing entry");
    };
    const auto & g44 = find(4, 4);
    const int cols44[4][4] = {{1, 2, 3, 4}, {5, 7, 8, 6}, {6, 8, 7, 5}, {4, 3, 2, 1}};
    for (int col = 1; col <= 4; ++col)
        for (int row = 1; row <= 4; ++row)
            EXPECT_EQ(g44.coloring.at({row, col}), cols44[col - 1][row - 1]);
    EXPECT_EQ(g44.t, 8);

    const auto & g33 = find(3, 3);
    const int cols33[3][3] = {{6, 1, 7}, {4, 5, 2}, {7, 3, 6}};
    for (int col = 1; col <= 3; ++col)
        for (int row = 1; row <= 3; ++row)
            EXPECT_EQ(g33.coloring.at({row, col}), cols33[col - 1][row - 1]);
    EXPECT_EQ(g33.t, 7);
}

TEST(Gallery, StripWithSevenCellClass)
{
    for (const auto & e : gallery_entries())
        if (e.dims == GridDims(2, 8)) {
            const auto cells = e.coloring.cells();
            EXPECT_EQ(std::ranges::count(cells, 7), 4);
            for (int c = 1; c <= 6; ++c)
                EXPECT_EQ(std::ranges::count(cells, c), 2);
        }
}

TEST(Gallery, D3Examples)
{
    EXPECT_EQ(d3_value(2, 5), 6);
    EXPECT_EQ(d3_value(4, 6), 9);
    EXPECT_EQ(d3_value(6, 4), 9);
    EXPECT_EQ(d3_value(100, 100), 10);
    EXPECT_EQ(d3_value(1, 3), 3);
    EXPECT_EQ(d3_value(1, 9), 4);
    EXPECT_THROW(d3_value(0, 3), ParameterError);
}

TEST(Gallery, D3AgreesWithEntries)
{
    for (const auto & e : gallery_entries())
        EXPECT_EQ(d3_value(e.dims.rows(), e.dims.cols()), e.t) << e.source;
}

TEST(Gallery, D3BelowMinDegree)
{
    for (int r = 1; r <= 50; ++r)
        for (int l = 1; l <= 50; ++l) {
            const int delta = min_k_degree(GridDims(r, l), 3);
            const int d = d3_value(r, l);
            EXPECT_LE(d, delta);
            const bool listed = not_full.contains({std::min(r, l), std::max(r, l)});
            EXPECT_EQ(d < delta, listed) << r << "x" << l;
        }
}

TEST(Gallery, D3MatchesConstructions)
{
    for (int r = 1; r <= 30; ++r)
        for (int l = 1; l <= 30; ++l)
            if (plannable(3, r, l))
                EXPECT_EQ(planned_palette(3, r, l), d3_value(r, l)) << r << "x" << l;
}
