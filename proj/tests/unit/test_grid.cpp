#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "griddom/grid.hpp"
#include "oracle.hpp"

using namespace griddom;

TEST(Grid, DimsRejectEmpty)
{
    EXPECT_THROW(GridDims(0, 3), ParameterError);
    EXPECT_THROW(GridDims(3, -1), ParameterError);
}

TEST(Grid, IndexRoundTrip)
{
    const GridDims d(3, 7);
    for (int i = 0; i < d.cells(); ++i)
        EXPECT_EQ(d.index(d.vertex(static_cast<std::size_t>(i))), static_cast<std::size_t>(i));
}

TEST(Grid, DistanceMatchesBfs)
{
    const GridDims d(5, 7);
    for (int i = 0; i < d.cells(); ++i) {
        const Vertex u = d.vertex(static_cast<std::size_t>(i));
        const auto bfs = oracle::bfs_distances(d, u);
        for (int j = 0; j < d.cells(); ++j)
            EXPECT_EQ(grid_distance(d, u, d.vertex(static_cast<std::size_t>(j))), bfs[static_cast<std::size_t>(j)]);
    }
    EXPECT_THROW(grid_distance(d, {0, 1}, {1, 1}), BoundsError);
}

TEST(Grid, BallMatchesBfs)
{
    for (int r = 1; r <= 6; ++r)
        for (int l = 1; l <= 6; ++l)
            for (int k = 0; k <= 5; ++k) {
                const GridDims d(r, l);
                const auto balls = oracle::bfs_balls(d, k);
                for (int i = 0; i < d.cells(); ++i) {
                    const Vertex x = d.vertex(static_cast<std::size_t>(i));
                    EXPECT_EQ(ball_size(d, x, k), static_cast<int>(balls[static_cast<std::size_t>(i)].size()));
                    EXPECT_EQ(ball(d, x, k).size(), balls[static_cast<std::size_t>(i)].size());
                }
            }
}

TEST(Grid, MinDegreeExamples)
{
    EXPECT_EQ(min_k_degree(GridDims(4, 5), 3), 10);
    EXPECT_EQ(min_k_degree(GridDims(1, 1), 1), 1);
    EXPECT_EQ(min_k_degree(GridDims(2, 4), 3), 7);
    EXPECT_EQ(min_k_degree_terms(GridDims(5, 4), 3), (std::vector<int>{4, 3, 2, 1}));
}

TEST(Grid, MinDegreeIsSmallestBall)
{
    for (int r = 1; r <= 9; ++r)
        for (int l = 1; l <= 9; ++l)
            for (int k = 0; k <= 6; ++k) {
                const GridDims d(r, l);
                int smallest = d.cells();
                for (const auto & b : oracle::bfs_balls(d, k))
                    smallest = std::min(smallest, static_cast<int>(b.size()));
                EXPECT_EQ(min_k_degree(d, k), smallest) << r << "x" << l << " k=" << k;
            }
}

TEST(Grid, ColoringValidation)
{
    const GridDims d(1, 2);
    EXPECT_THROW(Coloring(d, 1, 2, {1}), ValidationError);
    EXPECT_THROW(Coloring(d, 1, 2, {1, 3}), ValidationError);
    EXPECT_THROW(Coloring(d, -1, 2, {1, 2}), ValidationError);
    EXPECT_THROW(Coloring(d, 1, 0, {1, 1}), ValidationError);
    EXPECT_NO_THROW(Coloring(d, 1, 3, {1, 2}));
}

TEST(Grid, UnusedColorIsAViolationEverywhere)
{
    const Coloring c(GridDims(1, 2), 1, 3, {1, 2});
    const auto report = verify_coloring(c);
    EXPECT_FALSE(report.proper);
    ASSERT_EQ(report.violations.size(), 2u);
    EXPECT_EQ(report.violations[0], (Violation{{1, 1}, 3}));
    EXPECT_EQ(report.violations[1], (Violation{{1, 2}, 3}));
}

TEST(Grid, SingleCellIsProper)
{
    EXPECT_TRUE(verify_coloring(Coloring(GridDims(1, 1), 1, 1, {1})).proper);
}

TEST(Grid, VerifyAgreesWithBruteForce)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 6);
        const int l = 1 + static_cast<int>(rng() % 6);
        const int k = static_cast<int>(rng() % 4);
        const int palette = 1 + static_cast<int>(rng() % 5);
        const GridDims d(r, l);
        std::vector<int> cells(static_cast<std::size_t>(d.cells()));
        for (auto & x : cells)
            x = 1 + static_cast<int>(rng() % static_cast<unsigned>(palette));
        const Coloring c(d, k, palette, cells);
        const auto report = verify_coloring(c);
        EXPECT_EQ(report.proper, oracle::is_proper(d, k, palette, cells));

        std::size_t expected = 0;
        const auto balls = oracle::bfs_balls(d, k);
        for (const auto & b : balls)
            for (int color = 1; color <= palette; ++color)
                expected += std::ranges::none_of(b, [&](int j) { return cells[static_cast<std::size_t>(j)] == color; });
        EXPECT_EQ(report.violations.size(), expected);
        EXPECT_TRUE(std::ranges::is_sorted(report.violations));
    }
}

TEST(Grid, VerifyIndependentOfWorkers)
{
    std::mt19937 rng(11);
    const GridDims d(9, 13);
    std::vector<int> cells(static_cast<std::size_t>(d.cells()));
    for (auto & x : cells)
        x = 1 + static_cast<int>(rng() % 9);
    const Coloring c(d, 2, 9, cells);
    const auto one = verify_coloring(c, 1);
    for (unsigned w : {2u, 3u, 8u, 64u}) {
        const auto many = verify_coloring(c, w);
        EXPECT_EQ(many.proper, one.proper);
        EXPECT_EQ(many.violations, one.violations);
    }
}

TEST(Grid, DistanceFieldMatchesBfs)
{
    const GridDims d(6, 8);
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(d.cells()), 0);
    mask[d.index({2, 3})] = 1;
    mask[d.index({6, 8})] = 1;
    const auto field = DistanceField::compute(d, mask);
    const auto a = oracle::bfs_distances(d, {2, 3});
    const auto b = oracle::bfs_distances(d, {6, 8});
    for (int i = 0; i < d.cells(); ++i)
        EXPECT_EQ(field.values()[static_cast<std::size_t>(i)],
                  std::min(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]));

    const auto empty = DistanceField::compute(d, std::vector<std::uint8_t>(static_cast<std::size_t>(d.cells()), 0));
    EXPECT_EQ(empty.at({3, 3}), DistanceField::unreachable);
}

TEST(Grid, DominatingVerticesByBallSize)
{
    for (int r = 1; r <= 7; ++r)
        for (int l = 1; l <= 7; ++l)
            for (int k = 0; k <= 6; ++k) {
                const GridDims d(r, l);
                std::vector<Vertex> expected;
                const auto balls = oracle::bfs_balls(d, k);
                for (int i = 0; i < d.cells(); ++i)
                    if (static_cast<int>(balls[static_cast<std::size_t>(i)].size()) == d.cells())
                        expected.push_back(d.vertex(static_cast<std::size_t>(i)));
                EXPECT_EQ(dominating_vertices(d, k), expected);
            }
}

TEST(Grid, TransposePreservesProperness)
{
    const Coloring c(GridDims(2, 3), 1, 3, {1, 2, 3, 3, 1, 2});
    const Coloring t = transpose(c);
    EXPECT_EQ(t.dims(), GridDims(3, 2));
    EXPECT_EQ(t.at({3, 1}), c.at({1, 3}));
    EXPECT_EQ(verify_coloring(t).proper, verify_coloring(c).proper);
    EXPECT_EQ(transpose(t), c);
}
