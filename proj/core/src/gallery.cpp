#include "griddom/gallery.hpp"

#include <algorithm>
#include <utility>

namespace griddom {

namespace {

GalleryEntry entry(std::string source, int rows, int cols, int t, std::vector<Color> cells)
{
    const GridDims dims(rows, cols);
    return {dims, 3, t, Coloring(dims, 3, t, std::move(cells)), std::move(source)};
}

std::vector<GalleryEntry> build()
{
    return {
        entry("constructions2(a)", 2, 4, 6,
            {
              1,  3,  5,  1,
              2,  4,  6,  2,
            }),
        entry("constructions2(b)", 2, 5, 6,
            {
              1,  3,  5,  1,  3,
              2,  4,  6,  2,  4,
            }),
        entry("constructions2(c)", 2, 6, 6,
            {
              1,  3,  5,  1,  3,  5,
              2,  4,  6,  2,  4,  6,
            }),
        entry("constructions2(d)", 2, 8, 7,
            {
              1,  3,  5,  7,  7,  1,  3,  5,
              2,  4,  6,  7,  7,  2,  4,  6,
            }),
        entry("constructions2(e)", 2, 9, 7,
            {
              1,  3,  5,  7,  1,  7,  6,  4,  2,
              2,  4,  6,  7,  2,  7,  5,  3,  1,
            }),
        entry("constructions2(f)", 2, 10, 7,
            {
              1,  3,  5,  7,  1,  3,  7,  6,  4,  2,
              2,  4,  6,  7,  2,  4,  7,  5,  3,  1,
            }),
        entry("constructions3(a)", 3, 3, 7,
            {
              6,  4,  7,
              1,  5,  3,
              7,  2,  6,
            }),
        entry("constructions3(b)", 3, 4, 7,
            {
              6,  4,  7,  1,
              1,  5,  3,  2,
              7,  2,  6,  4,
            }),
        entry("constructions3(c)", 3, 5, 8,
            {
              4,  8,  6,  5,  2,
              7,  2,  1,  3,  8,
              3,  6,  5,  7,  4,
            }),
        entry("constructions3(d)", 3, 6, 9,
            {
              1,  4,  7,  9,  6,  3,
              2,  5,  8,  8,  5,  2,
              3,  6,  9,  7,  4,  1,
            }),
        entry("constructions3(e)", 3, 7, 9,
            {
              1,  4,  7,  9,  7,  6,  3,
              2,  5,  8,  3,  1,  2,  5,
              3,  6,  9,  7,  9,  4,  8,
            }),
        entry("construction44", 4, 4, 8,
            {
              1,  5,  6,  4,
              2,  7,  8,  3,
              3,  8,  7,  2,
              4,  6,  5,  1,
            }),
        entry("construction46", 4, 6, 9,
            {
              5,  7,  8,  6,  7,  5,
              2,  1,  9,  9,  4,  3,
              4,  3,  8,  8,  2,  1,
              6,  7,  5,  9,  7,  6,
            }),
        entry("construction47", 4, 7, 10,
            {
              1,  7,  9,  3, 10,  8,  1,
             10,  5,  4,  2,  4,  6,  9,
              8,  6,  3,  1,  3,  5,  7,
              2,  9,  7,  4,  8, 10,  2,
            }),
        entry("construction55", 5, 5, 9,
            {
              9,  8,  3,  7,  9,
              6,  5,  4,  6,  5,
              1,  2,  9,  1,  2,
              7,  8,  3,  7,  8,
              9,  5,  4,  6,  9,
            }),
        entry("constructions67(a)", 6, 6, 10,
            {
              4,  3,  6,  1, 10,  3,
             10,  7,  9,  5,  8,  2,
              2,  8,  1,  4,  9,  7,
              5,  9,  2,  3,  6,  4,
              4,  6,  7,  9,  5, 10,
              1, 10,  3,  8,  1,  2,
            }),
        entry("constructions67(b)", 6, 7, 10,
            {
              1,  2,  6, 10,  7,  1,  2,
              8,  3,  4,  8,  3,  4,  5,
              5,  9,  2,  5,  9,  8,  9,
              7, 10, 10,  6,  4, 10,  6,
              6,  2,  1,  7,  2,  1,  7,
              4,  3,  9,  8,  5,  4,  3,
            }),
        entry("constructions67(c)", 7, 7, 10,
            {
              8, 10,  4,  6,  5,  7,  8,
              7,  2,  1,  9,  1,  2, 10,
              9,  3,  6,  8,  6,  3,  9,
              5,  7,  4,  3,  5,  7,  4,
              9,  3,  6, 10,  6,  3,  9,
              8,  1,  2,  9,  2,  1, 10,
             10,  7,  4,  6,  5,  7,  8,
            }),
    };
}

} // namespace

const std::vector<GalleryEntry> & gallery_entries()
{
    static const std::vector<GalleryEntry> entries = build();
    return entries;
}

int d3_value(int r, int l)
{
    if (r < 1 || l < 1)
        throw ParameterError("grid dimensions must be positive");
    if (r > l)
        std::swap(r, l);
    switch (r) {
    case 1:
        return std::min(4, l);
    case 2:
        return l == 2 ? 4 : l <= 6 ? 6 : 7;
    case 3:
        return l <= 4 ? 7 : l == 5 ? 8 : 9;
    case 4:
        return l == 4 ? 8 : l == 5 ? 10 : l == 6 ? 9 : 10;
    case 5:
        return l == 5 ? 9 : 10;
    default:
        return 10;
    }
}

} // namespace griddom
