#include "griddom/infinite.hpp"

#include <string>

#include "griddom/error.hpp"

namespace griddom {

namespace {

std::int64_t residue(std::int64_t value, std::int64_t modulus)
{
    const std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

} // namespace

InfiniteColoringSpec InfiniteColoringSpec::make(int k)
{
    if (k < 1)
        throw ParameterError("k must be positive, got " + std::to_string(k));
    const std::int64_t kk = k;
    return {k, 2 * kk * kk + 2 * kk + 1, 2 * kk + 1};
}

std::int64_t infinite_color(std::int64_t a, std::int64_t b, int k)
{
    const auto spec = InfiniteColoringSpec::make(k);
    // reduce first so large coordinates cannot overflow
    const std::int64_t ra = residue(a, spec.modulus);
    const std::int64_t rb = residue(b, spec.modulus);
    return residue(spec.row_coefficient * ra + rb, spec.modulus);
}

std::int64_t InfiniteWindow::at(std::int64_t a, std::int64_t b) const
{
    if (a < rows.first || a > rows.last || b < cols.first || b > cols.last)
        throw BoundsError("point outside window");
    return values[static_cast<std::size_t>((a - rows.first) * cols.size() + (b - cols.first))];
}

InfiniteWindow infinite_window(int k, IntRange rows, IntRange cols)
{
    if (rows.size() < 1 || cols.size() < 1)
        throw ParameterError("window ranges must be nonempty");
    InfiniteWindow w{InfiniteColoringSpec::make(k), rows, cols, {}};
    w.values.reserve(static_cast<std::size_t>(rows.size() * cols.size()));
    for (std::int64_t a = rows.first; a <= rows.last; ++a)
        for (std::int64_t b = cols.first; b <= cols.last; ++b)
            w.values.push_back(infinite_color(a, b, k));
    return w;
}

std::int64_t origin_ball_distinct_colors(int k)
{
    const auto spec = InfiniteColoringSpec::make(k);
    std::vector<bool> seen(static_cast<std::size_t>(spec.modulus), false);
    std::int64_t distinct = 0;
    for (std::int64_t a = -k; a <= k; ++a) {
        const std::int64_t reach = k - (a < 0 ? -a : a);
        for (std::int64_t b = -reach; b <= reach; ++b) {
            const auto c = static_cast<std::size_t>(infinite_color(a, b, k));
            if (!seen[c]) {
                seen[c] = true;
                ++distinct;
            }
        }
    }
    return distinct;
}

bool separation_holds(int k)
{
    const std::int64_t radius = 2 * static_cast<std::int64_t>(k);
    for (std::int64_t a = -radius; a <= radius; ++a) {
        const std::int64_t reach = radius - (a < 0 ? -a : a);
        for (std::int64_t b = -reach; b <= reach; ++b)
            if ((a != 0 || b != 0) && infinite_color(a, b, k) == 0)
                return false;
    }
    return true;
}

WindowBallCheck check_window_balls(const InfiniteWindow & window)
{
    const int k = window.spec.k;
    WindowBallCheck out;
    std::vector<std::int64_t> stamp(static_cast<std::size_t>(window.spec.modulus), -1);
    std::int64_t ball_id = 0;
    for (std::int64_t a = window.rows.first + k; a <= window.rows.last - k; ++a)
        for (std::int64_t b = window.cols.first + k; b <= window.cols.last - k; ++b) {
            ++out.balls_checked;
            ++ball_id;
            bool rainbow = true;
            for (std::int64_t da = -k; da <= k && rainbow; ++da) {
                const std::int64_t reach = k - (da < 0 ? -da : da);
                for (std::int64_t db = -reach; db <= reach; ++db) {
                    auto & mark = stamp[static_cast<std::size_t>(window.at(a + da, b + db))];
                    if (mark == ball_id) {
                        rainbow = false;
                        break;
                    }
                    mark = ball_id;
                }
            }
            if (rainbow)
                ++out.balls_rainbow;
        }
    return out;
}

} // namespace griddom
