#include "griddom/bounds.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace griddom {

namespace {

Vertex flip(Vertex v) { return {v.col, v.row}; }

// Farthest pair (in L1) among the vertices at distance > k from p, if that
// set has at least two vertices. L1 diameter is attained on the extremes of
// row+col or row-col.
std::optional<DistantPair> farthest_uncovered_pair(const GridDims & dims, Vertex p, int k)
{
    std::optional<Vertex> min_sum, max_sum, min_diff, max_diff;
    for (int row = 1; row <= dims.rows(); ++row)
        for (int col = 1; col <= dims.cols(); ++col) {
            const Vertex v{row, col};
            if (l1_distance(v, p) <= k)
                continue;
            const int sum = row + col;
            const int diff = row - col;
            if (!min_sum || sum < min_sum->row + min_sum->col)
                min_sum = v;
            if (!max_sum || sum > max_sum->row + max_sum->col)
                max_sum = v;
            if (!min_diff || diff < min_diff->row - min_diff->col)
                min_diff = v;
            if (!max_diff || diff > max_diff->row - max_diff->col)
                max_diff = v;
        }
    if (!min_sum)
        return std::nullopt;
    const DistantPair by_sum{*min_sum, *max_sum, l1_distance(*min_sum, *max_sum)};
    const DistantPair by_diff{*min_diff, *max_diff, l1_distance(*min_diff, *max_diff)};
    return by_diff.distance > by_sum.distance ? by_diff : by_sum;
}

std::optional<TwoBallEvidence> two_ball_for(const GridDims & dims, int k, int t, Vertex a, Vertex b)
{
    const auto s = ball(dims, a, k);
    if (static_cast<int>(s.size()) != t || ball_size(dims, b, k) != t)
        return std::nullopt;
    if (std::ranges::any_of(s, [&](Vertex x) { return l1_distance(x, b) <= k; }))
        return std::nullopt;

    TwoBallEvidence ev{a, b, {}};
    for (Vertex p : s) {
        const auto pair = farthest_uncovered_pair(dims, p, k);
        if (pair && pair->distance >= 2 * k + 1)
            ev.positions.push_back({p, *pair});
    }
    return ev;
}

void require_structure(const Certificate & c)
{
    if (c.k < 0)
        throw ValidationError("certificate radius must be nonnegative");
    if (c.t < 1)
        throw ValidationError("certificate palette must be positive");
}

void require_inside(const GridDims & dims, Vertex v, const char * what)
{
    if (!dims.contains(v))
        throw ValidationError(std::string("certificate ") + what + " (" + std::to_string(v.row) + "," +
                              std::to_string(v.col) + ") lies outside the grid");
}

bool check_singleton(const Certificate & c, const SingletonEvidence & ev)
{
    for (Vertex v : ev.dominating)
        require_inside(c.dims, v, "dominating vertex");

    const int n = c.dims.cells();
    if (ev.cells != n)
        return false;
    if (ev.required_singletons != std::max(0, 2 * c.t - n))
        return false;

    // Recount dominating vertices by full ball sizes, not by corner distances.
    std::set<Vertex> actual;
    for (int row = 1; row <= c.dims.rows(); ++row)
        for (int col = 1; col <= c.dims.cols(); ++col)
            if (ball_size(c.dims, {row, col}, c.k) == n)
                actual.insert({row, col});
    const std::set<Vertex> claimed(ev.dominating.begin(), ev.dominating.end());
    if (claimed.size() != ev.dominating.size() || claimed != actual)
        return false;

    return ev.required_singletons > static_cast<int>(actual.size());
}

bool check_two_ball(const Certificate & c, const TwoBallEvidence & ev)
{
    require_inside(c.dims, ev.corner_a, "corner");
    require_inside(c.dims, ev.corner_b, "corner");
    for (const auto & q : ev.positions) {
        require_inside(c.dims, q.position, "position");
        require_inside(c.dims, q.witness.first, "witness");
        require_inside(c.dims, q.witness.second, "witness");
    }

    const int k = c.k;
    std::set<Vertex> s, t;
    for (int row = 1; row <= c.dims.rows(); ++row)
        for (int col = 1; col <= c.dims.cols(); ++col) {
            const Vertex v{row, col};
            if (l1_distance(v, ev.corner_a) <= k)
                s.insert(v);
            if (l1_distance(v, ev.corner_b) <= k)
                t.insert(v);
        }
    if (static_cast<int>(s.size()) != c.t || static_cast<int>(t.size()) != c.t)
        return false;
    if (std::ranges::any_of(s, [&](Vertex v) { return t.contains(v); }))
        return false;

    std::set<Vertex> used;
    for (const auto & q : ev.positions) {
        if (!s.contains(q.position) || !used.insert(q.position).second)
            return false;
        const auto & w = q.witness;
        if (l1_distance(w.first, q.position) <= k || l1_distance(w.second, q.position) <= k)
            return false;
        if (l1_distance(w.first, w.second) != w.distance || w.distance < 2 * k + 1)
            return false;
    }
    return static_cast<int>(ev.positions.size()) > c.dims.cells() - 2 * c.t;
}

} // namespace

std::optional<Certificate> singleton_pigeonhole(const GridDims & dims, int k, int t)
{
    if (t < 1)
        throw ParameterError("palette must be positive");
    const int n = dims.cells();
    const int required = std::max(0, 2 * t - n);
    auto dominating = dominating_vertices(dims, k);
    if (required <= static_cast<int>(dominating.size()))
        return std::nullopt;
    return Certificate{dims, k, t, SingletonEvidence{n, required, std::move(dominating)}};
}

std::optional<Certificate> two_ball_pigeonhole(const GridDims & dims, int k, int t)
{
    if (t < 1)
        throw ParameterError("palette must be positive");
    auto main = two_ball_for(dims, k, t, {1, 1}, {dims.rows(), dims.cols()});
    auto anti = two_ball_for(dims, k, t, {1, dims.cols()}, {dims.rows(), 1});

    std::optional<TwoBallEvidence> best = std::move(main);
    if (anti && (!best || anti->positions.size() > best->positions.size()))
        best = std::move(anti);
    if (!best || static_cast<int>(best->positions.size()) <= dims.cells() - 2 * t)
        return std::nullopt;
    return Certificate{dims, k, t, std::move(*best)};
}

std::optional<Certificate> find_certificate(const GridDims & dims, int k, int t)
{
    if (auto c = singleton_pigeonhole(dims, k, t))
        return c;
    return two_ball_pigeonhole(dims, k, t);
}

bool check_certificate(const Certificate & c)
{
    require_structure(c);
    return std::visit(
        [&](const auto & ev) {
            if constexpr (std::is_same_v<std::decay_t<decltype(ev)>, SingletonEvidence>)
                return check_singleton(c, ev);
            else
                return check_two_ball(c, ev);
        },
        c.evidence);
}

Certificate transpose(const Certificate & c)
{
    Certificate out{c.dims.transposed(), c.k, c.t, c.evidence};
    if (auto * ev = std::get_if<SingletonEvidence>(&out.evidence)) {
        std::ranges::transform(ev->dominating, ev->dominating.begin(), flip);
        std::ranges::sort(ev->dominating);
    } else {
        auto & tb = std::get<TwoBallEvidence>(out.evidence);
        tb.corner_a = flip(tb.corner_a);
        tb.corner_b = flip(tb.corner_b);
        for (auto & q : tb.positions) {
            q.position = flip(q.position);
            q.witness.first = flip(q.witness.first);
            q.witness.second = flip(q.witness.second);
        }
    }
    return out;
}

} // namespace griddom
