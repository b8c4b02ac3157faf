#include "griddom/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

#include "griddom/construct.hpp"

namespace griddom {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr int max_palette = 64;

bool single(Mask m) { return std::has_single_bit(m); }

Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::vector<std::function<Vertex(Vertex)>> dihedral_images(const GridDims & dims)
{
    const int r = dims.rows();
    const int l = dims.cols();
    std::vector<std::function<Vertex(Vertex)>> out{
        [=](Vertex v) { return Vertex{r + 1 - v.row, v.col}; },
        [=](Vertex v) { return Vertex{v.row, l + 1 - v.col}; },
        [=](Vertex v) { return Vertex{r + 1 - v.row, l + 1 - v.col}; },
    };
    if (r == l) {
        out.push_back([](Vertex v) { return Vertex{v.col, v.row}; });
        out.push_back([=](Vertex v) { return Vertex{r + 1 - v.col, r + 1 - v.row}; });
        out.push_back([=](Vertex v) { return Vertex{v.col, r + 1 - v.row}; });
        out.push_back([=](Vertex v) { return Vertex{r + 1 - v.col, v.row}; });
    }
    return out;
}

struct Model
{
    GridDims dims;
    int k;
    int t;
    Mask full;
    std::vector<std::vector<int>> balls;
    /// Branching order: ascending ball size, then row-major.
    std::vector<int> order;
    /// images[g][i] is the cell that symmetry g sends order[i] to.
    std::vector<std::vector<int>> images;

    Model(const GridDims & d, int radius, int palette, bool symmetric) :
        dims(d), k(radius), t(palette), full(low_bits(palette))
    {
        const int n = dims.cells();
        balls.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (Vertex v : ball(dims, dims.vertex(static_cast<std::size_t>(i)), k))
                balls[static_cast<std::size_t>(i)].push_back(static_cast<int>(dims.index(v)));

        order.resize(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::ranges::stable_sort(order, {}, [&](int i) { return balls[static_cast<std::size_t>(i)].size(); });

        if (symmetric)
            for (const auto & g : dihedral_images(dims)) {
                std::vector<int> image;
                for (int i : order)
                    image.push_back(static_cast<int>(dims.index(g(dims.vertex(static_cast<std::size_t>(i))))));
                images.push_back(std::move(image));
            }
    }
};

struct State
{
    std::vector<Mask> dom;
    /// Colors above this one have never been chosen by a branch and are
    /// still interchangeable.
    int max_color = 0;
};

bool propagate(const Model & m, State & s)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto & b : m.balls) {
            Mask any = 0, fixed = 0, once = 0, twice = 0;
            int open = 0;
            for (int v : b) {
                const Mask d = s.dom[static_cast<std::size_t>(v)];
                if (d == 0)
                    return false;
                any |= d;
                if (single(d)) {
                    fixed |= d;
                } else {
                    ++open;
                    twice |= once & d;
                    once |= d;
                }
            }
            if (any != m.full)
                return false;
            const Mask missing = m.full & ~fixed;
            const int need = std::popcount(missing);
            if (need > open)
                return false;
            if (need == 0)
                continue;
            const Mask unique = missing & once & ~twice;
            const bool tight = need == open;
            if (unique == 0 && !tight)
                continue;
            for (int v : b) {
                Mask & d = s.dom[static_cast<std::size_t>(v)];
                if (single(d))
                    continue;
                Mask nd = tight ? d & missing : d;
                if (const Mask u = d & unique) {
                    if (!single(u))
                        return false;
                    nd &= u;
                }
                if (nd == 0)
                    return false;
                if (nd != d) {
                    d = nd;
                    changed = true;
                }
            }
        }
    }
    return true;
}

int color_of(Mask m) { return std::countr_zero(m) + 1; }

// Prunes states where some symmetric image is already lexicographically
// smaller, comparing color-canonical prefixes over the branching order.
bool lex_leader(const Model & m, const State & s)
{
    const std::size_t n = m.order.size();
    for (const auto & image : m.images) {
        int map_a[max_palette + 1] = {};
        int map_b[max_palette + 1] = {};
        int next_a = 1, next_b = 1;
        for (std::size_t i = 0; i < n; ++i) {
            const Mask a = s.dom[static_cast<std::size_t>(m.order[i])];
            const Mask b = s.dom[static_cast<std::size_t>(image[i])];
            if (!single(a) || !single(b))
                break;
            int & ca = map_a[color_of(a)];
            int & cb = map_b[color_of(b)];
            if (ca == 0)
                ca = next_a++;
            if (cb == 0)
                cb = next_b++;
            if (cb < ca)
                return false;
            if (cb > ca)
                break;
        }
    }
    return true;
}

enum class Expansion { Dead, Solution, Branch };
enum class Outcome { Found, Exhausted, Stopped };

class Search
{
public:
    Search(const Model & model, const SolveConfig & cfg) :
        m_(model), cfg_(cfg), deadline_(Clock::now() + cfg.timeout)
    {
    }

    SolveResult run()
    {
        const auto start = Clock::now();
        State root{std::vector<Mask>(static_cast<std::size_t>(m_.dims.cells()), m_.full), 0};
        if (cfg_.workers <= 1)
            sequential(std::move(root));
        else
            parallel(std::move(root));

        SolveResult out;
        out.nodes = nodes_.load();
        out.elapsed = Clock::now() - start;
        if (solution_) {
            out.status = SolveStatus::Feasible;
            out.coloring = to_coloring(*solution_);
        } else {
            out.status = timed_out_.load() ? SolveStatus::Timeout : SolveStatus::Infeasible;
        }
        return out;
    }

private:
    void sequential(State root)
    {
        std::uint64_t local = 0;
        dfs(root, local);
    }

    void parallel(State root)
    {
        std::deque<State> frontier;
        frontier.push_back(std::move(root));
        const std::size_t target = 8 * static_cast<std::size_t>(cfg_.workers);
        std::uint64_t local = 0;
        while (!frontier.empty() && frontier.size() < target) {
            State s = std::move(frontier.front());
            frontier.pop_front();
            std::vector<State> children;
            switch (expand(s, children, local)) {
            case Expansion::Solution:
                record(s);
                return;
            case Expansion::Branch:
                for (auto & c : children)
                    frontier.push_back(std::move(c));
                break;
            case Expansion::Dead:
                break;
            }
            if (stop_.load())
                return;
        }

        std::vector<State> work(std::make_move_iterator(frontier.begin()), std::make_move_iterator(frontier.end()));
        std::atomic<std::size_t> next{0};
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < cfg_.workers; ++w)
                pool.emplace_back([&] {
                    std::uint64_t count = 0;
                    for (std::size_t i = next++; i < work.size() && !stop_.load(); i = next++)
                        if (dfs(work[i], count) != Outcome::Exhausted)
                            return;
                });
        }
    }

    Expansion expand(State & s, std::vector<State> & children, std::uint64_t & local)
    {
        const std::uint64_t total = ++nodes_;
        if ((++local & 1023) == 0 && Clock::now() >= deadline_)
            halt();
        if (cfg_.node_limit && total > *cfg_.node_limit)
            halt();

        if (!propagate(m_, s))
            return Expansion::Dead;
        if (!m_.images.empty() && !lex_leader(m_, s))
            return Expansion::Dead;

        const auto it = std::ranges::find_if(m_.order, [&](int i) { return !single(s.dom[static_cast<std::size_t>(i)]); });
        if (it == m_.order.end())
            return Expansion::Solution;

        const auto cell = static_cast<std::size_t>(*it);
        Mask options = s.dom[cell] & low_bits(std::min(s.max_color + 1, m_.t));
        while (options) {
            const Mask bit = options & (~options + 1);
            options &= options - 1;
            State child = s;
            child.dom[cell] = bit;
            child.max_color = std::max(s.max_color, color_of(bit));
            children.push_back(std::move(child));
        }
        return Expansion::Branch;
    }

    Outcome dfs(State & s, std::uint64_t & local)
    {
        if (stop_.load())
            return Outcome::Stopped;
        std::vector<State> children;
        switch (expand(s, children, local)) {
        case Expansion::Dead:
            return stop_.load() ? Outcome::Stopped : Outcome::Exhausted;
        case Expansion::Solution:
            record(s);
            return Outcome::Found;
        case Expansion::Branch:
            break;
        }
        for (auto & c : children) {
            const Outcome r = dfs(c, local);
            if (r != Outcome::Exhausted)
                return r;
        }
        return Outcome::Exhausted;
    }

    void halt()
    {
        timed_out_ = true;
        stop_ = true;
    }

    void record(const State & s)
    {
        const std::scoped_lock lock(mutex_);
        if (!solution_)
            solution_ = s;
        stop_ = true;
    }

    Coloring to_coloring(const State & s) const
    {
        std::vector<Color> cells;
        cells.reserve(s.dom.size());
        for (Mask d : s.dom)
            cells.push_back(color_of(d));
        Coloring c(m_.dims, m_.k, m_.t, std::move(cells));
        if (!verify_coloring(c).proper)
            throw Error("internal error: search produced an improper coloring");
        return c;
    }

    const Model & m_;
    const SolveConfig & cfg_;
    Clock::time_point deadline_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> stop_{false};
    std::atomic<bool> timed_out_{false};
    std::mutex mutex_;
    std::optional<State> solution_;
};

void require_config(const SolveConfig & cfg)
{
    if (cfg.workers < 1)
        throw ParameterError("workers must be at least 1");
    if (cfg.timeout.count() < 0)
        throw ParameterError("timeout must be nonnegative");
}

} // namespace

std::string_view to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::Feasible:
        return "feasible";
    case SolveStatus::Infeasible:
        return "infeasible";
    case SolveStatus::Timeout:
        return "timeout";
    }
    return "unknown";
}

SolveResult feasible(const GridDims & dims, int k, int t, const SolveConfig & cfg)
{
    require_config(cfg);
    if (k < 0)
        throw ParameterError("k must be nonnegative, got " + std::to_string(k));
    if (t < 1)
        throw ParameterError("palette must be positive, got " + std::to_string(t));
    if (t > max_palette)
        throw ParameterError("the solver supports at most " + std::to_string(max_palette) + " colors, got " +
                             std::to_string(t));
    const Model model(dims, k, t, cfg.symmetry_breaking);
    return Search(model, cfg).run();
}

DomaticResult exact_domatic_number(const GridDims & dims, int k, const SolveConfig & cfg)
{
    require_config(cfg);
    const auto start = Clock::now();
    const auto deadline = start + cfg.timeout;

    DomaticResult out;
    out.min_degree = min_k_degree(dims, k);
    std::optional<InfeasibilityEvidence> above;

    for (int t = out.min_degree; t >= 1; --t) {
        if (auto cert = find_certificate(dims, k, t)) {
            above = std::move(*cert);
            continue;
        }
        SolveConfig step = cfg;
        step.timeout = std::max(std::chrono::milliseconds{0},
                                std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now()));
        SolveResult r = feasible(dims, k, t, step);
        out.nodes += r.nodes;

        if (r.status == SolveStatus::Feasible) {
            out.status = SolveStatus::Feasible;
            out.value = out.lower = out.upper = t;
            out.witness = std::move(r.coloring);
            out.next = std::move(above);
            out.elapsed = Clock::now() - start;
            return out;
        }
        if (r.status == SolveStatus::Infeasible) {
            above = ExhaustedSearch{r.nodes};
            continue;
        }

        // Timed out at t: everything above t is settled, t itself is open.
        out.status = SolveStatus::Timeout;
        out.upper = t;
        out.lower = 1;
        if (k >= 1 && plannable(k, dims.rows(), dims.cols())) {
            Coloring c = apply_plan(plan_grid(k, dims.rows(), dims.cols()));
            out.lower = c.palette();
            out.witness = std::move(c);
        } else {
            out.witness = Coloring(dims, k, 1, std::vector<Color>(static_cast<std::size_t>(dims.cells()), 1));
        }
        out.value = out.lower;
        if (out.lower == out.upper) {
            out.status = SolveStatus::Feasible;
            out.next = std::move(above);
        }
        out.elapsed = Clock::now() - start;
        return out;
    }
    throw Error("internal error: a single color always dominates");
}

} // namespace griddom
