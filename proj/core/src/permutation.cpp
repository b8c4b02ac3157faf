#include "griddom/permutation.hpp"

#include <numeric>
#include <string>

#include "griddom/error.hpp"

namespace griddom {

Permutation::Permutation(std::vector<int> images) :
    images_(std::move(images))
{
    if (images_.empty())
        throw ParameterError("permutation domain must be nonempty");
    const int n = size();
    std::vector<bool> hit(images_.size() + 1, false);
    for (int y : images_) {
        if (y < 1 || y > n)
            throw ValidationError("permutation value " + std::to_string(y) + " outside 1.." + std::to_string(n));
        if (hit[static_cast<std::size_t>(y)])
            throw ValidationError("permutation value " + std::to_string(y) + " repeated");
        hit[static_cast<std::size_t>(y)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    if (n < 1)
        throw ParameterError("permutation domain must be nonempty");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

int Permutation::operator()(int x) const
{
    if (x < 1 || x > size())
        throw ParameterError("permutation argument " + std::to_string(x) + " outside 1.." + std::to_string(size()));
    return images_[static_cast<std::size_t>(x - 1)];
}

Permutation Permutation::inverse() const
{
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        out[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(out));
}

int full_block_half_size(int k)
{
    if (k < 1)
        throw ParameterError("k must be positive");
    return (k + 1) * (k + 2) / 2;
}

int modified_remainder(int x, int k)
{
    if (x < 1 || k < 1)
        throw ParameterError("modified_remainder needs x >= 1 and k >= 1");
    const int rem = x % (k + 1);
    return rem == 0 ? k + 1 : rem;
}

Permutation h_shift(const Permutation & f, int s, int block_height)
{
    if (s < 1 || block_height < 1)
        throw ParameterError("h_shift needs s >= 1 and a positive block height");
    const int prefix = s * block_height;
    if (prefix > f.size())
        throw ParameterError("h_shift prefix " + std::to_string(prefix) + " longer than permutation of size " +
                             std::to_string(f.size()));
    std::vector<int> out(f.images().begin(), f.images().end());
    for (int x = 1; x <= prefix; ++x)
        out[static_cast<std::size_t>(x - 1)] = f(prefix + 1 - x);
    return Permutation(std::move(out));
}

Permutation v_shift(const Permutation & f, int t, int k)
{
    const int n = full_block_half_size(k);
    if (f.size() != n)
        throw ParameterError("v_shift needs a permutation of size " + std::to_string(n) + ", got " +
                             std::to_string(f.size()));
    if (t < 1 || t > (k + 1) / 2)
        throw ParameterError("v_shift needs 1 <= t <= " + std::to_string((k + 1) / 2) + ", got " + std::to_string(t));

    // Positions up to `full_columns` fill whole columns of height k+1; the
    // rest (k odd only) are the top half of the middle column.
    const int full_columns = (k + 1) * ((k + 2) / 2);
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
        const int r = modified_remainder(x, k);
        int source;
        if (x <= full_columns) {
            if (r <= t)
                source = x + k + 1 - t;
            else if (r <= k + 1 - t)
                source = x;
            else
                source = x - k - 1 + t;
        } else {
            source = r <= t ? (k + 1) * (k + 1) + t + 1 - x : x;
        }
        out[static_cast<std::size_t>(x - 1)] = f(source);
    }
    return Permutation(std::move(out));
}

Permutation compose(const Permutation & g, const Permutation & f)
{
    if (g.size() != f.size())
        throw ParameterError("cannot compose permutations of sizes " + std::to_string(g.size()) + " and " +
                             std::to_string(f.size()));
    std::vector<int> out(static_cast<std::size_t>(f.size()));
    for (int x = 1; x <= f.size(); ++x)
        out[static_cast<std::size_t>(x - 1)] = g(f(x));
    return Permutation(std::move(out));
}

bool commute_check(const Permutation & f, int s, int t, int k)
{
    return v_shift(h_shift(f, s, k + 1), t, k) == h_shift(v_shift(f, t, k), s, k + 1);
}

} // namespace griddom
