#pragma once

// Permutations of the first half of a block coloring and the shift maps that
// re-index them so that overlapping stamped blocks agree.

#include <span>
#include <vector>

#include "griddom/error.hpp"

namespace griddom {

/// A bijection on {1..n}, stored densely. Construction checks bijectivity.
class Permutation
{
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(images_.size()); }

    /// Image of x, 1-based. Throws ParameterError when x is outside 1..n.
    int operator()(int x) const;

    std::span<const int> images() const noexcept { return images_; }

    Permutation inverse() const;

    friend bool operator==(const Permutation &, const Permutation &) = default;

private:
    std::vector<int> images_;
};

/// (k+1)(k+2)/2, the half-size of the square-ish block G_{k+1,k+2}.
int full_block_half_size(int k);

/// x mod (k+1), except that multiples of k+1 map to k+1.
int modified_remainder(int x, int k);

/// Reverses the prefix of length s*block_height:
/// out(x) = f(s*rho + 1 - x) for x <= s*rho, f(x) otherwise.
Permutation h_shift(const Permutation & f, int s, int block_height);

/// The five-case row-shift map for blocks of height k+1. Requires
/// f.size() == (k+1)(k+2)/2 and 1 <= t <= floor((k+1)/2).
Permutation v_shift(const Permutation & f, int t, int k);

/// (g o f)(x) = g(f(x)).
Permutation compose(const Permutation & g, const Permutation & f);

/// True iff v_t(h_s(f)) == h_s(v_t(f)) with h taken at block height k+1.
bool commute_check(const Permutation & f, int s, int t, int k);

} // namespace griddom
