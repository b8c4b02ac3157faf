#pragma once

// Shapes the stamped construction is expected to handle, stated directly from
// the block sizes rather than through the planner's chains.

namespace coverage {

inline int half_up(int x) { return (x + 1) / 2; }

// Short side a along the block height, long side b along the block width.
inline bool oriented(int k, int a, int b)
{
    if (a <= k) {
        const int w = 2 * k - a + 3;
        return b == w || b >= w + half_up(w);
    }
    const bool rows_ok = a == k + 1 || a >= k + 1 + half_up(k + 1);
    const bool cols_ok = b == k + 2 || b >= k + 2 + half_up(k + 2);
    return rows_ok && cols_ok;
}

inline bool covered(int k, int r, int l) { return oriented(k, r, l) || oriented(k, l, r); }

// Palette the construction should reach.
inline int target_palette(int k, int r, int l)
{
    const int a = r < l ? r : l;
    if (a <= k)
        return a * (2 * k - a + 3) / 2;
    return (k + 1) * (k + 2) / 2;
}

} // namespace coverage
