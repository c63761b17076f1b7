#pragma once

#include "kneser/error.hpp"

namespace kneser {

// Ground sets are capped at one machine word so set algebra is O(1).
inline constexpr int kMaxGroundSet = 64;

// The triple (v, t, d) with v = 2t + d, t >= 1, d >= 1 (so t < v/2).
// Vertices of H(v,t) are the t-element and (v-t)-element subsets of [v].
struct GameParams {
    int v = 0;
    int t = 0;
    int d = 0;

    static GameParams from_vt(int v, int t) {
        require(t >= 1, "subset size t must be >= 1");
        require(v >= 2 * t + 1, "need t < v/2, i.e. v >= 2t+1");
        return GameParams{v, t, v - 2 * t};
    }

    bool operator==(const GameParams&) const = default;
};

// Remainder restricted to [m] = {1..m}: value mod m with 0 mapped to m.
// Every "mod (t+1)" in label arithmetic goes through this helper so the
// convention cannot drift between modules.
inline int restrict_mod(long long value, int m) {
    long long r = value % m;
    if (r < 0) r += m;
    return r == 0 ? m : static_cast<int>(r);
}

// Plain nonnegative remainder in {0..m-1}.
inline int floor_mod(long long value, int m) {
    long long r = value % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

}  // namespace kneser
