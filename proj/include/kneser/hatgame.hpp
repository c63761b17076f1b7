#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "kneser/element_set.hpp"
#include "kneser/labeling.hpp"
#include "kneser/params.hpp"

namespace kneser {

struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long num, long long den) {
        Rational r{num, den};
        r.normalize();
        return r;
    }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

// Optimal two-player winning probability: min(1, (g1+g2) / C(t+d,d)).
Rational win_probability_bound(int t, int d, int g1, int g2);

enum class Role { Player1, Player2 };

// Two players, t hats each from v distinct colors, d colors undealt.
// Player 1 holds the colors A, Player 2 holds B; the deal is the edge
// (A, [v]-B) of H(v,t). Player 1 sees B, Player 2 sees A; each must name
// their own color set. The strategy follows the labeled 1-factors: by
// prior agreement Player 1 plays labels {1..g1} and Player 2 plays
// {g1+1..g1+g2} (clipped to the label range).
struct GameConfig {
    GameParams params;
    int g1 = 0;
    int g2 = 0;
    LabelingTable strategy;
};

// One guess per label: the partner vertex along that label's 1-factor
// from the vertex the player knows, converted to the player's own colors.
std::vector<ElementSet> strategy_guesses(const ElementSet& observed_other_hand,
                                         const std::vector<int>& my_labels,
                                         const LabelingTable& strategy, Role role);

// Enumerates every deal (deals are exactly the edges of H(v,t), uniformly)
// and plays both players' guesses honestly. Verifies the strategy table up
// front.
Rational simulate_exact(const GameConfig& config);

struct MonteCarloResult {
    std::uint64_t wins = 0;
    std::uint64_t trials = 0;
    double rate = 0.0;
};

// Same game on `trials` pseudo-random deals. The generator is a seeded
// std::mt19937_64 (bit-exact across platforms by the standard) with
// rejection-sampled bounded draws, so results depend only on the seed.
MonteCarloResult simulate_monte_carlo(const GameConfig& config, std::uint64_t trials,
                                      std::uint64_t seed);

}  // namespace kneser
