#include "kneser/hatgame.hpp"

#include <random>

#include "kneser/combinatorics.hpp"
#include "kneser/error.hpp"

namespace kneser {

Rational win_probability_bound(int t, int d, int g1, int g2) {
    require(t >= 1 && d >= 1, "win_probability_bound: need t >= 1 and d >= 1");
    require(g1 >= 0 && g2 >= 0, "win_probability_bound: guess counts must be >= 0");
    const auto n = static_cast<long long>(binomial(t + d, d));
    const long long g = g1 + g2;
    if (g >= n) return Rational::of(1, 1);
    return Rational::of(g, n);
}

std::vector<ElementSet> strategy_guesses(const ElementSet& observed_other_hand,
                                         const std::vector<int>& my_labels,
                                         const LabelingTable& strategy, Role role) {
    const GameParams p = strategy.params();
    require(observed_other_hand.ground() == p.v,
            "strategy_guesses: observed hand has the wrong ground set");
    require(observed_other_hand.size() == p.t,
            "strategy_guesses: the other player holds t hats");
    {
        std::vector<std::uint8_t> seen(strategy.n_labels(), 0);
        for (int label : my_labels) {
            require(label >= 1 && static_cast<std::uint64_t>(label) <= strategy.n_labels(),
                    "strategy_guesses: unknown label " + std::to_string(label));
            require(!seen[static_cast<std::size_t>(label - 1)],
                    "strategy_guesses: labels must be distinct");
            seen[static_cast<std::size_t>(label - 1)] = 1;
        }
    }

    std::vector<ElementSet> guesses;
    guesses.reserve(my_labels.size());
    if (role == Role::Player1) {
        // Knows A' = [v] - B; guesses own hand A along each label's factor.
        const ElementSet a_prime = observed_other_hand.complement();
        const std::vector<int> ap_elems = a_prime.elements();
        for (int label : my_labels) {
            bool found = false;
            for_each_subset(p.v - p.t, p.t, [&](const std::vector<int>& pick) {
                if (found) return;
                ElementSet a(p.v);
                for (int i : pick) a.insert(ap_elems[static_cast<std::size_t>(i - 1)]);
                if (strategy.label(a, a_prime) == label) {
                    guesses.push_back(a);
                    found = true;
                }
            });
            require(found, "strategy_guesses: no edge with label " + std::to_string(label));
        }
    } else {
        // Knows A; guesses own hand B = [v] - A' along each label's factor.
        const ElementSet a = observed_other_hand;
        const std::vector<int> comp = a.complement().elements();
        for (int label : my_labels) {
            bool found = false;
            for_each_subset(p.t + p.d, p.d, [&](const std::vector<int>& idx) {
                if (found) return;
                ElementSet a_prime = a;
                for (int i : idx) a_prime.insert(comp[static_cast<std::size_t>(i - 1)]);
                if (strategy.label(a, a_prime) == label) {
                    guesses.push_back(a_prime.complement());
                    found = true;
                }
            });
            require(found, "strategy_guesses: no edge with label " + std::to_string(label));
        }
    }
    return guesses;
}

namespace {

struct LabelSplit {
    std::vector<int> player1, player2;
};

LabelSplit agreed_labels(const GameConfig& config) {
    const auto n = static_cast<long long>(config.strategy.n_labels());
    require(config.g1 >= 0 && config.g2 >= 0, "simulate: guess counts must be >= 0");
    LabelSplit split;
    for (long long label = 1; label <= std::min<long long>(config.g1, n); ++label)
        split.player1.push_back(static_cast<int>(label));
    for (long long label = config.g1 + 1;
         label <= std::min<long long>(config.g1 + config.g2, n); ++label)
        split.player2.push_back(static_cast<int>(label));
    return split;
}

bool play_deal(const GameConfig& config, const LabelSplit& labels, const ElementSet& a,
               const ElementSet& a_prime) {
    const ElementSet b = a_prime.complement();
    for (const ElementSet& guess : strategy_guesses(b, labels.player1, config.strategy,
                                                    Role::Player1))
        if (guess == a) return true;
    for (const ElementSet& guess : strategy_guesses(a, labels.player2, config.strategy,
                                                    Role::Player2))
        if (guess == b) return true;
    return false;
}

void check_strategy(const GameConfig& config) {
    const VerifyReport report = verify_factorization(config.strategy);
    require(report.ok(), "simulate: strategy table is not a 1-factorization: " +
                             report.message);
}

// Uniform draw from {0..n-1} by rejection; stable across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = ~0ull - ~0ull % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

}  // namespace

Rational simulate_exact(const GameConfig& config) {
    check_strategy(config);
    const LabelSplit labels = agreed_labels(config);
    long long wins = 0, deals = 0;
    for_each_edge(config.params, [&](const ElementSet& a, const ElementSet& a_prime) {
        wins += play_deal(config, labels, a, a_prime);
        ++deals;
    });
    return Rational::of(wins, deals);
}

MonteCarloResult simulate_monte_carlo(const GameConfig& config, std::uint64_t trials,
                                      std::uint64_t seed) {
    require(trials >= 1, "simulate_monte_carlo: need at least one trial");
    check_strategy(config);
    const LabelSplit labels = agreed_labels(config);
    const GameParams p = config.params;

    std::mt19937_64 rng(seed);
    const std::uint64_t n_a = binomial(p.v, p.t);
    const std::uint64_t n_x = binomial(p.t + p.d, p.d);

    MonteCarloResult result;
    result.trials = trials;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const ElementSet a = ElementSet::from_elements(
            subset_lex_unrank(bounded(rng, n_a), p.v, p.t), p.v);
        const std::vector<int> comp = a.complement().elements();
        ElementSet a_prime = a;
        for (int i : subset_lex_unrank(bounded(rng, n_x), p.t + p.d, p.d))
            a_prime.insert(comp[static_cast<std::size_t>(i - 1)]);
        result.wins += play_deal(config, labels, a, a_prime);
    }
    result.rate = static_cast<double>(result.wins) / static_cast<double>(result.trials);
    return result;
}

}  // namespace kneser
