#include "kneser/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

#include "kneser/combinatorics.hpp"
#include "kneser/error.hpp"

namespace kneser {

namespace {

using Clock = std::chrono::steady_clock;

struct Constraint {
    std::uint32_t a_prime_rank;
    std::uint32_t position_mask;  // d-subset of A^C as bits over 0..m-1
};

struct Searcher {
    GameParams p;
    int m = 0;                                   // t + d, codomain size
    std::vector<std::vector<Constraint>> per_a;  // by rank of A
    std::vector<std::vector<int>> perms;         // candidate assignments, lex order
    std::vector<int> mask_rank;                  // value mask -> d-subset id
    std::vector<std::uint64_t> claimed;          // by rank of A', bit per d-subset id
    std::vector<int> chosen;                     // perm index per A, -1 = unassigned
    SearchOptions opts;
    SearchOutcome out;
    Clock::time_point deadline;
    bool stop = false;

    void build() {
        m = p.t + p.d;
        const auto n_a = static_cast<std::size_t>(binomial(p.v, p.t));
        per_a.resize(n_a);
        for_each_subset(p.v, p.t, [&](const std::vector<int>& a_elems) {
            const ElementSet a = ElementSet::from_elements(a_elems, p.v);
            const std::vector<int> comp = a.complement().elements();
            auto& constraints = per_a[static_cast<std::size_t>(subset_lex_rank(a_elems, p.v))];
            for_each_subset(m, p.d, [&](const std::vector<int>& idx) {
                ElementSet a_prime = a;
                std::uint32_t mask = 0;
                for (int i : idx) {
                    a_prime.insert(comp[static_cast<std::size_t>(i - 1)]);
                    mask |= 1u << (i - 1);
                }
                constraints.push_back(
                    {static_cast<std::uint32_t>(subset_lex_rank(a_prime.elements(), p.v)),
                     mask});
            });
        });

        std::vector<int> base(static_cast<std::size_t>(m));
        std::iota(base.begin(), base.end(), 0);
        do {
            perms.push_back(base);
        } while (std::next_permutation(base.begin(), base.end()));

        mask_rank.assign(1u << m, -1);
        int next_id = 0;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
            if (std::popcount(mask) == p.d) mask_rank[mask] = next_id++;

        claimed.assign(static_cast<std::size_t>(binomial(p.v, p.v - p.t)), 0);
        chosen.assign(n_a, -1);
    }

    std::uint64_t claim_bit(const Constraint& c, const std::vector<int>& perm) const {
        std::uint32_t value_mask = 0;
        std::uint32_t bits = c.position_mask;
        while (bits) {
            const int i = std::countr_zero(bits);
            bits &= bits - 1;
            value_mask |= 1u << perm[static_cast<std::size_t>(i)];
        }
        return 1ull << mask_rank[static_cast<std::size_t>(value_mask)];
    }

    bool feasible(std::size_t a, const std::vector<int>& perm) const {
        for (const Constraint& c : per_a[a])
            if (claimed[c.a_prime_rank] & claim_bit(c, perm)) return false;
        return true;
    }

    // Number of feasible assignments for A, counted only up to cap.
    int count_feasible(std::size_t a, int cap) const {
        int count = 0;
        for (const auto& perm : perms) {
            if (feasible(a, perm) && ++count >= cap) break;
        }
        return count;
    }

    void apply(std::size_t a, const std::vector<int>& perm) {
        for (const Constraint& c : per_a[a]) claimed[c.a_prime_rank] |= claim_bit(c, perm);
    }

    void undo(std::size_t a, const std::vector<int>& perm) {
        for (const Constraint& c : per_a[a]) claimed[c.a_prime_rank] &= ~claim_bit(c, perm);
    }

    bool over_budget() {
        if ((out.nodes & 0x3ff) == 0 && Clock::now() >= deadline) {
            out.budget_hit = true;
            stop = true;
        }
        return stop;
    }

    void record_solution() {
        ResolvedFamily family = ResolvedFamily::empty(p);
        for (std::size_t r = 0; r < chosen.size(); ++r) {
            const std::vector<int>& perm = perms[static_cast<std::size_t>(chosen[r])];
            for (int i = 0; i < m; ++i)
                family.values[r][static_cast<std::size_t>(i)] =
                    perm[static_cast<std::size_t>(i)] + 1;
        }
        // The pruning is not trusted: re-verify before emitting.
        const FamilyCheck check = check_resolved_family(family);
        if (!check.ok)
            throw std::logic_error("search_resolvable: pruning admitted an invalid family");
        out.solutions.push_back(std::move(family));
        if (static_cast<int>(out.solutions.size()) >= opts.max_solutions) stop = true;
    }

    void dfs(std::size_t depth) {
        if (stop) return;
        if (depth == per_a.size()) {
            record_solution();
            return;
        }

        // Most-constrained vertex next (ties to the smallest rank), so the
        // traversal stays deterministic while dead branches surface early.
        // The first level is pinned to the identity assignment of the
        // lexicographically first A: labels are permutable, so this loses
        // no solutions for the existence question.
        std::size_t best_a = 0;
        int best_count = static_cast<int>(perms.size()) + 1;
        if (depth > 0) {
            for (std::size_t a = 0; a < per_a.size(); ++a) {
                if (chosen[a] >= 0) continue;
                const int count = count_feasible(a, best_count);
                if (count < best_count) {
                    best_count = count;
                    best_a = a;
                    if (count == 0) return;  // dead end
                }
            }
        }

        const bool pinned = depth == 0;
        for (std::size_t pi = 0; pi < (pinned ? 1 : perms.size()); ++pi) {
            ++out.nodes;
            if (over_budget()) return;
            const std::vector<int>& perm = perms[pi];
            if (!feasible(best_a, perm)) continue;
            apply(best_a, perm);
            chosen[best_a] = static_cast<int>(pi);
            dfs(depth + 1);
            chosen[best_a] = -1;
            undo(best_a, perm);
            if (stop) return;
        }
    }
};

}  // namespace

SearchOutcome search_resolvable(GameParams p, const SearchOptions& opts) {
    require(p.v <= 10, "search_resolvable: v <= 10 (the state space explodes beyond)");
    require(opts.max_solutions >= 1, "search_resolvable: max_solutions must be >= 1");

    Searcher searcher;
    searcher.p = p;
    searcher.opts = opts;
    searcher.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(opts.budget_seconds));
    searcher.build();
    searcher.dfs(0);

    searcher.out.exhausted = !searcher.stop;
    return searcher.out;
}

}  // namespace kneser
