#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "kneser/chains.hpp"
#include "kneser/combinatorics.hpp"
#include "kneser/labeling.hpp"
#include "kneser/lexical.hpp"

using namespace kneser;

TEST_CASE("ccw_rotate on the worked v = 10 example") {
    const ElementSet a = ElementSet::of({1, 3, 8, 9}, 10);
    CHECK(ccw_rotate(a) == ElementSet::of({2, 6, 7, 10}, 10));
    // A different enumeration order claims the same set.
    CHECK(ccw_rotate_ordered(a, {3, 9, 8, 1}) == ElementSet::of({2, 6, 7, 10}, 10));
}

TEST_CASE("ccw_rotate single element and oversize rejection") {
    CHECK(ccw_rotate(ElementSet::of({2}, 3)) == ElementSet::of({1}, 3));
    CHECK_THROWS_AS(ccw_rotate(ElementSet::of({1, 2, 3}, 4)), Error);
}

TEST_CASE("rotation is independent of the enumeration order") {
    std::mt19937_64 rng(7);
    for (int v : {6, 9, 10, 12}) {
        for (int trial = 0; trial < 25; ++trial) {
            // Random subset of size <= v/2.
            std::vector<int> pool(static_cast<std::size_t>(v));
            for (int i = 0; i < v; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
            std::shuffle(pool.begin(), pool.end(), rng);
            const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(v / 2));
            std::vector<int> elems(pool.begin(), pool.begin() + size);
            const ElementSet a =
                ElementSet::from_elements([&] {
                    std::vector<int> sorted = elems;
                    std::sort(sorted.begin(), sorted.end());
                    return sorted;
                }(), v);

            const ElementSet fixed_order = ccw_rotate(a);
            for (int shuffle = 0; shuffle < 100; ++shuffle) {
                std::shuffle(elems.begin(), elems.end(), rng);
                CHECK(ccw_rotate_ordered(a, elems) == fixed_order);
            }
        }
    }
}

TEST_CASE("rotation partners on the worked examples") {
    CHECK(rotation_partner(ElementSet::of({1, 3, 8, 9}, 10)) ==
          ElementSet::of({1, 3, 4, 5, 8, 9}, 10));
    CHECK(rotation_partner(ElementSet::of({2}, 3)) == ElementSet::of({2, 3}, 3));
}

TEST_CASE("both rotation maps are disjoint perfect matchings, v <= 10") {
    for (int v = 3; v <= 10; ++v) {
        for (int t = 1; 2 * t < v; ++t) {
            const GameParams p = GameParams::from_vt(v, t);
            std::vector<std::pair<ElementSet, ElementSet>> ccw, cw;
            bool share_edge = false;
            for_each_subset(v, t, [&](const std::vector<int>& elems) {
                const ElementSet a = ElementSet::from_elements(elems, v);
                const ElementSet ccw_partner = rotation_partner(a);
                const ElementSet cw_partner = rotation_partner_cw(a);
                CHECK(a.subset_of(ccw_partner));
                CHECK(a.subset_of(cw_partner));
                share_edge |= ccw_partner == cw_partner;
                ccw.push_back({a, ccw_partner});
                cw.push_back({a, cw_partner});
            });
            CHECK(is_perfect_matching(p, ccw));
            CHECK(is_perfect_matching(p, cw));
            CHECK_FALSE(share_edge);
        }
    }
}

TEST_CASE("chain through the worked v = 10 example") {
    const std::vector<ElementSet> chain = chain_of(ElementSet::of({1, 3, 8, 9}, 10));
    const std::vector<ElementSet> expected = {
        ElementSet::of({3, 8, 9}, 10),
        ElementSet::of({1, 3, 8, 9}, 10),
        ElementSet::of({1, 3, 4, 8, 9}, 10),
        ElementSet::of({1, 3, 4, 5, 8, 9}, 10),
        ElementSet::of({1, 3, 4, 5, 8, 9, 10}, 10),
    };
    CHECK(chain == expected);
}

TEST_CASE("chain through the empty set on [2]") {
    const std::vector<ElementSet> chain = chain_of(ElementSet(2));
    CHECK(chain.size() == 3);
    CHECK(chain[0] == ElementSet(2));
    CHECK(chain[1] == ElementSet::of({1}, 2));
    CHECK(chain[2] == ElementSet::of({1, 2}, 2));
}

TEST_CASE("chains partition the subset lattice and are symmetric, v <= 12") {
    for (int v = 1; v <= 12; ++v) {
        std::map<std::uint64_t, std::vector<ElementSet>> by_head;
        std::uint64_t member_total = 0;
        for (std::uint64_t bits = 0; bits < (1ull << v); ++bits) {
            ElementSet a(v);
            for (int x = 1; x <= v; ++x)
                if ((bits >> (x - 1)) & 1) a.insert(x);
            const std::vector<ElementSet> chain = chain_of(a);
            CHECK(std::find(chain.begin(), chain.end(), a) != chain.end());
            // Symmetric: sizes run from s to v-s in steps of one.
            CHECK(chain.front().size() + chain.back().size() == v);
            const auto [it, inserted] = by_head.emplace(chain.front().bits(), chain);
            if (inserted)
                member_total += chain.size();
            else
                CHECK(it->second == chain);
        }
        CHECK(member_total == (1ull << v));
        CHECK(by_head.size() == binomial(v, v / 2));
    }
}

TEST_CASE("chain partner on the worked examples") {
    CHECK(chain_partner(ElementSet::of({1, 3, 4, 8, 9}, 11)) ==
          ElementSet::of({1, 3, 4, 5, 8, 9}, 11));
    CHECK(chain_partner(ElementSet::of({3, 8, 9}, 10)) ==
          ElementSet::of({1, 3, 4, 5, 8, 9, 10}, 10));
}

TEST_CASE("the chain partner equals the rotation partner everywhere, v <= 12") {
    for (int v = 2; v <= 12; ++v) {
        for (int t = 1; 2 * t < v; ++t) {
            for_each_subset(v, t, [&](const std::vector<int>& elems) {
                const ElementSet a = ElementSet::from_elements(elems, v);
                CHECK(chain_partner(a) == rotation_partner(a));
            });
        }
    }
}

TEST_CASE("at v = 2t+1 the rotation maps are the top and bottom lexical factors, t <= 6") {
    for (int t = 1; t <= 6; ++t) {
        const int v = 2 * t + 1;
        for_each_subset(v, t, [&](const std::vector<int>& elems) {
            const ElementSet a = ElementSet::from_elements(elems, v);
            CHECK(lexical_label_direct(edge_to_perm(a, rotation_partner(a))) == t + 1);
            CHECK(lexical_label_direct(edge_to_perm(a, rotation_partner_cw(a))) == t);
        });
    }
}
