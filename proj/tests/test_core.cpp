#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "kneser/edge.hpp"
#include "kneser/labeling.hpp"
#include "kneser/lexical.hpp"
#include "kneser/modular.hpp"

using namespace kneser;

TEST_CASE("edge_to_perm on the small worked cases") {
    CHECK(edge_to_perm(ElementSet::of({2}, 3), ElementSet::of({2, 3}, 3)).to_string() ==
          "^ox");
    CHECK(edge_to_perm(ElementSet::of({2, 4, 6}, 7), ElementSet::of({2, 4, 6, 7}, 7))
              .to_string() == "^o^o^ox");
    CHECK(edge_to_perm(ElementSet::of({1}, 4), ElementSet::of({1, 2, 3}, 4)).to_string() ==
          "oxx^");
}

TEST_CASE("edge_to_perm rejects invalid edges") {
    CHECK_THROWS_AS(edge_to_perm(ElementSet::of({1}, 3), ElementSet::of({2, 3}, 3)), Error);
    CHECK_THROWS_AS(edge_to_perm(ElementSet::of({1, 2}, 4), ElementSet::of({1, 2, 3}, 4)),
                    Error);
    // Wrong |A'|.
    CHECK_THROWS_AS(edge_to_perm(ElementSet::of({1}, 5), ElementSet::of({1, 2}, 5)), Error);
}

TEST_CASE("perm_to_edge inverts the worked cases") {
    auto [a1, b1] = perm_to_edge(EdgePermutation::parse("^ox"));
    CHECK(a1 == ElementSet::of({2}, 3));
    CHECK(b1 == ElementSet::of({2, 3}, 3));

    auto [a2, b2] = perm_to_edge(EdgePermutation::parse("^o^o^ox"));
    CHECK(a2 == ElementSet::of({2, 4, 6}, 7));
    CHECK(b2 == ElementSet::of({2, 4, 6, 7}, 7));

    auto [a3, b3] = perm_to_edge(EdgePermutation::parse("xo^"));
    CHECK(a3 == ElementSet::of({2}, 3));
    CHECK(b3 == ElementSet::of({1, 2}, 3));
}

TEST_CASE("perm_to_edge rejects malformed counts") {
    CHECK_THROWS_AS(perm_to_edge(EdgePermutation::parse("oox")), Error);
    CHECK_THROWS_AS(perm_to_edge(EdgePermutation::parse("o^")), Error);
    CHECK_THROWS_AS(perm_to_edge(EdgePermutation::parse("o^o^")), Error);
}

TEST_CASE("round trip perm_to_edge after edge_to_perm is the identity, v <= 10") {
    for (int v = 3; v <= 10; ++v) {
        for (int t = 1; 2 * t < v; ++t) {
            const GameParams p = GameParams::from_vt(v, t);
            for_each_edge(p, [&](const ElementSet& a, const ElementSet& a_prime) {
                const auto [back_a, back_b] = perm_to_edge(edge_to_perm(a, a_prime));
                CHECK(back_a == a);
                CHECK(back_b == a_prime);
            });
        }
    }
}

TEST_CASE("enumerate_edges counts and order") {
    auto count = [](GameParams p) {
        std::uint64_t n = 0;
        for_each_edge(p, [&](const ElementSet&, const ElementSet&) { ++n; });
        return n;
    };
    CHECK(count(GameParams::from_vt(3, 1)) == 6);
    CHECK(count(GameParams::from_vt(4, 1)) == 12);
    CHECK(count(GameParams::from_vt(7, 3)) == 140);
    CHECK(edge_count(GameParams::from_vt(7, 3)) == 140);

    // Lexicographic by A, then by A'.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> seen;
    for_each_edge(GameParams::from_vt(4, 1), [&](const ElementSet& a, const ElementSet& b) {
        seen.push_back({a.elements(), b.elements()});
    });
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(seen.front().first == std::vector<int>{1});
    CHECK(seen.front().second == std::vector<int>{1, 2, 3});
    CHECK(seen.back().second == std::vector<int>{2, 3, 4});
}

TEST_CASE("verify_factorization accepts the classic tables") {
    CHECK(verify_factorization(lexical_table(GameParams::from_vt(5, 2))).ok());
    CHECK(verify_factorization(modular_table(GameParams::from_vt(7, 3))).ok());
}

TEST_CASE("verify_factorization flags a constant labeling") {
    const GameParams p = GameParams::from_vt(3, 1);
    const LabelingTable constant =
        LabelingTable::build(p, [](const ElementSet&, const ElementSet&) { return 1; });
    const VerifyReport report = verify_factorization(constant);
    CHECK_FALSE(report.ok());
    CHECK(report.status == VerifyReport::Status::SameCircleClash);
    CHECK(report.first.a == report.second.a);
    CHECK(report.first.a_prime != report.second.a_prime);
}

TEST_CASE("verify_factorization throws on a partial table") {
    const GameParams p = GameParams::from_vt(3, 1);
    LabelingTable partial(p);
    partial.set_label(ElementSet::of({1}, 3), ElementSet::of({1, 2}, 3), 1);
    CHECK_THROWS_AS(verify_factorization(partial), Error);
}

TEST_CASE("label classes of a verified table are perfect matchings, label range holds") {
    for (int t = 1; t <= 3; ++t) {
        const GameParams p = GameParams::from_vt(2 * t + 1, t);
        const LabelingTable table = lexical_table(p);
        std::vector<std::vector<std::pair<ElementSet, ElementSet>>> classes(
            table.n_labels());
        for_each_edge(p, [&](const ElementSet& a, const ElementSet& b) {
            const int label = table.label(a, b);
            CHECK(label >= 1);
            CHECK(static_cast<std::uint64_t>(label) <= table.n_labels());
            classes[static_cast<std::size_t>(label - 1)].push_back({a, b});
        });
        for (const auto& factor : classes) CHECK(is_perfect_matching(p, factor));
    }
}

TEST_CASE("dump round trip is byte-identical and verifies") {
    const LabelingTable table = modular_table(GameParams::from_vt(5, 2));
    std::ostringstream first;
    write_dump(first, table);
    std::istringstream in(first.str());
    const LabelingTable parsed = read_dump(in);
    CHECK(parsed == table);
    std::ostringstream second;
    write_dump(second, parsed);
    CHECK(first.str() == second.str());
    CHECK(verify_factorization(parsed).ok());
}
