#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <sstream>

#include "kneser/combinatorics.hpp"
#include "kneser/lexical.hpp"
#include "kneser/modular.hpp"
#include "kneser/resolvable.hpp"

using namespace kneser;

namespace {

PerpendicularArray tiny_cpa() {
    PerpendicularArray pa;
    pa.t = 1;
    pa.k = 2;
    pa.v = 3;
    pa.complete_flag = true;
    pa.rows = {{1, 2}, {2, 3}, {3, 1}};
    return pa;
}

ResolvedFamily lexical_family(int t) {
    return family_from_labeling(lexical_table(GameParams::from_vt(2 * t + 1, t)));
}

ResolvedFamily modular_family(int t) {
    return family_from_labeling(modular_table(GameParams::from_vt(2 * t + 1, t)));
}

PerpendicularArray canonicalized(PerpendicularArray pa) {
    // Row order of cpa_from_family: sorted by the complement set A.
    std::sort(pa.rows.begin(), pa.rows.end(),
              [&](const std::vector<int>& lhs, const std::vector<int>& rhs) {
                  auto key = [&](const std::vector<int>& row) {
                      ElementSet support(pa.v);
                      for (int x : row) support.insert(x);
                      return support.complement().elements();
                  };
                  return key(lhs) < key(rhs);
              });
    return pa;
}

}  // namespace

TEST_CASE("colex subset bijection is the natural one for d = 1") {
    const SubsetBijection gamma = SubsetBijection::colex(4, 1);
    for (int x = 1; x <= 4; ++x) {
        CHECK(gamma.label_of(ElementSet::of({x}, 4)) == x);
        CHECK(gamma.subset_of(x) == ElementSet::of({x}, 4));
    }
}

TEST_CASE("colex subset bijection round-trips for d = 2") {
    const SubsetBijection gamma = SubsetBijection::colex(5, 2);
    std::vector<bool> hit(static_cast<std::size_t>(gamma.count()), false);
    for_each_subset(5, 2, [&](const std::vector<int>& elems) {
        const ElementSet s = ElementSet::from_elements(elems, 5);
        const int label = gamma.label_of(s);
        CHECK(gamma.subset_of(label) == s);
        hit[static_cast<std::size_t>(label - 1)] = true;
    });
    CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
}

TEST_CASE("family labels from a fixed vertex are pairwise distinct") {
    const ResolvedFamily family = family_from_cpa(tiny_cpa());
    const SubsetBijection gamma = SubsetBijection::colex(2, 1);
    for (int a = 1; a <= 3; ++a) {
        const ElementSet vertex = ElementSet::of({a}, 3);
        std::vector<int> labels;
        for (int x : vertex.complement().elements())
            labels.push_back(family_label(family, gamma, vertex, vertex.with(x)));
        std::sort(labels.begin(), labels.end());
        CHECK(labels == std::vector<int>{1, 2});
    }
}

TEST_CASE("the lexical family with the natural bijection reproduces the lexical table") {
    const GameParams p = GameParams::from_vt(5, 2);
    const LabelingTable table = lexical_table(p);
    const LabelingTable rebuilt =
        family_table(family_from_labeling(table), SubsetBijection::colex(p.t + p.d, p.d));
    CHECK(rebuilt == table);
}

TEST_CASE("the modular family reproduces the modular table at t = 3") {
    const GameParams p = GameParams::from_vt(7, 3);
    const LabelingTable table = modular_table(p);
    const LabelingTable rebuilt =
        family_table(family_from_labeling(table), SubsetBijection::colex(p.t + p.d, p.d));
    CHECK(rebuilt == table);
}

TEST_CASE("families read off verified d = 1 tables pass the injectivity criterion") {
    for (int t = 1; t <= 5; ++t) CHECK(check_resolved_family(lexical_family(t)).ok);
    CHECK(check_resolved_family(modular_family(3)).ok);
    CHECK(check_resolved_family(family_from_cpa(tiny_cpa())).ok);
}

TEST_CASE("the identity-order family on H(6,2) fails with a witness") {
    const GameParams p = GameParams::from_vt(6, 2);
    ResolvedFamily family = ResolvedFamily::empty(p);
    for (auto& row : family.values) std::iota(row.begin(), row.end(), 1);
    const FamilyCheck check = check_resolved_family(family);
    CHECK_FALSE(check.ok);
    CHECK(check.first_a != check.second_a);
    CHECK(check.first_a.subset_of(check.a_prime));
    CHECK(check.second_a.subset_of(check.a_prime));
    // The witness is genuine: both vertices map their cross sets to the
    // same value subset.
    CHECK(family.image(check.first_a, check.a_prime - check.first_a) ==
          family.image(check.second_a, check.a_prime - check.second_a));
}

TEST_CASE("injectivity criterion matches full verification for several bijections") {
    const GameParams p = GameParams::from_vt(5, 1);  // d = 3
    const auto n = binomial(p.t + p.d, p.d);

    std::vector<int> reversed(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < reversed.size(); ++i)
        reversed[i] = static_cast<int>(n - i);
    const std::vector<SubsetBijection> gammas = {
        SubsetBijection::colex(p.t + p.d, p.d),
        SubsetBijection::colex_permuted(p.t + p.d, p.d, reversed),
    };

    // A good family from a CPA, and a broken one.
    const PerpendicularArray pa = latin_pa(5);
    const ResolvedFamily good = family_from_cpa(select_columns_cpa(pa, {1, 2, 3, 4}));
    ResolvedFamily bad = good;
    std::iota(bad.values[0].begin(), bad.values[0].end(), 1);
    std::iota(bad.values[1].begin(), bad.values[1].end(), 1);

    for (const ResolvedFamily& family : {good, bad}) {
        const bool criterion = check_resolved_family(family).ok;
        for (const SubsetBijection& gamma : gammas)
            CHECK(criterion == verify_factorization(family_table(family, gamma)).ok());
    }
}

TEST_CASE("verify_pa accepts the tiny complete array and the latin squares") {
    CHECK(verify_pa(tiny_cpa()).ok);
    CHECK(verify_cpa(tiny_cpa()).ok);
    for (int v = 2; v <= 12; ++v) CHECK(verify_pa(latin_pa(v)).ok);
}

TEST_CASE("latin_pa rows are the cyclic shifts") {
    const PerpendicularArray pa = latin_pa(3);
    CHECK(pa.rows == std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
}

TEST_CASE("verify_cpa flags a repeated row support") {
    PerpendicularArray pa = tiny_cpa();
    pa.rows[2] = {2, 1};  // same support as row 1
    const PaReport report = verify_cpa(pa);
    CHECK_FALSE(report.ok);
    CHECK(report.message.find("support") != std::string::npos);
}

TEST_CASE("verify_pa flags a duplicated projection") {
    PerpendicularArray pa;
    pa.t = 1;
    pa.k = 2;
    pa.v = 3;
    pa.rows = {{1, 2}, {1, 3}, {3, 1}};  // column 1 repeats value 1
    const PaReport report = verify_pa(pa);
    CHECK_FALSE(report.ok);
}

TEST_CASE("column selection from the latin square gives the tiny complete array") {
    const PerpendicularArray cpa = select_columns_cpa(latin_pa(3), {1, 2});
    CHECK(cpa.rows == tiny_cpa().rows);
    CHECK(verify_cpa(cpa).ok);
}

TEST_CASE("every column choice at (t,d) = (1,1) yields a valid complete array") {
    const PerpendicularArray pa = latin_pa(3);
    for_each_subset(3, 2, [&](const std::vector<int>& cols) {
        CHECK(verify_cpa(select_columns_cpa(pa, cols)).ok);
    });
}

TEST_CASE("family_from_cpa on the tiny array gives the expected bijections") {
    const ResolvedFamily family = family_from_cpa(tiny_cpa());
    CHECK(family.value(ElementSet::of({3}, 3), 1) == 1);
    CHECK(family.value(ElementSet::of({3}, 3), 2) == 2);
    CHECK(family.value(ElementSet::of({1}, 3), 2) == 1);
    CHECK(family.value(ElementSet::of({1}, 3), 3) == 2);
    CHECK(family.value(ElementSet::of({2}, 3), 3) == 1);
    CHECK(family.value(ElementSet::of({2}, 3), 1) == 2);
}

TEST_CASE("family_from_cpa rejects non-complete input") {
    PerpendicularArray pa = tiny_cpa();
    pa.rows[2] = {2, 1};
    CHECK_THROWS_AS(family_from_cpa(pa), Error);
}

TEST_CASE("the tiny array induces a verified factorization of H(3,1)") {
    const ResolvedFamily family = family_from_cpa(tiny_cpa());
    const LabelingTable table = family_table(family, SubsetBijection::colex(2, 1));
    CHECK(verify_factorization(table).ok());
}

TEST_CASE("lexical and modular families at t = 3 export verified CPA(3,4,7)") {
    const PerpendicularArray lex = cpa_from_family(lexical_family(3));
    const PerpendicularArray mod = cpa_from_family(modular_family(3));
    CHECK(verify_cpa(lex).ok);
    CHECK(verify_cpa(mod).ok);
    CHECK(lex.rows != mod.rows);
}

TEST_CASE("family -> array -> family is the identity") {
    for (int t = 1; t <= 4; ++t) {
        const ResolvedFamily family = lexical_family(t);
        CHECK(family_from_cpa(cpa_from_family(family)) == family);
    }
}

TEST_CASE("array -> family -> array is the identity on canonical arrays") {
    const PerpendicularArray cpa = canonicalized(tiny_cpa());
    CHECK(cpa_from_family(family_from_cpa(cpa)) == cpa);

    const PerpendicularArray rao_cpa =
        canonicalized(select_columns_cpa(rao_pa(7), {1, 2, 3, 4, 5}));
    CHECK(cpa_from_family(family_from_cpa(rao_cpa)).rows == rao_cpa.rows);
}

TEST_CASE("cpa_from_family rejects families failing the criterion") {
    const GameParams p = GameParams::from_vt(6, 2);
    ResolvedFamily family = ResolvedFamily::empty(p);
    for (auto& row : family.values) std::iota(row.begin(), row.end(), 1);
    CHECK_THROWS_AS(cpa_from_family(family), Error);
}

TEST_CASE("rao_pa(7) is a verified PA(2,7,7) whose column selections resolve H(7,2)") {
    const PerpendicularArray pa = rao_pa(7);
    CHECK(pa.rows.size() == 21);
    CHECK(verify_pa(pa).ok);

    const PerpendicularArray cpa = select_columns_cpa(pa, {1, 2, 3, 4, 5});
    CHECK(verify_cpa(cpa).ok);
    const ResolvedFamily family = family_from_cpa(cpa);
    CHECK(check_resolved_family(family).ok);
    const LabelingTable table = family_table(family, SubsetBijection::colex(5, 3));
    CHECK(verify_factorization(table).ok());
}

TEST_CASE("rao_pa works across both residue classes and rejects bad q") {
    CHECK(verify_pa(rao_pa(5)).ok);   // q = 1 mod 4
    CHECK(verify_pa(rao_pa(9)).ok);   // prime power, 1 mod 4
    CHECK(verify_pa(rao_pa(11)).ok);  // q = 3 mod 4
    CHECK(verify_pa(rao_pa(13)).ok);
    CHECK_THROWS_AS(rao_pa(6), Error);
    CHECK_THROWS_AS(rao_pa(8), Error);
    CHECK_THROWS_AS(rao_pa(15), Error);
    CHECK_THROWS_AS(rao_pa(3), Error);
}

TEST_CASE("theorem-style pipeline: CPA to verified factorization across parameter pairs") {
    struct Case {
        int t, d;
        PerpendicularArray cpa;
    };
    std::vector<Case> cases;
    cases.push_back({1, 1, select_columns_cpa(latin_pa(3), {1, 2})});
    cases.push_back({1, 2, select_columns_cpa(latin_pa(4), {1, 3, 4})});
    cases.push_back({2, 1, select_columns_cpa(rao_pa(5), {2, 3, 5})});
    cases.push_back({2, 3, select_columns_cpa(rao_pa(7), {1, 2, 4, 6, 7})});
    cases.push_back({3, 1, cpa_from_family(lexical_family(3))});

    for (const Case& c : cases) {
        const ResolvedFamily family = family_from_cpa(c.cpa);
        CHECK(check_resolved_family(family).ok);
        const LabelingTable table =
            family_table(family, SubsetBijection::colex(c.t + c.d, c.d));
        CHECK(verify_factorization(table).ok());
    }
}

TEST_CASE("family storage is the (t+d) / C(t+d,d) fraction of a full table") {
    for (const auto& [t, d] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 3}, {3, 1}}) {
        const GameParams p = GameParams::from_vt(2 * t + d, t);
        const auto vertices = binomial(p.v, p.t);
        const std::uint64_t family_cells = vertices * static_cast<std::uint64_t>(t + d);
        const std::uint64_t table_cells = vertices * binomial(t + d, d);
        CHECK(family_cells * binomial(t + d, d) == table_cells * static_cast<std::uint64_t>(t + d));
    }
}

TEST_CASE("pa files round-trip") {
    const PerpendicularArray pa = rao_pa(7);
    std::ostringstream out;
    write_pa(out, pa);
    std::istringstream in(out.str());
    const PerpendicularArray parsed = read_pa(in);
    CHECK(parsed == pa);

    std::istringstream bad("PA 1 2\n");
    CHECK_THROWS_AS(read_pa(bad), Error);
}
