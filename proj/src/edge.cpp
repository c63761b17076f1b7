#include "kneser/edge.hpp"

#include "kneser/combinatorics.hpp"
#include "kneser/error.hpp"

namespace kneser {

GameParams EdgePermutation::params() const {
    int circles = 0, triangles = 0, crosses = 0;
    for (Mark m : marks) {
        if (m == Mark::Circle) ++circles;
        else if (m == Mark::Triangle) ++triangles;
        else ++crosses;
    }
    require(circles == triangles, "invalid permutation: circle and triangle counts differ");
    require(circles >= 1, "invalid permutation: need at least one circle");
    require(crosses >= 1, "invalid permutation: need at least one cross");
    return GameParams{size(), circles, crosses};
}

std::string EdgePermutation::to_string() const {
    std::string out;
    out.reserve(marks.size());
    for (Mark m : marks)
        out.push_back(m == Mark::Circle ? 'o' : m == Mark::Triangle ? '^' : 'x');
    return out;
}

EdgePermutation EdgePermutation::parse(std::string_view text) {
    EdgePermutation rho;
    rho.marks.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'o': rho.marks.push_back(Mark::Circle); break;
            case '^': rho.marks.push_back(Mark::Triangle); break;
            case 'x': rho.marks.push_back(Mark::Cross); break;
            default: fail("permutation literal: expected characters o, ^, x");
        }
    }
    return rho;
}

EdgePermutation edge_to_perm(const ElementSet& a, const ElementSet& a_prime) {
    const int v = a.ground();
    require(v == a_prime.ground(), "invalid edge: ground set mismatch");
    require(a.subset_of(a_prime), "invalid edge: A must be contained in A'");
    const int t = a.size();
    require(t >= 1, "invalid edge: |A| must be >= 1");
    require(a_prime.size() == v - t, "invalid edge: |A'| must be v - |A|");
    require(v - 2 * t >= 1, "invalid edge: need |A| < v/2");

    EdgePermutation rho;
    rho.marks.assign(static_cast<std::size_t>(v), Mark::Triangle);
    for (int x : a.elements()) rho.set(x, Mark::Circle);
    for (int x : (a_prime - a).elements()) rho.set(x, Mark::Cross);
    return rho;
}

std::pair<ElementSet, ElementSet> perm_to_edge(const EdgePermutation& rho) {
    const GameParams p = rho.params();
    ElementSet a(p.v), a_prime(p.v);
    for (int pos = 1; pos <= p.v; ++pos) {
        if (rho.at(pos) == Mark::Circle) {
            a.insert(pos);
            a_prime.insert(pos);
        } else if (rho.at(pos) == Mark::Cross) {
            a_prime.insert(pos);
        }
    }
    return {a, a_prime};
}

EdgePermutation dual(const EdgePermutation& rho) {
    require(rho.params().d == 1, "dual: defined for d = 1 only");
    EdgePermutation out = rho;
    for (Mark& m : out.marks) {
        if (m == Mark::Circle) m = Mark::Triangle;
        else if (m == Mark::Triangle) m = Mark::Circle;
    }
    return out;
}

int cross_position(const EdgePermutation& rho) {
    require(rho.params().d == 1, "cross_position: defined for d = 1 only");
    for (int pos = 1; pos <= rho.size(); ++pos)
        if (rho.at(pos) == Mark::Cross) return pos;
    fail("cross_position: no cross found");
}

std::uint64_t edge_count(GameParams p) {
    return binomial(p.v, p.t) * binomial(p.t + p.d, p.d);
}

void for_each_edge(GameParams p,
                   const std::function<void(const ElementSet&, const ElementSet&)>& fn) {
    for_each_subset(p.v, p.t, [&](const std::vector<int>& a_elems) {
        const ElementSet a = ElementSet::from_elements(a_elems, p.v);
        const std::vector<int> comp = a.complement().elements();
        // d-subsets of A^C in lexicographic index order give A' in
        // lexicographic order for fixed A.
        for_each_subset(p.t + p.d, p.d, [&](const std::vector<int>& idx) {
            ElementSet a_prime = a;
            for (int i : idx) a_prime.insert(comp[static_cast<std::size_t>(i - 1)]);
            fn(a, a_prime);
        });
    });
}

}  // namespace kneser
