#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "kneser/element_set.hpp"
#include "kneser/params.hpp"

namespace kneser {

enum class Mark : std::uint8_t { Circle, Triangle, Cross };

// An edge (A, A') of H(v,t) as a length-v sequence over {circle, triangle,
// cross}: circles at the positions of A, triangles at [v]-A', crosses at
// A'-A. Counts are (t, t, d).
struct EdgePermutation {
    std::vector<Mark> marks;  // marks[i] is position i+1

    int size() const { return static_cast<int>(marks.size()); }
    Mark at(int pos) const { return marks[static_cast<std::size_t>(pos - 1)]; }
    void set(int pos, Mark m) { marks[static_cast<std::size_t>(pos - 1)] = m; }

    // Derives (v,t,d) from the character counts; invalid-permutation error
    // if the counts do not fit any valid parameter triple.
    GameParams params() const;

    // "(x,o,^)"-free display: uses o, ^, x for circle, triangle, cross.
    std::string to_string() const;
    static EdgePermutation parse(std::string_view text);

    bool operator==(const EdgePermutation&) const = default;
};

EdgePermutation edge_to_perm(const ElementSet& a, const ElementSet& a_prime);

std::pair<ElementSet, ElementSet> perm_to_edge(const EdgePermutation& rho);

// Swaps circles with triangles (crosses stay); an involution. d = 1 only.
EdgePermutation dual(const EdgePermutation& rho);

// Position of the unique cross; d = 1 only.
int cross_position(const EdgePermutation& rho);

// The four cross-swap moves shared by the lexical and modular variation laws.
enum class SwapKind { CwTriangle, CwCircle, CcwTriangle, CcwCircle };

std::uint64_t edge_count(GameParams p);

// Yields every edge exactly once, lexicographic by A and then by A'.
void for_each_edge(GameParams p,
                   const std::function<void(const ElementSet&, const ElementSet&)>& fn);

}  // namespace kneser
