#pragma once

#include <vector>

#include "kneser/edge.hpp"
#include "kneser/element_set.hpp"
#include "kneser/labeling.hpp"

namespace kneser {

// Position bookkeeping for the modular labelers (d = 1): sorted circle and
// triangle positions, the cross position, and the rank of the cross when
// enumerating {triangle, cross} (resp. {circle, cross}) from position 2t+1
// down to 1.
struct ModularView {
    std::vector<int> circle_positions;
    std::vector<int> triangle_positions;
    int cross_position = 0;
    int rank_ccw_triangle = 0;
    int rank_ccw_circle = 0;

    static ModularView of(const EdgePermutation& rho);
};

// The i-th modular partner of A: with y = (sum(A) + i) mod (t+1) in [t+1],
// adds the y-th largest element of [v]-A.
ElementSet modular_match(const ElementSet& a, int label);

// Inverse query: with x = (sum(A') + i) mod (t+1) in [t+1], removes the
// x-th smallest element of A'.
ElementSet modular_match_inv(const ElementSet& a_prime, int label);

// Labeling function of the modular factors, computed from the cross rank
// among triangles minus the circle position sum. In debug builds the
// equivalent circle-rank form is cross-checked.
int modular_label(const EdgePermutation& rho);

int modular_label_by_triangle_rank(const ModularView& view);
int modular_label_by_circle_rank(const ModularView& view);

// Alternative labeler: the number of (cross, circle, triangle) tuples in
// clockwise cyclic order, i.e. circle-before-triangle inversions after
// cutting at the cross; mod (t+1), restricted to [t+1]. Differs from
// modular_label by the fixed constant 0 (t even) or (t+1)/2 (t odd).
int modular_label_inversions(const EdgePermutation& rho);

// Swaps the cross with the nearest circle/triangle in the given direction;
// the target always exists cyclically. Labels shift by exactly one step.
EdgePermutation modular_variation_step(const EdgePermutation& rho, SwapKind kind);

// The full modular labeling table of H(2t+1, t).
LabelingTable modular_table(GameParams p);

}  // namespace kneser
