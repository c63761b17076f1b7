#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kneser/edge.hpp"
#include "kneser/element_set.hpp"
#include "kneser/labeling.hpp"
#include "kneser/parens.hpp"

namespace kneser {

// Reference labeler, straight from the definition: the number of circles
// whose clockwise interval from the cross holds strictly more circles than
// triangles, mod (t+1) restricted to [t+1]. Quadratic on purpose; the fast
// paths below are always tested against it.
int lexical_label_direct(const EdgePermutation& rho);

// One O(t) preprocessing pass over A's parenthesis word answers, for the
// middle level graph (v = 2t+1), both directions of the label query:
//   label_of(x)            the lexical label of (A, A + {x}),
//   element_with_label(i)  the unique x with that label.
class LexicalMatcher {
public:
    // sorted_a must be strictly ascending with |A| = t, v = 2t+1. Every
    // loop iteration of the construction bumps *steps when nonnull.
    LexicalMatcher(const std::vector<int>& sorted_a, int v,
                   std::uint64_t* steps = nullptr);

    int label_of(int x) const;
    int element_with_label(int label) const;

    int v() const { return v_; }
    int t() const { return t_; }

private:
    int v_ = 0, t_ = 0;
    std::vector<int> label_by_pos_;   // [x-1]; 0 for members of A
    std::vector<int> pos_by_index_;   // index value 0..t -> position in [v]
};

// The lexical label via the canonical-shift indices (Def.-style resolved
// form); equals lexical_label_direct on the corresponding edge.
int lexical_label_resolved(const std::vector<int>& sorted_a, int x, int v);
int lexical_label_resolved(const ElementSet& a, int x);

// P1: the unique A' = A + {z} whose edge carries the given label. O(t).
std::vector<int> lexical_match(const std::vector<int>& sorted_a, int label, int v,
                               std::uint64_t* steps = nullptr);
ElementSet lexical_match(const ElementSet& a, int label);

// P2: the unique A inside A' whose edge carries the given label. Reduces
// to P1 on the complement with the co-label t - label (mod t+1). O(t).
std::vector<int> lexical_match_inv(const std::vector<int>& sorted_a_prime, int label,
                                   int v);
ElementSet lexical_match_inv(const ElementSet& a_prime, int label);

// Swaps the cross with the nearest balanced circle/triangle in the given
// direction (balanced: the cyclic interval from the cross to the character
// holds equally many circles and triangles). Returns nullopt exactly when
// no such character exists, which happens iff the label sits at t+1 (for
// CwTriangle / CcwCircle) or at t (for CwCircle / CcwTriangle).
std::optional<EdgePermutation> lexical_variation_step(const EdgePermutation& rho,
                                                      SwapKind kind);

// The full lexical labeling table of H(2t+1, t).
LabelingTable lexical_table(GameParams p);

}  // namespace kneser
