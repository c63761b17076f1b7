#pragma once

#include <vector>

#include "kneser/element_set.hpp"

namespace kneser {

// Rotating sets: for each a in A (ascending), walk counterclockwise
// (resp. clockwise) around the cycle 1..v and claim the first number not
// yet in A or the output. The result does not depend on the enumeration
// order; the ordered variant exists to property-test exactly that.
ElementSet ccw_rotate(const ElementSet& a);
ElementSet cw_rotate(const ElementSet& a);
ElementSet ccw_rotate_ordered(const ElementSet& a, const std::vector<int>& order);

// The two rotation 1-factors of H(v,t): A -> [v] - ccw_rotate(A) and
// A -> [v] - cw_rotate(A). Both contain A; at v = 2t+1 they coincide with
// the lexical factors labeled t+1 and t.
ElementSet rotation_partner(const ElementSet& a);
ElementSet rotation_partner_cw(const ElementSet& a);

// The symmetric chain through A in the subset lattice: all subsets whose
// parenthesis words share A's paired parentheses, ascending by size. The
// members add the unpaired positions left to right.
std::vector<ElementSet> chain_of(const ElementSet& a);

// The antipodal partner of A: the member of A's chain with v-|A| elements.
ElementSet chain_partner(const ElementSet& a);

}  // namespace kneser
