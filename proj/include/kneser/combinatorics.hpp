#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace kneser {

// Exact binomial coefficient; n <= 64 so every value fits in 64 bits.
std::uint64_t binomial(int n, int k);

// Lexicographic rank (0-based) of a strictly ascending k-subset of [v].
std::uint64_t subset_lex_rank(const std::vector<int>& elems, int v);

// Inverse of subset_lex_rank.
std::vector<int> subset_lex_unrank(std::uint64_t rank, int v, int k);

// Advance a strictly ascending k-subset of [v] to its lexicographic
// successor; returns false (leaving elems unspecified) after the last one.
bool next_subset(std::vector<int>& elems, int v);

// Calls fn on every k-subset of [v] in lexicographic order.
void for_each_subset(int v, int k,
                     const std::function<void(const std::vector<int>&)>& fn);

}  // namespace kneser
