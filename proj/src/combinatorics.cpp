#include "kneser/combinatorics.hpp"

#include <array>

#include "kneser/error.hpp"
#include "kneser/params.hpp"

namespace kneser {

namespace {

struct PascalTable {
    std::array<std::array<std::uint64_t, kMaxGroundSet + 1>, kMaxGroundSet + 1> c{};
    PascalTable() {
        for (int n = 0; n <= kMaxGroundSet; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const PascalTable& pascal() {
    static const PascalTable table;
    return table;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    require(n >= 0 && n <= kMaxGroundSet, "binomial: n out of range");
    if (k < 0 || k > n) return 0;
    return pascal().c[n][k];
}

std::uint64_t subset_lex_rank(const std::vector<int>& elems, int v) {
    const int k = static_cast<int>(elems.size());
    std::uint64_t rank = 0;
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        require(elems[i] > prev && elems[i] <= v, "subset_lex_rank: not an ascending subset of [v]");
        for (int j = prev + 1; j < elems[i]; ++j)
            rank += binomial(v - j, k - 1 - i);
        prev = elems[i];
    }
    return rank;
}

std::vector<int> subset_lex_unrank(std::uint64_t rank, int v, int k) {
    require(k >= 0 && k <= v, "subset_lex_unrank: bad k");
    require(rank < binomial(v, k), "subset_lex_unrank: rank out of range");
    std::vector<int> out;
    out.reserve(k);
    int next = 1;
    for (int i = 0; i < k; ++i) {
        for (int j = next;; ++j) {
            const std::uint64_t block = binomial(v - j, k - 1 - i);
            if (rank < block) {
                out.push_back(j);
                next = j + 1;
                break;
            }
            rank -= block;
        }
    }
    return out;
}

bool next_subset(std::vector<int>& elems, int v) {
    const int k = static_cast<int>(elems.size());
    int i = k - 1;
    while (i >= 0 && elems[i] == v - (k - 1 - i)) --i;
    if (i < 0) return false;
    ++elems[i];
    for (int j = i + 1; j < k; ++j) elems[j] = elems[j - 1] + 1;
    return true;
}

void for_each_subset(int v, int k,
                     const std::function<void(const std::vector<int>&)>& fn) {
    require(k >= 0 && k <= v, "for_each_subset: bad k");
    std::vector<int> elems(k);
    for (int i = 0; i < k; ++i) elems[i] = i + 1;
    do {
        fn(elems);
    } while (next_subset(elems, v));
}

}  // namespace kneser
