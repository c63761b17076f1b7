#pragma once

#include <cstdint>
#include <vector>

#include "kneser/params.hpp"
#include "kneser/resolvable.hpp"

namespace kneser {

struct SearchOptions {
    int max_solutions = 1;
    double budget_seconds = 60.0;
};

struct SearchOutcome {
    std::vector<ResolvedFamily> solutions;
    bool exhausted = false;     // the whole tree was traversed
    bool budget_hit = false;    // stopped by the time budget
    std::uint64_t nodes = 0;
};

// Depth-first enumeration of resolved families {g_A}: assigns one
// bijection per t-subset A in lexicographic order, pruning through the
// per-A' injectivity constraint the moment a value subset collides. The
// first A is pinned to the identity assignment (labels are permutable, so
// this loses no solutions for the existence question). Every emitted
// family is re-verified. Deterministic: fixed traversal order, no threads.
SearchOutcome search_resolvable(GameParams p, const SearchOptions& opts = {});

}  // namespace kneser
