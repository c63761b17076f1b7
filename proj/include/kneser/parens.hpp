#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kneser {

// Parenthesis word; close[i] != 0 means position i+1 holds ')'. Unlike the
// ElementSet-based modules, these sequences have no ground-set cap: the
// whole pipeline below is linear-time and is exercised at t in the
// hundreds of thousands.
struct ParenSeq {
    std::vector<std::uint8_t> close;

    int size() const { return static_cast<int>(close.size()); }
    bool is_close(int pos) const { return close[static_cast<std::size_t>(pos - 1)] != 0; }

    int close_count() const;

    std::string to_string() const;
    static ParenSeq parse(std::string_view text);

    bool operator==(const ParenSeq&) const = default;
};

// ')' exactly at the (strictly ascending) positions in a.
ParenSeq parens_of(const std::vector<int>& sorted_a, int v);

// A sequence with t ')' and t+1 '(' is canonical when its first 2t
// characters pair up, leaving the final '(' unpaired.
bool is_canonical(const ParenSeq& s);

struct ShiftResult {
    int shift = 0;   // j such that seq is the j-th cyclic shift of the input
    ParenSeq seq;    // the canonical shift
};

// The unique canonical cyclic shift, found in one prefix-sum sweep: take
// the rightmost highest point of the ')'-minus-'(' profile and cut just
// after it. If steps is nonnull it is incremented once per loop iteration.
ShiftResult canonical_shift(const ParenSeq& s, std::uint64_t* steps = nullptr);

// Depths, pairing and indices of a canonical sequence.
//
// Depth is the usual nesting depth; the trailing unpaired '(' counts as
// depth 0. Left parentheses receive indices 0..t: smaller depth first,
// and right-to-left among equal depth. A ')' shares the index of its
// partner.
struct ParenAnnotation {
    ParenSeq seq;
    std::vector<int> depth;    // [pos-1]
    std::vector<int> index;    // [pos-1]
    std::vector<int> partner;  // [pos-1], 1-based partner position, 0 if unpaired
};

ParenAnnotation annotate_canonical(const ParenSeq& s, std::uint64_t* steps = nullptr);

}  // namespace kneser
