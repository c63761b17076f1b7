#include "kneser/lexical.hpp"

#include "kneser/combinatorics.hpp"
#include "kneser/error.hpp"

namespace kneser {

int lexical_label_direct(const EdgePermutation& rho) {
    const GameParams p = rho.params();
    require(p.d == 1, "lexical labeling is defined for d = 1 only");
    const int v = p.v;
    const int x = cross_position(rho);

    int positive = 0;
    for (int pos = 1; pos <= v; ++pos) {
        if (rho.at(pos) != Mark::Circle) continue;
        int circles = 0, triangles = 0;
        for (int q = x % v + 1; ; q = q % v + 1) {
            if (rho.at(q) == Mark::Circle) ++circles;
            else if (rho.at(q) == Mark::Triangle) ++triangles;
            if (q == pos) break;
        }
        if (circles > triangles) ++positive;
    }
    return restrict_mod(positive, p.t + 1);
}

LexicalMatcher::LexicalMatcher(const std::vector<int>& sorted_a, int v,
                               std::uint64_t* steps) {
    require(v % 2 == 1 && v >= 3, "LexicalMatcher: v must be 2t+1");
    v_ = v;
    t_ = (v - 1) / 2;
    require(static_cast<int>(sorted_a.size()) == t_, "LexicalMatcher: |A| must be t");

    const ParenSeq s = parens_of(sorted_a, v);
    const ShiftResult shifted = canonical_shift(s, steps);
    const ParenAnnotation ann = annotate_canonical(shifted.seq, steps);

    label_by_pos_.assign(static_cast<std::size_t>(v), 0);
    pos_by_index_.assign(static_cast<std::size_t>(t_ + 1), 0);
    for (int pos = 1; pos <= v; ++pos) {
        if (steps) ++*steps;
        if (ann.seq.is_close(pos)) continue;
        // Map the shifted position back to the original one.
        const int orig = (pos - 1 + shifted.shift) % v + 1;
        const int index = ann.index[static_cast<std::size_t>(pos - 1)];
        label_by_pos_[static_cast<std::size_t>(orig - 1)] = restrict_mod(index, t_ + 1);
        pos_by_index_[static_cast<std::size_t>(index)] = orig;
    }
}

int LexicalMatcher::label_of(int x) const {
    require(x >= 1 && x <= v_, "label_of: element outside [v]");
    const int label = label_by_pos_[static_cast<std::size_t>(x - 1)];
    require(label != 0, "label_of: element belongs to A");
    return label;
}

int LexicalMatcher::element_with_label(int label) const {
    require(label >= 1 && label <= t_ + 1, "element_with_label: label outside [t+1]");
    return pos_by_index_[static_cast<std::size_t>(floor_mod(label, t_ + 1))];
}

int lexical_label_resolved(const std::vector<int>& sorted_a, int x, int v) {
    return LexicalMatcher(sorted_a, v).label_of(x);
}

int lexical_label_resolved(const ElementSet& a, int x) {
    require(!a.contains(x), "lexical_label_resolved: x must lie outside A");
    return lexical_label_resolved(a.elements(), x, a.ground());
}

std::vector<int> lexical_match(const std::vector<int>& sorted_a, int label, int v,
                               std::uint64_t* steps) {
    const LexicalMatcher matcher(sorted_a, v, steps);
    const int z = matcher.element_with_label(label);
    std::vector<int> out;
    out.reserve(sorted_a.size() + 1);
    bool placed = false;
    for (int x : sorted_a) {
        if (steps) ++*steps;
        if (!placed && z < x) {
            out.push_back(z);
            placed = true;
        }
        out.push_back(x);
    }
    if (!placed) out.push_back(z);
    return out;
}

ElementSet lexical_match(const ElementSet& a, int label) {
    const LexicalMatcher matcher(a.elements(), a.ground());
    return a.with(matcher.element_with_label(label));
}

std::vector<int> lexical_match_inv(const std::vector<int>& sorted_a_prime, int label,
                                   int v) {
    const int t = v / 2;
    require(v % 2 == 1 && static_cast<int>(sorted_a_prime.size()) == t + 1,
            "lexical_match_inv: |A'| must be t+1 with v = 2t+1");
    // The dual permutation swaps circles and triangles, turning the
    // (A, A') query into a P1 query on [v]-A' whose labels pair up to t.
    std::vector<int> complement;
    complement.reserve(static_cast<std::size_t>(t));
    std::size_t i = 0;
    for (int x = 1; x <= v; ++x) {
        if (i < sorted_a_prime.size() && sorted_a_prime[i] == x) {
            ++i;
            continue;
        }
        complement.push_back(x);
    }
    const int co_label = restrict_mod(t - floor_mod(label, t + 1), t + 1);
    const LexicalMatcher matcher(complement, v);
    const int z = matcher.element_with_label(co_label);

    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(t));
    for (int x : sorted_a_prime)
        if (x != z) out.push_back(x);
    return out;
}

ElementSet lexical_match_inv(const ElementSet& a_prime, int label) {
    const std::vector<int> a = lexical_match_inv(a_prime.elements(), label, a_prime.ground());
    return ElementSet::from_elements(a, a_prime.ground());
}

std::optional<EdgePermutation> lexical_variation_step(const EdgePermutation& rho,
                                                      SwapKind kind) {
    const GameParams p = rho.params();
    require(p.d == 1, "lexical_variation_step: d = 1 only");
    const int v = p.v;
    const int x = cross_position(rho);
    const bool clockwise = kind == SwapKind::CwTriangle || kind == SwapKind::CwCircle;
    const Mark wanted = (kind == SwapKind::CwTriangle || kind == SwapKind::CcwTriangle)
                            ? Mark::Triangle
                            : Mark::Circle;

    int circles = 0, triangles = 0;
    int pos = x;
    for (int step = 1; step < v; ++step) {
        pos = clockwise ? pos % v + 1 : (pos + v - 2) % v + 1;
        if (rho.at(pos) == Mark::Circle) ++circles;
        else ++triangles;
        if (rho.at(pos) == wanted && circles == triangles) {
            EdgePermutation out = rho;
            out.set(x, wanted);
            out.set(pos, Mark::Cross);
            return out;
        }
    }
    return std::nullopt;
}

LabelingTable lexical_table(GameParams p) {
    require(p.d == 1, "lexical_table: d = 1 only");
    LabelingTable table(p);
    for_each_subset(p.v, p.t, [&](const std::vector<int>& a_elems) {
        const ElementSet a = ElementSet::from_elements(a_elems, p.v);
        const LexicalMatcher matcher(a_elems, p.v);
        for (int x : a.complement().elements())
            table.set_label(a, a.with(x), matcher.label_of(x));
    });
    return table;
}

}  // namespace kneser
