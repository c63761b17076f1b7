#include "kneser/modular.hpp"

#include <numeric>

#include "kneser/error.hpp"

namespace kneser {

ModularView ModularView::of(const EdgePermutation& rho) {
    const GameParams p = rho.params();
    require(p.d == 1, "modular labeling is defined for d = 1 only");

    ModularView view;
    view.circle_positions.reserve(static_cast<std::size_t>(p.t));
    view.triangle_positions.reserve(static_cast<std::size_t>(p.t));
    for (int pos = 1; pos <= p.v; ++pos) {
        switch (rho.at(pos)) {
            case Mark::Circle: view.circle_positions.push_back(pos); break;
            case Mark::Triangle: view.triangle_positions.push_back(pos); break;
            case Mark::Cross: view.cross_position = pos; break;
        }
    }
    int triangles_after = 0, circles_after = 0;
    for (int pos : view.triangle_positions) triangles_after += pos > view.cross_position;
    for (int pos : view.circle_positions) circles_after += pos > view.cross_position;
    view.rank_ccw_triangle = triangles_after + 1;
    view.rank_ccw_circle = circles_after + 1;
    return view;
}

ElementSet modular_match(const ElementSet& a, int label) {
    const int v = a.ground();
    const int t = a.size();
    require(v == 2 * t + 1, "modular_match: needs v = 2t+1");
    require(label >= 1 && label <= t + 1, "modular_match: label outside [t+1]");

    const int y = restrict_mod(a.sum() + label, t + 1);
    int seen = 0;
    for (int z = v; z >= 1; --z) {
        if (a.contains(z)) continue;
        if (++seen == y) return a.with(z);
    }
    fail("modular_match: no y-th largest element (unreachable)");
}

ElementSet modular_match_inv(const ElementSet& a_prime, int label) {
    const int v = a_prime.ground();
    const int t = a_prime.size() - 1;
    require(t >= 1 && v == 2 * t + 1, "modular_match_inv: needs |A'| = t+1, v = 2t+1");
    require(label >= 1 && label <= t + 1, "modular_match_inv: label outside [t+1]");

    const int x = restrict_mod(a_prime.sum() + label, t + 1);
    const std::vector<int> elems = a_prime.elements();
    return a_prime.without(elems[static_cast<std::size_t>(x - 1)]);
}

int modular_label_by_triangle_rank(const ModularView& view) {
    const int t = static_cast<int>(view.circle_positions.size());
    const long long circle_sum = std::accumulate(view.circle_positions.begin(),
                                                 view.circle_positions.end(), 0ll);
    return restrict_mod(view.rank_ccw_triangle - circle_sum, t + 1);
}

int modular_label_by_circle_rank(const ModularView& view) {
    const int t = static_cast<int>(view.triangle_positions.size());
    const long long triangle_sum = std::accumulate(view.triangle_positions.begin(),
                                                   view.triangle_positions.end(), 0ll);
    return restrict_mod(1 + triangle_sum - view.rank_ccw_circle, t + 1);
}

int modular_label(const EdgePermutation& rho) {
    const ModularView view = ModularView::of(rho);
    const int label = modular_label_by_triangle_rank(view);
#ifndef NDEBUG
    if (label != modular_label_by_circle_rank(view))
        throw std::logic_error("modular_label: the two rank formulas disagree");
#endif
    return label;
}

int modular_label_inversions(const EdgePermutation& rho) {
    const GameParams p = rho.params();
    require(p.d == 1, "modular labeling is defined for d = 1 only");
    const int x = cross_position(rho);

    long long inversions = 0;
    int circles_seen = 0;
    for (int step = 1, pos = x % p.v + 1; step < p.v; ++step, pos = pos % p.v + 1) {
        if (rho.at(pos) == Mark::Circle) ++circles_seen;
        else inversions += circles_seen;
    }
    return restrict_mod(inversions, p.t + 1);
}

EdgePermutation modular_variation_step(const EdgePermutation& rho, SwapKind kind) {
    const GameParams p = rho.params();
    require(p.d == 1, "modular_variation_step: d = 1 only");
    const int v = p.v;
    const int x = cross_position(rho);
    const bool clockwise = kind == SwapKind::CwTriangle || kind == SwapKind::CwCircle;
    const Mark wanted = (kind == SwapKind::CwTriangle || kind == SwapKind::CcwTriangle)
                            ? Mark::Triangle
                            : Mark::Circle;

    int pos = x;
    for (int step = 1; step < v; ++step) {
        pos = clockwise ? pos % v + 1 : (pos + v - 2) % v + 1;
        if (rho.at(pos) == wanted) {
            EdgePermutation out = rho;
            out.set(x, wanted);
            out.set(pos, Mark::Cross);
            return out;
        }
    }
    fail("modular_variation_step: target character not found (t must be >= 1)");
}

LabelingTable modular_table(GameParams p) {
    require(p.d == 1, "modular_table: d = 1 only");
    return LabelingTable::build(p, [](const ElementSet& a, const ElementSet& a_prime) {
        return modular_label(edge_to_perm(a, a_prime));
    });
}

}  // namespace kneser
