#include "kneser/chains.hpp"

#include "kneser/error.hpp"

namespace kneser {

namespace {

ElementSet rotate_impl(const ElementSet& a, const std::vector<int>& order, bool ccw) {
    const int v = a.ground();
    require(2 * a.size() <= v, "rotate: need |A| <= v/2");
    ElementSet out(v);
    for (int x : order) {
        require(a.contains(x), "rotate: enumeration order must list exactly A");
        int y = x;
        do {
            y = ccw ? (y + v - 2) % v + 1 : y % v + 1;
        } while (a.contains(y) || out.contains(y));
        out.insert(y);
    }
    require(out.size() == a.size(), "rotate: enumeration order must list exactly A");
    return out;
}

}  // namespace

ElementSet ccw_rotate(const ElementSet& a) { return rotate_impl(a, a.elements(), true); }

ElementSet cw_rotate(const ElementSet& a) { return rotate_impl(a, a.elements(), false); }

ElementSet ccw_rotate_ordered(const ElementSet& a, const std::vector<int>& order) {
    require(order.size() == static_cast<std::size_t>(a.size()),
            "ccw_rotate_ordered: order must enumerate A");
    return rotate_impl(a, order, true);
}

ElementSet rotation_partner(const ElementSet& a) {
    require(2 * a.size() < a.ground(), "rotation_partner: need |A| < v/2");
    return ccw_rotate(a).complement();
}

ElementSet rotation_partner_cw(const ElementSet& a) {
    require(2 * a.size() < a.ground(), "rotation_partner_cw: need |A| < v/2");
    return cw_rotate(a).complement();
}

std::vector<ElementSet> chain_of(const ElementSet& a) {
    const int v = a.ground();
    require(v >= 1, "chain_of: empty ground set");

    // Pair the parenthesis word of A: ')' at members, '(' elsewhere.
    std::vector<int> stack;
    ElementSet paired_close(v);
    std::vector<int> unpaired;
    for (int pos = 1; pos <= v; ++pos) {
        if (!a.contains(pos)) {
            stack.push_back(pos);
            continue;
        }
        if (stack.empty()) {
            unpaired.push_back(pos);  // unpaired ')'
        } else {
            stack.pop_back();
            paired_close.insert(pos);
        }
    }
    // Unpaired ')' positions all precede the unpaired '(' positions.
    for (int pos : stack) unpaired.push_back(pos);

    std::vector<ElementSet> chain;
    chain.reserve(unpaired.size() + 1);
    ElementSet member = paired_close;
    chain.push_back(member);
    for (int pos : unpaired) {
        member.insert(pos);
        chain.push_back(member);
    }
    return chain;
}

ElementSet chain_partner(const ElementSet& a) {
    const int v = a.ground();
    require(2 * a.size() < v, "chain_partner: need |A| < v/2");
    for (const ElementSet& member : chain_of(a))
        if (member.size() == v - a.size()) return member;
    throw std::logic_error("chain_partner: chain lacks its symmetric member");
}

}  // namespace kneser
