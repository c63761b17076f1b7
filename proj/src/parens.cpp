#include "kneser/parens.hpp"

#include "kneser/error.hpp"

namespace kneser {

namespace {

inline void bump(std::uint64_t* steps) {
    if (steps) ++*steps;
}

void check_counts(const ParenSeq& s) {
    const int v = s.size();
    require(v % 2 == 1 && v >= 3, "parenthesis sequence must have odd length >= 3");
    const int t = (v - 1) / 2;
    require(s.close_count() == t, "parenthesis sequence needs t ')' and t+1 '('");
}

}  // namespace

int ParenSeq::close_count() const {
    int n = 0;
    for (std::uint8_t c : close) n += c != 0;
    return n;
}

std::string ParenSeq::to_string() const {
    std::string out;
    out.reserve(close.size());
    for (std::uint8_t c : close) out.push_back(c ? ')' : '(');
    return out;
}

ParenSeq ParenSeq::parse(std::string_view text) {
    ParenSeq s;
    s.close.reserve(text.size());
    for (char c : text) {
        require(c == '(' || c == ')', "parenthesis literal: expected '(' or ')'");
        s.close.push_back(c == ')');
    }
    return s;
}

ParenSeq parens_of(const std::vector<int>& sorted_a, int v) {
    ParenSeq s;
    s.close.assign(static_cast<std::size_t>(v), 0);
    int prev = 0;
    for (int x : sorted_a) {
        require(x > prev && x <= v, "parens_of: not an ascending subset of [v]");
        s.close[static_cast<std::size_t>(x - 1)] = 1;
        prev = x;
    }
    return s;
}

bool is_canonical(const ParenSeq& s) {
    check_counts(s);
    const int v = s.size();
    if (s.is_close(v)) return false;
    int balance = 0;  // '(' minus ')'
    for (int pos = 1; pos < v; ++pos) {
        balance += s.is_close(pos) ? -1 : 1;
        if (balance < 0) return false;
    }
    return balance == 0;
}

ShiftResult canonical_shift(const ParenSeq& s, std::uint64_t* steps) {
    check_counts(s);
    const int v = s.size();

    // Profile height: number of ')' minus number of '(' over prefixes.
    // Cutting right after the rightmost maximum makes the first 2t
    // characters pair up.
    int height = 0, best = 0, best_at = 0;
    for (int pos = 1; pos < v; ++pos) {
        bump(steps);
        height += s.is_close(pos) ? 1 : -1;
        if (height >= best) {
            best = height;
            best_at = pos;
        }
    }
    const int j = (best_at + 1) % v;

    ShiftResult out;
    out.shift = j;
    out.seq.close.resize(static_cast<std::size_t>(v));
    for (int pos = 1; pos <= v; ++pos) {
        bump(steps);
        const int src = (pos - 1 + j) % v + 1;
        out.seq.close[static_cast<std::size_t>(pos - 1)] = s.is_close(src);
    }
    return out;
}

ParenAnnotation annotate_canonical(const ParenSeq& s, std::uint64_t* steps) {
    require(is_canonical(s), "annotate_canonical: input is not canonical");
    const int v = s.size();
    const int t = (v - 1) / 2;

    ParenAnnotation ann;
    ann.seq = s;
    ann.depth.assign(static_cast<std::size_t>(v), 0);
    ann.index.assign(static_cast<std::size_t>(v), -1);
    ann.partner.assign(static_cast<std::size_t>(v), 0);

    // Pairing and depths in one pass. The final '(' is unpaired and ends
    // at nesting level 0.
    std::vector<int> stack;
    stack.reserve(static_cast<std::size_t>(t + 1));
    int max_depth = 0;
    for (int pos = 1; pos <= v; ++pos) {
        bump(steps);
        if (!s.is_close(pos)) {
            const int depth = static_cast<int>(stack.size());
            ann.depth[static_cast<std::size_t>(pos - 1)] = depth;
            if (depth > max_depth) max_depth = depth;
            stack.push_back(pos);
        } else {
            const int open = stack.back();
            stack.pop_back();
            ann.depth[static_cast<std::size_t>(pos - 1)] = static_cast<int>(stack.size());
            ann.partner[static_cast<std::size_t>(pos - 1)] = open;
            ann.partner[static_cast<std::size_t>(open - 1)] = pos;
        }
    }

    // Count left parentheses per depth, then prefix-sum into the first
    // index of each depth bucket.
    std::vector<int> bucket(static_cast<std::size_t>(max_depth + 2), 0);
    for (int pos = 1; pos <= v; ++pos) {
        bump(steps);
        if (!s.is_close(pos)) ++bucket[static_cast<std::size_t>(ann.depth[pos - 1])];
    }
    int start = 0;
    for (std::size_t d = 0; d < bucket.size(); ++d) {
        const int count = bucket[d];
        bucket[d] = start;
        start += count;
    }

    // Right-to-left sweep assigns ascending indices within each depth.
    for (int pos = v; pos >= 1; --pos) {
        bump(steps);
        if (!s.is_close(pos))
            ann.index[static_cast<std::size_t>(pos - 1)] =
                bucket[static_cast<std::size_t>(ann.depth[pos - 1])]++;
    }
    for (int pos = 1; pos <= v; ++pos) {
        bump(steps);
        if (s.is_close(pos))
            ann.index[static_cast<std::size_t>(pos - 1)] =
                ann.index[static_cast<std::size_t>(ann.partner[pos - 1] - 1)];
    }
    return ann;
}

}  // namespace kneser
