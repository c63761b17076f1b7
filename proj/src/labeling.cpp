#include "kneser/labeling.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "kneser/combinatorics.hpp"
#include "kneser/error.hpp"

namespace kneser {

namespace {

constexpr std::uint64_t kMaxTableEntries = 1ull << 26;

}  // namespace

LabelingTable::LabelingTable(GameParams p)
    : params_(p), n_labels_(binomial(p.t + p.d, p.d)) {
    const std::uint64_t entries = edge_count(p);
    require(entries <= kMaxTableEntries, "labeling table too large to materialize");
    labels_.assign(entries, 0);
}

LabelingTable LabelingTable::build(
    GameParams p,
    const std::function<int(const ElementSet&, const ElementSet&)>& fn) {
    LabelingTable table(p);
    for_each_edge(p, [&](const ElementSet& a, const ElementSet& a_prime) {
        table.set_label(a, a_prime, fn(a, a_prime));
    });
    return table;
}

std::uint64_t LabelingTable::edge_index(const ElementSet& a,
                                        const ElementSet& a_prime) const {
    require(a.ground() == params_.v && a_prime.ground() == params_.v,
            "edge_index: ground set mismatch");
    require(a.size() == params_.t && a.subset_of(a_prime) &&
                a_prime.size() == params_.v - params_.t,
            "edge_index: not an edge of H(v,t)");
    const std::uint64_t rank_a = subset_lex_rank(a.elements(), params_.v);
    // Rank of the cross set by the positions it occupies inside sorted A^C.
    const std::vector<int> comp = a.complement().elements();
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(params_.d));
    for (int i = 0; i < static_cast<int>(comp.size()); ++i)
        if (a_prime.contains(comp[static_cast<std::size_t>(i)])) idx.push_back(i + 1);
    const std::uint64_t rank_x = subset_lex_rank(idx, params_.t + params_.d);
    return rank_a * n_labels_ + rank_x;
}

int LabelingTable::label(const ElementSet& a, const ElementSet& a_prime) const {
    return static_cast<int>(labels_[edge_index(a, a_prime)]);
}

void LabelingTable::set_label(const ElementSet& a, const ElementSet& a_prime,
                              int label) {
    require(label >= 1 && static_cast<std::uint64_t>(label) <= n_labels_,
            "label outside 1..C(t+d,d)");
    labels_[edge_index(a, a_prime)] = static_cast<std::uint32_t>(label);
}

bool LabelingTable::total() const {
    for (std::uint32_t l : labels_)
        if (l == 0) return false;
    return true;
}

VerifyReport verify_factorization(const LabelingTable& table) {
    const GameParams p = table.params();
    const auto n = static_cast<std::size_t>(table.n_labels());
    require(table.total(), "incomplete labeling table: some edges are unassigned");

    VerifyReport report;

    // Condition (a): for fixed circle positions (fixed A) the labels of the
    // C(t+d,d) incident edges are pairwise distinct.
    std::vector<EdgeRef> seen(n);
    std::vector<std::uint8_t> used(n, 0);
    bool done = false;
    for_each_subset(p.v, p.t, [&](const std::vector<int>& a_elems) {
        if (done) return;
        const ElementSet a = ElementSet::from_elements(a_elems, p.v);
        std::fill(used.begin(), used.end(), 0);
        const std::vector<int> comp = a.complement().elements();
        for_each_subset(p.t + p.d, p.d, [&](const std::vector<int>& idx) {
            if (done) return;
            ElementSet a_prime = a;
            for (int i : idx) a_prime.insert(comp[static_cast<std::size_t>(i - 1)]);
            const auto lab = static_cast<std::size_t>(table.label(a, a_prime)) - 1;
            if (used[lab]) {
                report.status = VerifyReport::Status::SameCircleClash;
                report.first = seen[lab];
                report.second = {a, a_prime};
                report.message = "condition (a) fails: edges (" + a.to_string() + " ; " +
                                 seen[lab].a_prime.to_string() + ") and (" + a.to_string() +
                                 " ; " + a_prime.to_string() + ") share label " +
                                 std::to_string(lab + 1);
                done = true;
                return;
            }
            used[lab] = 1;
            seen[lab] = {a, a_prime};
        });
    });
    if (done) return report;

    // Condition (b): for fixed triangle positions (fixed A') the labels of
    // the C(t+d,t) incident edges are pairwise distinct.
    for_each_subset(p.v, p.v - p.t, [&](const std::vector<int>& ap_elems) {
        if (done) return;
        const ElementSet a_prime = ElementSet::from_elements(ap_elems, p.v);
        std::fill(used.begin(), used.end(), 0);
        for_each_subset(p.v - p.t, p.t, [&](const std::vector<int>& pick) {
            if (done) return;
            ElementSet a(p.v);
            for (int i : pick) a.insert(ap_elems[static_cast<std::size_t>(i - 1)]);
            const auto lab = static_cast<std::size_t>(table.label(a, a_prime)) - 1;
            if (used[lab]) {
                report.status = VerifyReport::Status::SameTriangleClash;
                report.first = seen[lab];
                report.second = {a, a_prime};
                report.message = "condition (b) fails: edges (" + seen[lab].a.to_string() +
                                 " ; " + a_prime.to_string() + ") and (" + a.to_string() +
                                 " ; " + a_prime.to_string() + ") share label " +
                                 std::to_string(lab + 1);
                done = true;
                return;
            }
            used[lab] = 1;
            seen[lab] = {a, a_prime};
        });
    });
    return report;
}

bool is_perfect_matching(GameParams p,
                         const std::vector<std::pair<ElementSet, ElementSet>>& pairs) {
    if (pairs.size() != binomial(p.v, p.t)) return false;
    std::vector<std::uint8_t> left(pairs.size(), 0), right(pairs.size(), 0);
    for (const auto& [a, a_prime] : pairs) {
        if (a.ground() != p.v || a_prime.ground() != p.v) return false;
        if (a.size() != p.t || a_prime.size() != p.v - p.t) return false;
        if (!a.subset_of(a_prime)) return false;
        const auto ra = static_cast<std::size_t>(subset_lex_rank(a.elements(), p.v));
        const auto rb = static_cast<std::size_t>(subset_lex_rank(a_prime.elements(), p.v));
        if (left[ra] || right[rb]) return false;
        left[ra] = right[rb] = 1;
    }
    return true;
}

void write_dump(std::ostream& os, const LabelingTable& table) {
    const GameParams p = table.params();
    os << p.v << ' ' << p.t << ' ' << p.d << ' ' << table.n_labels() << '\n';
    for_each_edge(p, [&](const ElementSet& a, const ElementSet& a_prime) {
        os << table.label(a, a_prime) << '\t' << a.to_string() << '\t'
           << a_prime.to_string() << '\n';
    });
}

LabelingTable read_dump(std::istream& is) {
    std::string line;
    require(static_cast<bool>(std::getline(is, line)), "dump: missing header");
    std::istringstream header(line);
    int v = 0, t = 0, d = 0;
    std::uint64_t n = 0;
    require(static_cast<bool>(header >> v >> t >> d >> n), "dump: malformed header");
    const GameParams p = GameParams::from_vt(v, t);
    require(p.d == d, "dump: header d does not match v - 2t");
    LabelingTable table(p);
    require(n == table.n_labels(), "dump: header N does not match C(t+d,d)");

    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const std::size_t tab1 = line.find('\t');
        const std::size_t tab2 = tab1 == std::string::npos ? std::string::npos
                                                           : line.find('\t', tab1 + 1);
        require(tab2 != std::string::npos, "dump: expected label<TAB>A<TAB>A'");
        int label = 0;
        {
            std::istringstream field(line.substr(0, tab1));
            require(static_cast<bool>(field >> label), "dump: malformed label");
        }
        const ElementSet a = ElementSet::parse(line.substr(tab1 + 1, tab2 - tab1 - 1), v);
        const ElementSet a_prime = ElementSet::parse(line.substr(tab2 + 1), v);
        require(table.label(a, a_prime) == 0, "dump: duplicate edge line");
        table.set_label(a, a_prime, label);
    }
    return table;
}

}  // namespace kneser
