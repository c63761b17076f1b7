#include "kneser/resolvable.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "kneser/combinatorics.hpp"
#include "kneser/error.hpp"
#include "kneser/gf.hpp"

namespace kneser {

ResolvedFamily ResolvedFamily::empty(GameParams p) {
    ResolvedFamily family;
    family.params = p;
    family.values.assign(static_cast<std::size_t>(binomial(p.v, p.t)),
                         std::vector<int>(static_cast<std::size_t>(p.t + p.d), 0));
    return family;
}

namespace {

std::size_t rank_of(const ElementSet& a) {
    return static_cast<std::size_t>(subset_lex_rank(a.elements(), a.ground()));
}

int complement_position(const ElementSet& a, int x) {
    require(!a.contains(x) && x >= 1 && x <= a.ground(),
            "resolved family: element must lie in A^C");
    int pos = 0;
    for (int y : a.complement().elements()) {
        if (y == x) return pos;
        ++pos;
    }
    fail("resolved family: element not found in A^C");
}

}  // namespace

int ResolvedFamily::value(const ElementSet& a, int x) const {
    return values[rank_of(a)][static_cast<std::size_t>(complement_position(a, x))];
}

int ResolvedFamily::preimage(const ElementSet& a, int target) const {
    const std::vector<int>& row = values[rank_of(a)];
    const std::vector<int> comp = a.complement().elements();
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] == target) return comp[i];
    fail("resolved family: value outside the image of g_A");
}

ElementSet ResolvedFamily::image(const ElementSet& a, const ElementSet& xs) const {
    ElementSet out(params.t + params.d);
    for (int x : xs.elements()) out.insert(value(a, x));
    return out;
}

SubsetBijection::SubsetBijection(int n, int d, std::vector<int> perm)
    : n_(n), d_(d), perm_(std::move(perm)) {
    inverse_.assign(perm_.size(), -1);
    for (std::size_t r = 0; r < perm_.size(); ++r) {
        const int label = perm_[r];
        require(label >= 1 && static_cast<std::size_t>(label) <= perm_.size() &&
                    inverse_[static_cast<std::size_t>(label - 1)] == -1,
                "SubsetBijection: relabeling must be a permutation of 1..C(n,d)");
        inverse_[static_cast<std::size_t>(label - 1)] = static_cast<int>(r);
    }
}

SubsetBijection SubsetBijection::colex(int n, int d) {
    const auto count = binomial(n, d);
    std::vector<int> identity(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i) + 1;
    return SubsetBijection(n, d, std::move(identity));
}

SubsetBijection SubsetBijection::colex_permuted(int n, int d,
                                                const std::vector<int>& perm) {
    require(perm.size() == binomial(n, d), "SubsetBijection: permutation size mismatch");
    return SubsetBijection(n, d, perm);
}

int SubsetBijection::label_of(const ElementSet& dsubset) const {
    require(dsubset.ground() == n_ && dsubset.size() == d_,
            "SubsetBijection: expected a d-subset of [n]");
    std::uint64_t rank = 0;
    int i = 1;
    for (int x : dsubset.elements()) rank += binomial(x - 1, i++);
    return perm_[static_cast<std::size_t>(rank)];
}

ElementSet SubsetBijection::subset_of(int label) const {
    require(label >= 1 && static_cast<std::size_t>(label) <= perm_.size(),
            "SubsetBijection: label out of range");
    auto rank =
        static_cast<std::uint64_t>(inverse_[static_cast<std::size_t>(label - 1)]);
    ElementSet out(n_);
    for (int i = d_; i >= 1; --i) {
        // Largest x with C(x-1, i) <= remaining rank.
        int x = i;
        while (x + 1 <= n_ && binomial(x, i) <= rank) ++x;
        out.insert(x);
        rank -= binomial(x - 1, i);
    }
    return out;
}

int family_label(const ResolvedFamily& family, const SubsetBijection& gamma,
                 const ElementSet& a, const ElementSet& a_prime) {
    require(a.subset_of(a_prime), "family_label: not an edge");
    return gamma.label_of(family.image(a, a_prime - a));
}

LabelingTable family_table(const ResolvedFamily& family, const SubsetBijection& gamma) {
    return LabelingTable::build(family.params,
                                [&](const ElementSet& a, const ElementSet& a_prime) {
                                    return family_label(family, gamma, a, a_prime);
                                });
}

FamilyCheck check_resolved_family(const ResolvedFamily& family) {
    const GameParams p = family.params;
    require(p.t + p.d <= 24, "check_resolved_family: t+d too large for the mask table");
    FamilyCheck result;
    std::vector<ElementSet> claimed_by(1ull << (p.t + p.d));
    bool done = false;
    for_each_subset(p.v, p.v - p.t, [&](const std::vector<int>& ap_elems) {
        if (done) return;
        const ElementSet a_prime = ElementSet::from_elements(ap_elems, p.v);
        std::vector<std::uint64_t> seen_masks;
        seen_masks.reserve(64);
        for_each_subset(p.v - p.t, p.t, [&](const std::vector<int>& pick) {
            if (done) return;
            ElementSet a(p.v);
            for (int i : pick) a.insert(ap_elems[static_cast<std::size_t>(i - 1)]);
            const std::uint64_t mask = family.image(a, a_prime - a).bits();
            if (!claimed_by[mask].empty()) {
                result.ok = false;
                result.a_prime = a_prime;
                result.first_a = claimed_by[mask];
                result.second_a = a;
                result.message = "resolved-family clash at A' = {" + a_prime.to_string() +
                                 "}: A1 = {" + result.first_a.to_string() + "} and A2 = {" +
                                 a.to_string() + "} map A'-A to the same value set";
                done = true;
                return;
            }
            claimed_by[mask] = a;
            seen_masks.push_back(mask);
        });
        for (std::uint64_t mask : seen_masks) claimed_by[mask] = ElementSet();
    });
    return result;
}

PaReport verify_pa(const PerpendicularArray& pa) {
    require(pa.t >= 1 && pa.k >= pa.t && pa.v >= pa.k, "verify_pa: bad parameters");
    require(pa.rows.size() == binomial(pa.v, pa.t),
            "verify_pa: row count must be C(v,t)");

    PaReport report;
    for (std::size_t r = 0; r < pa.rows.size(); ++r) {
        const auto& row = pa.rows[r];
        require(static_cast<int>(row.size()) == pa.k, "verify_pa: row length must be k");
        std::uint64_t mask = 0;
        for (int x : row) {
            require(x >= 1 && x <= pa.v, "verify_pa: entry outside [v]");
            const std::uint64_t bit = 1ull << (x - 1);
            if (mask & bit) {
                report.ok = false;
                report.message =
                    "row " + std::to_string(r + 1) + " repeats entry " + std::to_string(x);
                return report;
            }
            mask |= bit;
        }
    }

    std::vector<std::size_t> owner(pa.rows.size(), 0);
    std::vector<std::uint8_t> used(pa.rows.size(), 0);
    bool bad = false;
    for_each_subset(pa.k, pa.t, [&](const std::vector<int>& cols) {
        if (bad) return;
        std::fill(used.begin(), used.end(), 0);
        for (std::size_t r = 0; r < pa.rows.size(); ++r) {
            std::vector<int> picked;
            picked.reserve(cols.size());
            for (int c : cols) picked.push_back(pa.rows[r][static_cast<std::size_t>(c - 1)]);
            std::sort(picked.begin(), picked.end());
            const auto rank = static_cast<std::size_t>(subset_lex_rank(picked, pa.v));
            if (used[rank]) {
                std::string cols_text;
                for (int c : cols) cols_text += (cols_text.empty() ? "" : ",") + std::to_string(c);
                std::string subset_text;
                for (int x : picked)
                    subset_text += (subset_text.empty() ? "" : ",") + std::to_string(x);
                report.ok = false;
                report.message = "columns {" + cols_text + "}: t-subset {" + subset_text +
                                 "} appears in rows " + std::to_string(owner[rank] + 1) +
                                 " and " + std::to_string(r + 1);
                bad = true;
                return;
            }
            used[rank] = 1;
            owner[rank] = r;
        }
    });
    return report;
}

PaReport verify_cpa(const PerpendicularArray& pa) {
    PaReport report = verify_pa(pa);
    if (!report.ok) return report;
    if (pa.v != pa.t + pa.k) {
        report.ok = false;
        report.message = "not a PA(t,t+d,2t+d) shape: need v = t + k";
        return report;
    }

    // Row supports must cover each k-subset exactly once; counts match, so
    // pairwise-distinct supports suffice.
    std::map<std::uint64_t, std::size_t> seen;
    for (std::size_t r = 0; r < pa.rows.size(); ++r) {
        std::uint64_t mask = 0;
        for (int x : pa.rows[r]) mask |= 1ull << (x - 1);
        const auto [it, inserted] = seen.emplace(mask, r);
        if (!inserted) {
            report.ok = false;
            report.message = "rows " + std::to_string(it->second + 1) + " and " +
                             std::to_string(r + 1) + " share the same support";
            return report;
        }
    }
    return report;
}

PerpendicularArray select_columns_cpa(const PerpendicularArray& pa,
                                      const std::vector<int>& cols) {
    require(pa.k == pa.v, "select_columns_cpa: input must be a PA(t,2t+d,2t+d)");
    const int d = pa.v - 2 * pa.t;
    require(d >= 1, "select_columns_cpa: need t < v/2");
    require(static_cast<int>(cols.size()) == pa.t + d,
            "select_columns_cpa: need exactly t+d columns");
    int prev = 0;
    for (int c : cols) {
        require(c > prev && c <= pa.k, "select_columns_cpa: columns must be ascending in [k]");
        prev = c;
    }

    PerpendicularArray out;
    out.t = pa.t;
    out.k = pa.t + d;
    out.v = pa.v;
    out.complete_flag = true;
    out.rows.reserve(pa.rows.size());
    for (const auto& row : pa.rows) {
        std::vector<int> picked;
        picked.reserve(cols.size());
        for (int c : cols) picked.push_back(row[static_cast<std::size_t>(c - 1)]);
        out.rows.push_back(std::move(picked));
    }

    const PaReport report = verify_cpa(out);
    require(report.ok, "select_columns_cpa: result fails verification: " + report.message);
    return out;
}

ResolvedFamily family_from_cpa(const PerpendicularArray& cpa) {
    const PaReport report = verify_cpa(cpa);
    require(report.ok, "family_from_cpa: input is not a complete array: " + report.message);

    const GameParams p = GameParams::from_vt(cpa.v, cpa.t);
    ResolvedFamily family = ResolvedFamily::empty(p);
    for (const auto& row : cpa.rows) {
        ElementSet support(p.v);
        for (int x : row) support.insert(x);
        const ElementSet a = support.complement();
        auto& slots = family.values[static_cast<std::size_t>(
            subset_lex_rank(a.elements(), p.v))];
        for (std::size_t j = 0; j < row.size(); ++j)
            slots[static_cast<std::size_t>(complement_position(a, row[j]))] =
                static_cast<int>(j) + 1;
    }
    return family;
}

PerpendicularArray cpa_from_family(const ResolvedFamily& family) {
    const FamilyCheck check = check_resolved_family(family);
    require(check.ok, "cpa_from_family: family fails the injectivity criterion: " +
                          check.message);

    const GameParams p = family.params;
    PerpendicularArray out;
    out.t = p.t;
    out.k = p.t + p.d;
    out.v = p.v;
    out.complete_flag = true;
    out.rows.reserve(family.values.size());
    // Rows sorted by A: for_each_subset enumerates lexicographically.
    for_each_subset(p.v, p.t, [&](const std::vector<int>& a_elems) {
        const ElementSet a = ElementSet::from_elements(a_elems, p.v);
        std::vector<int> row(static_cast<std::size_t>(p.t + p.d), 0);
        for (int j = 1; j <= p.t + p.d; ++j)
            row[static_cast<std::size_t>(j - 1)] = family.preimage(a, j);
        out.rows.push_back(std::move(row));
    });

    const PaReport report = verify_cpa(out);
    require(report.ok, "cpa_from_family: result fails verification: " + report.message);
    return out;
}

ResolvedFamily family_from_labeling(const LabelingTable& table) {
    const GameParams p = table.params();
    require(p.d == 1, "family_from_labeling: d = 1 only");

    ResolvedFamily family = ResolvedFamily::empty(p);
    for_each_subset(p.v, p.t, [&](const std::vector<int>& a_elems) {
        const ElementSet a = ElementSet::from_elements(a_elems, p.v);
        auto& slots = family.values[static_cast<std::size_t>(
            subset_lex_rank(a_elems, p.v))];
        int pos = 0;
        for (int x : a.complement().elements())
            slots[static_cast<std::size_t>(pos++)] = table.label(a, a.with(x));
    });
    return family;
}

PerpendicularArray latin_pa(int v) {
    require(v >= 2 && v <= kMaxGroundSet, "latin_pa: v out of range");
    PerpendicularArray out;
    out.t = 1;
    out.k = v;
    out.v = v;
    out.complete_flag = false;
    out.rows.reserve(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) {
        std::vector<int> row(static_cast<std::size_t>(v));
        for (int j = 0; j < v; ++j) row[static_cast<std::size_t>(j)] = (i + j) % v + 1;
        out.rows.push_back(std::move(row));
    }
    return out;
}

PerpendicularArray rao_pa(int q) {
    require(is_odd_prime_power(q), "rao_pa: q must be an odd prime power");
    require(q >= 5, "rao_pa: need q >= 5 so that t = 2 < q/2");
    const GaloisField field(q);

    // Multipliers: one element from each pair {c, -c}. When q = 3 mod 4
    // the nonzero squares form such a transversal; otherwise take the
    // first-seen element of each pair in encoding order. Either way every
    // unordered pair {u,w} of values is hit exactly once per column pair,
    // because exactly one of +-(u-w)/(e_i-e_j) is a chosen multiplier.
    std::vector<int> multipliers;
    if (q % 4 == 3) {
        for (int a = 1; a < q; ++a)
            if (field.is_square(a)) multipliers.push_back(a);
    } else {
        std::vector<bool> excluded(static_cast<std::size_t>(q), false);
        for (int a = 1; a < q; ++a) {
            if (excluded[static_cast<std::size_t>(a)]) continue;
            multipliers.push_back(a);
            excluded[static_cast<std::size_t>(field.neg(a))] = true;
        }
    }
    require(2 * static_cast<int>(multipliers.size()) == q - 1,
            "rao_pa: multiplier set is not a transversal");

    PerpendicularArray out;
    out.t = 2;
    out.k = q;
    out.v = q;
    out.complete_flag = false;
    out.rows.reserve(static_cast<std::size_t>(q) * multipliers.size());
    for (int a : multipliers) {
        for (int b = 0; b < q; ++b) {
            std::vector<int> row(static_cast<std::size_t>(q));
            for (int e = 0; e < q; ++e)
                row[static_cast<std::size_t>(e)] = field.add(field.mul(a, e), b) + 1;
            out.rows.push_back(std::move(row));
        }
    }

    const PaReport report = verify_pa(out);
    require(report.ok, "rao_pa: construction fails verification: " + report.message);
    return out;
}

void write_pa(std::ostream& os, const PerpendicularArray& pa) {
    os << "PA " << pa.t << ' ' << pa.k << ' ' << pa.v << ' ' << (pa.complete_flag ? 1 : 0)
       << '\n';
    for (const auto& row : pa.rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? " " : "") << row[j];
        os << '\n';
    }
}

PerpendicularArray read_pa(std::istream& is) {
    std::string tag;
    PerpendicularArray pa;
    int complete = 0;
    require(static_cast<bool>(is >> tag >> pa.t >> pa.k >> pa.v >> complete) && tag == "PA",
            "pa file: malformed header, expected 'PA t k v complete'");
    pa.complete_flag = complete != 0;
    require(pa.t >= 1 && pa.k >= pa.t && pa.v >= pa.k && pa.v <= kMaxGroundSet,
            "pa file: bad parameters");
    const std::uint64_t row_count = binomial(pa.v, pa.t);
    pa.rows.reserve(row_count);
    for (std::uint64_t r = 0; r < row_count; ++r) {
        std::vector<int> row(static_cast<std::size_t>(pa.k));
        for (int j = 0; j < pa.k; ++j)
            require(static_cast<bool>(is >> row[static_cast<std::size_t>(j)]),
                    "pa file: expected " + std::to_string(row_count) + " rows of " +
                        std::to_string(pa.k) + " entries");
        pa.rows.push_back(std::move(row));
    }
    return pa;
}

}  // namespace kneser
