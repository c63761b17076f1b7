#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kneser/edge.hpp"
#include "kneser/element_set.hpp"
#include "kneser/params.hpp"

namespace kneser {

// Total map from the edges of H(v,t) to labels in [N], N = C(t+d, d).
// Entry 0 marks an unassigned edge (only tables parsed from files can be
// partial; built tables are always total).
class LabelingTable {
public:
    LabelingTable(GameParams p);

    static LabelingTable build(
        GameParams p,
        const std::function<int(const ElementSet&, const ElementSet&)>& fn);

    const GameParams& params() const { return params_; }
    std::uint64_t n_labels() const { return n_labels_; }
    std::uint64_t size() const { return labels_.size(); }

    std::uint64_t edge_index(const ElementSet& a, const ElementSet& a_prime) const;

    int label(const ElementSet& a, const ElementSet& a_prime) const;
    void set_label(const ElementSet& a, const ElementSet& a_prime, int label);

    bool total() const;

    bool operator==(const LabelingTable&) const = default;

private:
    GameParams params_;
    std::uint64_t n_labels_;
    std::vector<std::uint32_t> labels_;
};

struct EdgeRef {
    ElementSet a, a_prime;
};

// Outcome of checking conditions (a) and (b): either ok, or the first
// offending pair of edges together with the condition that failed.
struct VerifyReport {
    enum class Status {
        Ok,
        SameCircleClash,    // condition (a): two edges from one A share a label
        SameTriangleClash,  // condition (b): two edges into one A' share a label
        LabelOutOfRange,
    };

    Status status = Status::Ok;
    EdgeRef first, second;
    std::string message;

    bool ok() const { return status == Status::Ok; }
};

// Exhaustively checks that the table is a labeling function of a
// 1-factorization. Throws on a partial table.
VerifyReport verify_factorization(const LabelingTable& table);

// True iff the pairs form a perfect matching of H(v,t): every t-subset
// appears exactly once on the left, every (v-t)-subset exactly once on the
// right, and each pair is an edge.
bool is_perfect_matching(GameParams p,
                         const std::vector<std::pair<ElementSet, ElementSet>>& pairs);

// Text dump, one edge per line in enumeration order:
//   header "v t d N", then "label<TAB>a1,a2,...<TAB>b1,b2,...".
void write_dump(std::ostream& os, const LabelingTable& table);
LabelingTable read_dump(std::istream& is);

}  // namespace kneser
