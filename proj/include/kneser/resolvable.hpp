#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kneser/element_set.hpp"
#include "kneser/labeling.hpp"
#include "kneser/params.hpp"

namespace kneser {

// Per-vertex bijections g_A : A^C -> [t+d], one for every t-subset A,
// stored by the lexicographic rank of A. values[rank][i] is the image of
// the (i+1)-th smallest element of A^C.
struct ResolvedFamily {
    GameParams params;
    std::vector<std::vector<int>> values;

    static ResolvedFamily empty(GameParams p);

    int value(const ElementSet& a, int x) const;
    int preimage(const ElementSet& a, int value) const;

    // g_A applied elementwise to a subset of A^C; result lives in [t+d].
    ElementSet image(const ElementSet& a, const ElementSet& xs) const;

    bool operator==(const ResolvedFamily&) const = default;
};

// Bijection between the d-subsets of [n] and 1..C(n,d). The default is
// co-lexicographic ranking (for d = 1 that maps {x} to x); an arbitrary
// relabeling permutation can be layered on top.
class SubsetBijection {
public:
    static SubsetBijection colex(int n, int d);
    static SubsetBijection colex_permuted(int n, int d, const std::vector<int>& perm);

    int n() const { return n_; }
    int d() const { return d_; }
    std::uint64_t count() const { return static_cast<std::uint64_t>(perm_.size()); }

    int label_of(const ElementSet& dsubset) const;
    ElementSet subset_of(int label) const;

private:
    SubsetBijection(int n, int d, std::vector<int> perm);
    int n_ = 0, d_ = 0;
    std::vector<int> perm_;      // colex rank (0-based) -> label
    std::vector<int> inverse_;   // label-1 -> colex rank
};

// Label of an edge under the family: gamma(g_A(A' - A)).
int family_label(const ResolvedFamily& family, const SubsetBijection& gamma,
                 const ElementSet& a, const ElementSet& a_prime);

LabelingTable family_table(const ResolvedFamily& family, const SubsetBijection& gamma);

// The per-A' injectivity criterion: for every (v-t)-subset A', the map
// A -> g_A(A' - A) over the t-subsets A inside A' must be injective.
// Exactly the condition under which family_table passes verification for
// every choice of gamma.
struct FamilyCheck {
    bool ok = true;
    ElementSet a_prime, first_a, second_a;
    std::string message;
};

FamilyCheck check_resolved_family(const ResolvedFamily& family);

// A PA(t,k,v): C(v,t) x k matrix over [v], rows with k distinct entries,
// every t columns containing every t-subset of [v] exactly once as a row.
// complete_flag records the claim (from a file header or a construction)
// that row supports cover each (t+d)-subset exactly once; verify_cpa
// checks it.
struct PerpendicularArray {
    int t = 0, k = 0, v = 0;
    bool complete_flag = false;
    std::vector<std::vector<int>> rows;

    bool operator==(const PerpendicularArray&) const = default;
};

struct PaReport {
    bool ok = true;
    std::string message;
};

PaReport verify_pa(const PerpendicularArray& pa);
PaReport verify_cpa(const PerpendicularArray& pa);

// Restriction of a PA(t,2t+d,2t+d) to t+d chosen columns (ascending,
// 1-based); the result is a verified complete array.
PerpendicularArray select_columns_cpa(const PerpendicularArray& pa,
                                      const std::vector<int>& cols);

// CPA rows <-> resolved families: the row supported on A^C lists the
// preimages g_A^{-1}(1..t+d) in order. family-to-array rows are sorted by
// A so the output is canonical.
ResolvedFamily family_from_cpa(const PerpendicularArray& cpa);
PerpendicularArray cpa_from_family(const ResolvedFamily& family);

// Reads the resolved functions off any verified d = 1 labeling table:
// g_A(x) = f(A, A + {x}).
ResolvedFamily family_from_labeling(const LabelingTable& table);

// PA(1,v,v) of cyclic shifts: row i is (i, i+1, ..., i+v-1) mod v.
PerpendicularArray latin_pa(int v);

// PA(2,q,q) for odd prime powers q >= 5: rows are the affine maps
// x -> a*x + b over GF(q) with a drawn from a transversal of the {c,-c}
// pairs (the nonzero squares when q = 3 mod 4). Verified before returning.
PerpendicularArray rao_pa(int q);

// Text format: header "PA t k v complete", rows space-separated.
void write_pa(std::ostream& os, const PerpendicularArray& pa);
PerpendicularArray read_pa(std::istream& is);

}  // namespace kneser
