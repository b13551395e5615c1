#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlattice/errors.hpp"
#include "qlattice/fplinalg.hpp"

namespace qlattice {

inline constexpr int kDefaultOrderCap = 256;
inline constexpr int kMaxOrderCap = 1024;
inline constexpr int kDefaultPermClosureCap = 1024;
inline constexpr int kMinGenSearchCap = 64;

/// A permutation of {0..m-1}, stored as its image list.
using Permutation = std::vector<int>;

/// A finite group presented by its Cayley table over element ids 0..N-1.
/// Construction validates the group axioms: identity and inverses are
/// checked exhaustively; associativity is checked exhaustively for
/// N <= 64 and on 10,000 deterministically sampled triples above that.
/// Immutable after validation.
class FiniteGroup {
public:
    static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table,
                                         std::string name);

    int order() const { return n_; }
    int op(int a, int b) const {
        return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(b)];
    }
    int identity() const { return identity_; }
    int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    const std::string& name() const { return name_; }

    /// Multiplicative order of a single element.
    int element_order(int a) const;

    bool is_abelian() const;

private:
    FiniteGroup() = default;
    int n_ = 0;
    std::vector<int> table_; // row-major n x n
    int identity_ = 0;
    std::vector<int> inverse_;
    std::string name_;
};

/// A subgroup of a fixed parent group as a dense membership vector.
/// Construction verifies the subgroup axioms (identity, closure under
/// product and inverse). The membership vector doubles as the canonical
/// dedup/ordering key.
class Subgroup {
public:
    Subgroup(const FiniteGroup* parent, std::vector<bool> members);

    const FiniteGroup& parent() const { return *parent_; }
    int order() const { return order_; }
    bool contains(int id) const { return members_[static_cast<std::size_t>(id)]; }
    const std::vector<bool>& members() const { return members_; }
    std::vector<int> member_ids() const;

    bool subset_of(const Subgroup& other) const;
    bool is_whole_group() const { return order_ == parent_->order(); }

    bool operator==(const Subgroup& other) const { return members_ == other.members_; }
    /// Deterministic ordering: by order, then by membership key.
    std::strong_ordering operator<=>(const Subgroup& other) const;

private:
    const FiniteGroup* parent_;
    std::vector<bool> members_;
    int order_;
};

/// p, e and rank for a group of order p^e.
struct PGroupData {
    PrimeModulus p;
    int exponent_of_order; // e with |G| = p^e
    int rank;              // n with |G/Phi(G)| = p^n
};

/// Result of the maximal-intersection breadth-first labeling: which
/// subgroups arise as intersections of maximal subgroups, each with the
/// least number of maximals needed (0 for G itself), plus the subgroups
/// containing Phi(G) that never arise. The latter list is empty exactly
/// when the counting theorem applies (always, for p-groups).
struct IntersectionReport {
    std::vector<std::pair<Subgroup, int>> numbered; // sorted by (number, key)
    std::vector<Subgroup> unexpressible;            // contain Phi, no number

    std::optional<int> number_of(const Subgroup& h) const;
};

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

/// Close a generating set of permutations of {0..degree-1} and present the
/// resulting group as a Cayley table. Elements are indexed in lexicographic
/// order of their image lists, so the identity is always element 0.
FiniteGroup from_permutations(int degree, const std::vector<Permutation>& generators,
                              std::string name, int cap = kDefaultPermClosureCap);

FiniteGroup cyclic(int m, int cap = kMaxOrderCap);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           int cap = kMaxOrderCap);
FiniteGroup elementary_abelian(int p, int n, int cap = kMaxOrderCap);
/// The 8-element quaternion group {±1, ±i, ±j, ±k} with i² = j² = k² = -1,
/// ij = k, jk = i, ki = j.
FiniteGroup quaternion8();
/// Dihedral group of order m (m even): symmetries of the (m/2)-gon.
FiniteGroup dihedral(int m, int cap = kMaxOrderCap);
/// Upper unitriangular 3x3 matrices over F_p, of order p^3. For p = 2 this
/// construction yields the dihedral group of order 8.
FiniteGroup heisenberg(int p, int cap = kMaxOrderCap);
/// Symmetric group on m letters, m <= 5.
FiniteGroup symmetric(int m);

/// Cayley-table file format: `#` starts a comment, the first value is N,
/// followed by N rows of N ids in 0..N-1.
FiniteGroup read_cayley_table(std::istream& in, std::string name);

/// Permutation-generator file format: one generator per line in cycle
/// notation with 1-based points, e.g. `(1 2 3)(4 5)`; fixed points omitted.
/// The degree is the largest point mentioned.
FiniteGroup read_permutation_group(std::istream& in, std::string name,
                                   int cap = kDefaultPermClosureCap);

// ---------------------------------------------------------------------------
// Lattice machinery
// ---------------------------------------------------------------------------

/// Smallest subgroup containing the seed elements (worklist closure).
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed);

/// Every subgroup exactly once: seed with all cyclic subgroups, then join
/// pairs (closure of union) to a fixpoint. Deterministically sorted.
/// Requires |G| <= cap.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int cap = kDefaultOrderCap);

/// Proper subgroups not contained in any other proper subgroup.
/// Rejects the trivial group, which has none.
std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g, int cap = kDefaultOrderCap);

/// Intersection of all maximal subgroups; the trivial subgroup for the
/// trivial group (the empty intersection over no maximal subgroups is G).
Subgroup frattini(const FiniteGroup& g, int cap = kDefaultOrderCap);

/// p, e, rank for a p-group; rejects groups whose order is not a prime
/// power (including the trivial group, which has no defining prime).
PGroupData p_group_data(const FiniteGroup& g, int cap = kDefaultOrderCap);

/// Breadth-first labeling by least number of intersected maximals:
/// level 0 is {G}, level 1 the maximal subgroups, level t the intersections
/// of a level-(t-1) subgroup with one maximal, labeled at first appearance.
IntersectionReport intersection_numbers(const FiniteGroup& g, int cap = kDefaultOrderCap);

/// True iff H = G or H arises as an intersection of maximal subgroups.
bool is_intersection_of_maximals(const FiniteGroup& g, const Subgroup& h,
                                 int cap = kDefaultOrderCap);

/// Quotient G/N for normal N: the Cayley table on cosets and the
/// projection from element id to coset id. Rejects non-normal N.
std::pair<FiniteGroup, std::vector<int>> quotient(const FiniteGroup& g, const Subgroup& n);

/// Size of a smallest generating set, by exhaustive search over subsets of
/// increasing size; 0 for the trivial group. Gated at |G| <= 64.
int min_generating_set_size(const FiniteGroup& g);

} // namespace qlattice
