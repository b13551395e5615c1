#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "qlattice/errors.hpp"

namespace qlattice {

/// A residue modulo a small prime, always kept in [0, p).
using Residue = std::int64_t;

/// An element of F_p^n as a list of residues.
using FpVector = std::vector<Residue>;

/// A prime p, checked at construction. Inputs are desk-scale, so trial
/// division is all the primality testing this ever needs.
class PrimeModulus {
public:
    explicit PrimeModulus(std::int64_t p);

    std::int64_t value() const { return p_; }

    Residue reduce(std::int64_t x) const;
    Residue add(Residue a, Residue b) const { return (a + b) % p_; }
    Residue sub(Residue a, Residue b) const { return (a - b + p_) % p_; }
    Residue mul(Residue a, Residue b) const { return (a * b) % p_; }
    Residue neg(Residue a) const { return (p_ - a) % p_; }
    Residue inv(Residue a) const;

    bool operator==(const PrimeModulus&) const = default;

private:
    std::int64_t p_;
};

inline constexpr std::int64_t kDefaultAmbientCap = std::int64_t{1} << 20; // on p^n
inline constexpr std::int64_t kDefaultMinimalityCap = std::int64_t{1} << 12;

/// A subspace of F_p^n held as its reduced-row-echelon basis. The RREF
/// basis is a canonical form, so two Subspace values are equal as sets of
/// vectors iff they compare equal componentwise. Construct via span(),
/// zero() or full(); every constructor output is canonical.
class Subspace {
public:
    /// Canonical subspace spanned by the given rows (Gauss-Jordan).
    /// Rows must all have length n; ragged input is rejected.
    static Subspace span(const std::vector<FpVector>& rows, PrimeModulus p, int ambient_dim);
    static Subspace zero(PrimeModulus p, int ambient_dim);
    static Subspace full(PrimeModulus p, int ambient_dim);

    const PrimeModulus& prime() const { return p_; }
    int ambient_dim() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<FpVector>& basis() const { return basis_; }

    bool contains(const FpVector& v) const;
    bool contains(const Subspace& other) const;

    /// All p^dim vectors of the subspace, in a deterministic order.
    std::vector<FpVector> elements() const;

    bool operator==(const Subspace&) const = default;
    /// Deterministic ordering: by dimension, then lexicographic basis.
    std::strong_ordering operator<=>(const Subspace& other) const;

private:
    Subspace(PrimeModulus p, int n) : p_(p), n_(n) {}
    PrimeModulus p_;
    int n_;
    std::vector<FpVector> basis_;
};

/// A linear hyperplane of F_p^n, i.e. the kernel of a nonzero covector.
/// The normal is scaled so its first nonzero entry is 1, which picks one
/// canonical representative per projective class.
class Hyperplane {
public:
    /// Normalizes the covector; rejects the zero covector.
    Hyperplane(FpVector normal, PrimeModulus p);

    const FpVector& normal() const { return normal_; }
    const PrimeModulus& prime() const { return p_; }
    int ambient_dim() const { return static_cast<int>(normal_.size()); }

    /// The hyperplane as an (n-1)-dimensional Subspace.
    Subspace subspace() const;

    bool operator==(const Hyperplane&) const = default;

private:
    PrimeModulus p_;
    FpVector normal_;
};

/// Canonical subspace spanned by rows; free-function spelling of Subspace::span.
Subspace rref(const std::vector<FpVector>& rows, PrimeModulus p, int ambient_dim);

/// Every k-dimensional subspace of F_p^n exactly once, generated directly
/// as RREF matrices (choose pivot columns, then free entries), so the
/// output is duplicate-free by construction and its size is
/// gauss_binom(n,k,p). Requires p^n <= cap.
std::vector<Subspace> enumerate_subspaces(int n, PrimeModulus p, int k,
                                          std::int64_t cap = kDefaultAmbientCap);

/// Set intersection of two subspaces of the same ambient space, computed
/// through the dual: stack the annihilator bases and take the kernel.
Subspace intersect(const Subspace& a, const Subspace& b);

/// The (p^n - 1)/(p - 1) linear hyperplanes of F_p^n, normals in
/// lexicographic order. Requires p^n <= cap.
std::vector<Hyperplane> all_hyperplanes(int n, PrimeModulus p,
                                        std::int64_t cap = kDefaultAmbientCap);

/// n - dim(S) distinct hyperplanes whose intersection is S, built
/// constructively: extend a basis of S to a basis of the ambient space and
/// take the dual-basis covectors of the added vectors. The full space maps
/// to the empty list (the intersection of zero hyperplanes is V itself).
std::vector<Hyperplane> express_as_hyperplane_intersection(const Subspace& s);

/// Smallest number of hyperplanes whose intersection is S: 0 for the full
/// space, n - dim(S) otherwise.
int intersection_number_subspace(const Subspace& s);

/// Brute-force confirmation that intersection_number_subspace(s) is
/// minimal: no smaller set of hyperplanes intersects to S, and some set of
/// that size does. Exhaustive over hyperplane subsets, so it is gated at
/// p^n <= cap.
bool intersection_number_is_minimal(const Subspace& s,
                                    std::int64_t cap = kDefaultMinimalityCap);

/// The annihilator of S: all covectors vanishing on S, identified with a
/// subspace of F_p^n via the standard dot-product pairing. An involution;
/// maps k-dimensional subspaces to (n-k)-dimensional ones.
Subspace annihilator(const Subspace& s);

} // namespace qlattice
