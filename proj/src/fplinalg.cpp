#include "qlattice/fplinalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qlattice {

namespace {

// p^n, throwing cap_exceeded_error as soon as the product passes cap.
std::int64_t checked_pow(std::int64_t p, int n, std::int64_t cap, const char* who) {
    std::int64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > cap / p) {
            throw cap_exceeded_error(std::string(who) + ": p^n exceeds cap " +
                                     std::to_string(cap));
        }
        r *= p;
    }
    if (r > cap) {
        throw cap_exceeded_error(std::string(who) + ": p^n exceeds cap " +
                                 std::to_string(cap));
    }
    return r;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

// In-place Gauss-Jordan over F_p; returns the rank. Entries must already
// be reduced. On return the first `rank` rows are the RREF basis and the
// remaining rows are zero.
int gauss_jordan(std::vector<FpVector>& rows, const PrimeModulus& p, int n) {
    int pivot_row = 0;
    for (int col = 0; col < n && pivot_row < static_cast<int>(rows.size()); ++col) {
        int found = -1;
        for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r) {
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                found = r;
                break;
            }
        }
        if (found < 0) continue;
        std::swap(rows[static_cast<std::size_t>(pivot_row)], rows[static_cast<std::size_t>(found)]);
        auto& prow = rows[static_cast<std::size_t>(pivot_row)];
        Residue scale = p.inv(prow[static_cast<std::size_t>(col)]);
        for (auto& x : prow) x = p.mul(x, scale);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == pivot_row) continue;
            auto& row = rows[static_cast<std::size_t>(r)];
            Residue factor = row[static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j) {
                auto u = static_cast<std::size_t>(j);
                row[u] = p.sub(row[u], p.mul(factor, prow[u]));
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

void require_same_space(const Subspace& a, const Subspace& b, const char* who) {
    if (a.prime() != b.prime() || a.ambient_dim() != b.ambient_dim()) {
        throw std::invalid_argument(std::string(who) + ": mismatched ambient space");
    }
}

} // namespace

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p) {
    if (p < 2) throw std::domain_error("modulus must be a prime >= 2");
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            throw std::domain_error(std::to_string(p) + " is not prime");
        }
    }
}

Residue PrimeModulus::reduce(std::int64_t x) const {
    Residue r = x % p_;
    return r < 0 ? r + p_ : r;
}

Residue PrimeModulus::inv(Residue a) const {
    a = reduce(a);
    if (a == 0) throw std::domain_error("division by zero in F_p");
    // Extended Euclid.
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t);
}

Subspace Subspace::span(const std::vector<FpVector>& rows, PrimeModulus p, int ambient_dim) {
    if (ambient_dim < 0) throw std::domain_error("ambient dimension must be nonnegative");
    Subspace s(p, ambient_dim);
    std::vector<FpVector> work;
    work.reserve(rows.size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != ambient_dim) {
            throw std::invalid_argument("span: ragged input row");
        }
        FpVector reduced(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) reduced[i] = p.reduce(r[i]);
        work.push_back(std::move(reduced));
    }
    int rank = gauss_jordan(work, p, ambient_dim);
    work.resize(static_cast<std::size_t>(rank));
    s.basis_ = std::move(work);
    return s;
}

Subspace Subspace::zero(PrimeModulus p, int ambient_dim) {
    return span({}, p, ambient_dim);
}

Subspace Subspace::full(PrimeModulus p, int ambient_dim) {
    std::vector<FpVector> rows;
    for (int i = 0; i < ambient_dim; ++i) {
        FpVector e(static_cast<std::size_t>(ambient_dim), 0);
        e[static_cast<std::size_t>(i)] = 1;
        rows.push_back(std::move(e));
    }
    return span(rows, p, ambient_dim);
}

bool Subspace::contains(const FpVector& v) const {
    if (static_cast<int>(v.size()) != n_) {
        throw std::invalid_argument("contains: wrong vector length");
    }
    FpVector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = p_.reduce(v[i]);
    for (const auto& row : basis_) {
        std::size_t pivot = 0;
        while (pivot < row.size() && row[pivot] == 0) ++pivot;
        Residue factor = w[pivot];
        if (factor == 0) continue;
        for (std::size_t j = pivot; j < w.size(); ++j) {
            w[j] = p_.sub(w[j], p_.mul(factor, row[j]));
        }
    }
    return std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (p_ != other.p_ || n_ != other.n_) {
        throw std::invalid_argument("contains: mismatched ambient space");
    }
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const FpVector& v) { return contains(v); });
}

std::vector<FpVector> Subspace::elements() const {
    std::vector<FpVector> out;
    const int k = dim();
    std::vector<Residue> digits(static_cast<std::size_t>(k), 0);
    while (true) {
        FpVector v(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < k; ++i) {
            Residue c = digits[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            for (int j = 0; j < n_; ++j) {
                auto u = static_cast<std::size_t>(j);
                v[u] = p_.add(v[u], p_.mul(c, basis_[static_cast<std::size_t>(i)][u]));
            }
        }
        out.push_back(std::move(v));
        int i = 0;
        while (i < k) {
            auto u = static_cast<std::size_t>(i);
            if (++digits[u] < p_.value()) break;
            digits[u] = 0;
            ++i;
        }
        if (i == k) break;
    }
    return out;
}

std::strong_ordering Subspace::operator<=>(const Subspace& other) const {
    if (auto c = dim() <=> other.dim(); c != std::strong_ordering::equal) return c;
    if (auto c = basis_ <=> other.basis_; c != std::strong_ordering::equal) return c;
    if (auto c = n_ <=> other.n_; c != std::strong_ordering::equal) return c;
    return p_.value() <=> other.p_.value();
}

Hyperplane::Hyperplane(FpVector normal, PrimeModulus p) : p_(p), normal_(std::move(normal)) {
    for (auto& x : normal_) x = p_.reduce(x);
    auto first = std::find_if(normal_.begin(), normal_.end(),
                              [](Residue x) { return x != 0; });
    if (first == normal_.end()) {
        throw std::invalid_argument("hyperplane normal must be nonzero");
    }
    Residue scale = p_.inv(*first);
    for (auto& x : normal_) x = p_.mul(x, scale);
}

Subspace Hyperplane::subspace() const {
    return annihilator(Subspace::span({normal_}, p_, ambient_dim()));
}

Subspace rref(const std::vector<FpVector>& rows, PrimeModulus p, int ambient_dim) {
    return Subspace::span(rows, p, ambient_dim);
}

std::vector<Subspace> enumerate_subspaces(int n, PrimeModulus p, int k, std::int64_t cap) {
    if (n < 0 || k < 0 || k > n) {
        throw std::domain_error("enumerate_subspaces requires 0 <= k <= n");
    }
    checked_pow(p.value(), n, cap, "enumerate_subspaces");

    std::vector<Subspace> out;
    for (const auto& pivots : k_subsets(n, k)) {
        std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
        for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

        // Free entries of the RREF pattern: (row i, col j) with j right of
        // row i's pivot and j not a pivot column.
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < k; ++i) {
            for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < n; ++j) {
                if (!is_pivot[static_cast<std::size_t>(j)]) free_pos.emplace_back(i, j);
            }
        }

        std::vector<FpVector> basis(static_cast<std::size_t>(k),
                                    FpVector(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < k; ++i) {
            basis[static_cast<std::size_t>(i)]
                 [static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = 1;
        }

        std::vector<Residue> digits(free_pos.size(), 0);
        while (true) {
            for (std::size_t t = 0; t < free_pos.size(); ++t) {
                auto [i, j] = free_pos[t];
                basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = digits[t];
            }
            out.push_back(Subspace::span(basis, p, n));
            std::size_t t = 0;
            while (t < free_pos.size()) {
                if (++digits[t] < p.value()) break;
                digits[t] = 0;
                ++t;
            }
            if (t == free_pos.size()) break;
        }
    }
    return out;
}

Subspace annihilator(const Subspace& s) {
    const int n = s.ambient_dim();
    const auto& p = s.prime();
    const auto& basis = s.basis();

    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (const auto& row : basis) {
        int c = 0;
        while (row[static_cast<std::size_t>(c)] == 0) ++c;
        pivot_col.push_back(c);
        is_pivot[static_cast<std::size_t>(c)] = true;
    }

    // One kernel vector per free column f: x_f = 1, x_{pivot_i} = -B[i][f].
    std::vector<FpVector> kernel_rows;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        FpVector v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            v[static_cast<std::size_t>(pivot_col[i])] =
                p.neg(basis[i][static_cast<std::size_t>(f)]);
        }
        kernel_rows.push_back(std::move(v));
    }
    return Subspace::span(kernel_rows, p, n);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_space(a, b, "intersect");
    Subspace ann_a = annihilator(a);
    Subspace ann_b = annihilator(b);
    std::vector<FpVector> stacked = ann_a.basis();
    stacked.insert(stacked.end(), ann_b.basis().begin(), ann_b.basis().end());
    return annihilator(Subspace::span(stacked, a.prime(), a.ambient_dim()));
}

std::vector<Hyperplane> all_hyperplanes(int n, PrimeModulus p, std::int64_t cap) {
    if (n < 1) throw std::domain_error("all_hyperplanes requires n >= 1");
    checked_pow(p.value(), n, cap, "all_hyperplanes");

    std::vector<Hyperplane> out;
    // Canonical normals in ascending lexicographic order: first nonzero
    // entry is 1, later entries arbitrary.
    for (int lead = n - 1; lead >= 0; --lead) {
        FpVector normal(static_cast<std::size_t>(n), 0);
        normal[static_cast<std::size_t>(lead)] = 1;
        const int tail = n - 1 - lead;
        std::vector<Residue> digits(static_cast<std::size_t>(tail), 0);
        while (true) {
            for (int t = 0; t < tail; ++t) {
                normal[static_cast<std::size_t>(lead + 1 + t)] = digits[static_cast<std::size_t>(t)];
            }
            out.emplace_back(normal, p);
            // Advance the suffix as a big-endian counter so normals come
            // out lexicographically.
            int t = tail - 1;
            while (t >= 0) {
                auto u = static_cast<std::size_t>(t);
                if (++digits[u] < p.value()) break;
                digits[u] = 0;
                --t;
            }
            if (t < 0) break;
        }
    }
    return out;
}

std::vector<Hyperplane> express_as_hyperplane_intersection(const Subspace& s) {
    const int n = s.ambient_dim();
    const int k = s.dim();
    const auto& p = s.prime();
    if (k == n) return {};

    // Extend the basis of S to a basis of the ambient space with standard
    // basis vectors, greedily by index.
    std::vector<FpVector> full_basis = s.basis();
    Subspace current = s;
    for (int i = 0; i < n && static_cast<int>(full_basis.size()) < n; ++i) {
        FpVector e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        if (!current.contains(e)) {
            full_basis.push_back(e);
            current = Subspace::span(full_basis, p, n);
        }
    }

    // Invert the basis matrix: Gauss-Jordan on [M | I].
    std::vector<FpVector> aug(static_cast<std::size_t>(n),
                              FpVector(static_cast<std::size_t>(2 * n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                full_basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
    }
    gauss_jordan(aug, p, 2 * n);

    // Column j of M^{-1} is the dual covector of basis vector j; the
    // hyperplanes killing the appended vectors are exactly the ones whose
    // intersection recovers S.
    std::vector<Hyperplane> out;
    for (int j = k; j < n; ++j) {
        FpVector covector(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            covector[static_cast<std::size_t>(i)] =
                aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
        }
        out.emplace_back(std::move(covector), p);
    }
    return out;
}

int intersection_number_subspace(const Subspace& s) {
    return s.ambient_dim() - s.dim();
}

bool intersection_number_is_minimal(const Subspace& s, std::int64_t cap) {
    const int n = s.ambient_dim();
    const auto& p = s.prime();
    checked_pow(p.value(), n, cap, "intersection_number_is_minimal");

    const int target = intersection_number_subspace(s);
    if (target == 0) return true; // the empty intersection is V itself

    // Achievable with `target` hyperplanes?
    auto constructive = express_as_hyperplane_intersection(s);
    Subspace folded = Subspace::full(p, n);
    for (const auto& h : constructive) folded = intersect(folded, h.subspace());
    if (static_cast<int>(constructive.size()) != target || folded != s) return false;

    // And with no fewer: exhaust every smaller subset.
    const auto hyperplanes = all_hyperplanes(n, p, cap);
    const int m = static_cast<int>(hyperplanes.size());
    for (int j = 1; j < target; ++j) {
        for (const auto& subset : k_subsets(m, j)) {
            Subspace acc = Subspace::full(p, n);
            for (int idx : subset) {
                acc = intersect(acc, hyperplanes[static_cast<std::size_t>(idx)].subspace());
            }
            if (acc == s) return false;
        }
    }
    return true;
}

} // namespace qlattice
