#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qlattice/errors.hpp"

namespace qlattice {

/// Arbitrary-precision signed integer. Every count produced by this
/// library is exact; nothing here ever saturates or wraps.
using ExactInt = boost::multiprecision::cpp_int;

/// Integer-coefficient polynomial in the formal variable q,
/// stored densely: coeff(i) is the coefficient of q^i. The top
/// coefficient is always nonzero (the zero polynomial has no
/// coefficients at all), so equality is plain vector equality.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(ExactInt constant);

    /// c * q^d
    static QPolynomial monomial(ExactInt c, int d);
    static QPolynomial one() { return QPolynomial(ExactInt(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial, -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of q^i (zero beyond the degree).
    ExactInt coeff(int i) const;
    const std::vector<ExactInt>& coefficients() const { return coeffs_; }

    ExactInt evaluate(const ExactInt& q) const;

    /// Multiply by q^k.
    QPolynomial shifted(int k) const;

    QPolynomial& operator+=(const QPolynomial& other);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) {
        a += b;
        return a;
    }

    bool operator==(const QPolynomial&) const = default;

    /// Human-readable form, e.g. "1 + q + 2*q^2"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    std::vector<ExactInt> coeffs_;
    void trim();
};

/// One collected term of the expansion of (x+y)^n over noncommuting x, y.
/// Canonical monomial order is y-power first, then x-power (left-to-right
/// rewriting with xy -> q*yx never produces negative powers of q that way);
/// both degrees are carried so reports can index terms either way.
struct NoncommTerm {
    int y_degree = 0;
    int x_degree = 0;
    QPolynomial coefficient;
};

inline constexpr int kDefaultExpandCap = 12;

/// Gaussian binomial coefficient binom(n,k)_q evaluated at an integer q >= 1.
/// Computed by the product formula with exact division for q >= 2; the q = 1
/// case (ordinary binomial coefficient) goes through the polynomial route
/// because the product formula degenerates to 0/0 there.
/// Returns 1 for k = 0 and 0 for k > n. Throws std::domain_error for q <= 0
/// or negative n, k.
ExactInt gauss_binom(int n, int k, const ExactInt& q);

/// binom(n,k)_q as a polynomial in q, built from the recurrence
///   P(n,k) = P(n-1,k-1) + q^k * P(n-1,k),  P(n,0) = 1,  P(n,k) = 0 for k > n.
QPolynomial gauss_binom_poly(int n, int k);

/// S_{n,q}: the sum of binom(n,k)_q over k = 0..n. Equals the total number
/// of subspaces of F_q^n when q is a prime power, and 2^n when q = 1.
ExactInt gauss_sum(int n, const ExactInt& q);

/// Expand (x+y)^n as 2^n words over {x,y}, rewrite every word to the
/// canonical y-then-x order with the relation xy -> q*yx (each adjacent
/// swap costs one factor of q), and collect like terms. Terms are returned
/// by descending x-degree; the coefficient at x-degree k equals
/// gauss_binom_poly(n,k). Throws cap_exceeded_error for n > cap.
std::vector<NoncommTerm> noncomm_expand(int n, int cap = kDefaultExpandCap);

/// True iff S_{n,q} is congruent to 2^n modulo q-1. This is a theorem,
/// so the function returning anything but true indicates a defect.
/// Requires q >= 2 (for q = 2 the congruence is modulo 1, vacuously true).
bool congruence_check(int n, const ExactInt& q);

} // namespace qlattice
