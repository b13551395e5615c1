#include "qlattice/qexact.hpp"

#include <cstdint>
#include <utility>

namespace qlattice {

namespace {

void require_nonneg(int v, const char* what) {
    if (v < 0) {
        throw std::domain_error(std::string(what) + " must be nonnegative");
    }
}

ExactInt pow_int(const ExactInt& base, int exp) {
    ExactInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

QPolynomial::QPolynomial(ExactInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPolynomial QPolynomial::monomial(ExactInt c, int d) {
    QPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(d) + 1, ExactInt(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

ExactInt QPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

ExactInt QPolynomial::evaluate(const ExactInt& q) const {
    ExactInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q + *it;
    }
    return acc;
}

QPolynomial QPolynomial::shifted(int k) const {
    if (is_zero() || k == 0) {
        QPolynomial p = *this;
        return p;
    }
    QPolynomial p;
    p.coeffs_.assign(coeffs_.size() + static_cast<std::size_t>(k), ExactInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        p.coeffs_[i + static_cast<std::size_t>(k)] = coeffs_[i];
    }
    return p;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), ExactInt(0));
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string QPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += coeffs_[i].str();
        } else {
            if (coeffs_[i] != 1) out += coeffs_[i].str() + "*";
            out += (i == 1) ? "q" : "q^" + std::to_string(i);
        }
    }
    return out;
}

ExactInt gauss_binom(int n, int k, const ExactInt& q) {
    require_nonneg(n, "n");
    require_nonneg(k, "k");
    if (q <= 0) throw std::domain_error("q must be a positive integer");
    if (k > n) return 0;
    if (k == 0) return 1;
    if (q == 1) return gauss_binom_poly(n, k).evaluate(1);

    // Product formula: prod_{i=0}^{k-1} (q^n - q^i) / (q^k - q^i).
    ExactInt num = 1, den = 1;
    const ExactInt qn = pow_int(q, n);
    const ExactInt qk = pow_int(q, k);
    ExactInt qi = 1;
    for (int i = 0; i < k; ++i) {
        num *= qn - qi;
        den *= qk - qi;
        qi *= q;
    }
    ExactInt quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) {
        throw std::logic_error("gauss_binom: product formula did not divide exactly");
    }
    return quot;
}

QPolynomial gauss_binom_poly(int n, int k) {
    require_nonneg(n, "n");
    require_nonneg(k, "k");
    if (k > n) return QPolynomial{};

    // Row-by-row q-Pascal triangle; row m holds P(m, 0..m).
    std::vector<QPolynomial> row{QPolynomial::one()};
    for (int m = 1; m <= n; ++m) {
        std::vector<QPolynomial> next(static_cast<std::size_t>(m) + 1);
        next[0] = QPolynomial::one();
        for (int j = 1; j < m; ++j) {
            next[j] = row[j - 1] + row[j].shifted(j);
        }
        next[static_cast<std::size_t>(m)] = QPolynomial::one();
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

ExactInt gauss_sum(int n, const ExactInt& q) {
    require_nonneg(n, "n");
    if (q <= 0) throw std::domain_error("q must be a positive integer");
    ExactInt total = 0;
    for (int k = 0; k <= n; ++k) {
        total += gauss_binom(n, k, q);
    }
    return total;
}

std::vector<NoncommTerm> noncomm_expand(int n, int cap) {
    require_nonneg(n, "n");
    if (n > cap) {
        throw cap_exceeded_error("noncomm_expand: n = " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
    }

    // collected[k] accumulates the coefficient of y^(n-k) x^k.
    std::vector<QPolynomial> collected(static_cast<std::size_t>(n) + 1);
    std::vector<std::uint8_t> word(static_cast<std::size_t>(n));

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        int xdeg = 0;
        for (int i = 0; i < n; ++i) {
            word[static_cast<std::size_t>(i)] = (mask >> i) & 1u; // 1 = x, 0 = y
            xdeg += (mask >> i) & 1u;
        }
        // Rewrite to canonical y..y x..x form: each adjacent xy -> yx swap
        // applies the relation once, costing a factor of q.
        int swaps = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < n; ++i) {
                auto a = static_cast<std::size_t>(i);
                if (word[a] == 1 && word[a + 1] == 0) {
                    std::swap(word[a], word[a + 1]);
                    ++swaps;
                    changed = true;
                }
            }
        }
        collected[static_cast<std::size_t>(xdeg)] += QPolynomial::monomial(1, swaps);
    }

    std::vector<NoncommTerm> terms;
    terms.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = n; k >= 0; --k) {
        terms.push_back(NoncommTerm{n - k, k, collected[static_cast<std::size_t>(k)]});
    }
    return terms;
}

bool congruence_check(int n, const ExactInt& q) {
    require_nonneg(n, "n");
    if (q < 2) throw std::domain_error("congruence_check requires q >= 2");
    const ExactInt modulus = q - 1;
    if (modulus == 1) return true;
    ExactInt diff = gauss_sum(n, q) - pow_int(2, n);
    return diff % modulus == 0;
}

} // namespace qlattice
