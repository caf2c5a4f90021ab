// Exact determinants, unit detection and signatures over Z and Z[t, 1/t].
#ifndef DIVKNOT_EXACT_LINALG_HPP
#define DIVKNOT_EXACT_LINALG_HPP

#include "divknot/laurent.hpp"
#include "divknot/scalar.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace divknot {

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* who) {
    if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": matrix is not square");
}

}  // namespace detail

/// Cofactor expansion along the first row. Exponential; meant for tiny matrices.
template <typename Scalar>
Scalar cofactor_determinant(const Matrix<Scalar>& m) {
    detail::require_square(m, "cofactor_determinant");
    const Eigen::Index n = m.rows();
    if (n == 0) return Scalar(1);
    if (n == 1) return m(0, 0);
    Scalar det = Scalar(0);
    Matrix<Scalar> minor(n - 1, n - 1);
    for (Eigen::Index col = 0; col < n; ++col) {
        if (m(0, col) == Scalar(0)) continue;
        for (Eigen::Index i = 1; i < n; ++i)
            for (Eigen::Index j = 0, k = 0; j < n; ++j)
                if (j != col) minor(i - 1, k++) = m(i, j);
        Scalar term = m(0, col) * cofactor_determinant(minor);
        if (col % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

/// Fraction-free (Bareiss) elimination over an integral domain whose scalar
/// type provides exact_quotient. Works in place on a copy.
template <typename Scalar>
Scalar bareiss_determinant(Matrix<Scalar> m) {
    detail::require_square(m, "bareiss_determinant");
    const Eigen::Index n = m.rows();
    if (n == 0) return Scalar(1);
    bool negate = false;
    Scalar previous = Scalar(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == Scalar(0)) {
            Eigen::Index pivot = k + 1;
            while (pivot < n && m(pivot, k) == Scalar(0)) ++pivot;
            if (pivot == n) return Scalar(0);
            m.row(k).swap(m.row(pivot));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Scalar num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = exact_quotient(num, previous);
            }
            m(i, k) = Scalar(0);
        }
        previous = m(k, k);
    }
    Scalar det = m(n - 1, n - 1);
    return negate ? Scalar(-det) : det;
}

/// Exact integer determinant.
inline BigInt integer_determinant(const IntMatrix& m) { return bareiss_determinant<BigInt>(m); }

/// Exact determinant of a Laurent-polynomial matrix. Entries are shifted by a
/// common power of t into Z[t] before elimination and the result is shifted back.
inline Laurent laurent_det(const LaurentMatrix& m) {
    detail::require_square(m, "laurent_det");
    const Eigen::Index n = m.rows();
    if (n == 0) return Laurent(1);
    std::optional<long> low;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (!m(i, j).is_zero()) low = std::min(low.value_or(m(i, j).min_exponent()), m(i, j).min_exponent());
    if (!low) return Laurent{};
    LaurentMatrix shifted = m.unaryExpr([s = -*low](const Laurent& p) { return p.shifted(s); });
    Laurent det = n <= 3 ? cofactor_determinant<Laurent>(shifted) : bareiss_determinant<Laurent>(std::move(shifted));
    return det.shifted(*low * n);
}

/// t*A - A^T as a Laurent matrix.
inline LaurentMatrix alexander_matrix(const IntMatrix& a) {
    detail::require_square(a, "alexander_matrix");
    const Eigen::Index n = a.rows();
    LaurentMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            Laurent p = Laurent::monomial(a(i, j), 1);
            p.add_term(0, BigInt(-a(j, i)));
            m(i, j) = std::move(p);
        }
    return m;
}

/// A unit of Z[t, 1/t]: sign * t^exponent.
struct Unit {
    int sign = 1;
    long exponent = 0;
    friend bool operator==(const Unit&, const Unit&) = default;
};

template <typename Coeff>
std::optional<Unit> is_unit(const LaurentPoly<Coeff>& p) {
    if (p.term_count() != 1) return std::nullopt;
    const auto& [e, c] = *p.terms().begin();
    if (c == 1) return Unit{1, e};
    if (c == -1) return Unit{-1, e};
    return std::nullopt;
}

/// Canonical representative of p up to units: lowest exponent 0, positive
/// leading coefficient.
template <typename Coeff>
LaurentPoly<Coeff> normalize_alexander(const LaurentPoly<Coeff>& p) {
    if (p.is_zero()) throw std::domain_error("normalize_alexander: zero polynomial");
    LaurentPoly<Coeff> q = p.shifted(-p.min_exponent());
    return q.leading_coefficient() < 0 ? -q : q;
}

/// Inertia of a symmetric integer matrix.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    int signature() const { return positive - negative; }
};

/// Congruence diagonalisation over Q. A zero pivot is replaced by a later
/// nonzero diagonal entry when one exists; otherwise a coupled row and column
/// are added, which makes the pivot 2*m(k,j).
inline Inertia inertia_exact(const IntMatrix& m) {
    detail::require_square(m, "signature_exact");
    if (m != m.transpose()) throw std::invalid_argument("signature_exact: matrix is not symmetric");
    const Eigen::Index n = m.rows();
    Matrix<Rational> q = m.cast<Rational>();
    Inertia result;
    for (Eigen::Index k = 0; k < n; ++k) {
        if (q(k, k) == 0) {
            Eigen::Index d = k + 1;
            while (d < n && q(d, d) == 0) ++d;
            if (d < n) {
                q.row(k).swap(q.row(d));
                q.col(k).swap(q.col(d));
            } else {
                Eigen::Index j = k + 1;
                while (j < n && q(k, j) == 0) ++j;
                if (j == n) {
                    ++result.zero;
                    continue;
                }
                q.row(k) += q.row(j);
                q.col(k) += q.col(j);
            }
        }
        const Rational pivot = q(k, k);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (q(i, k) == 0) continue;
            const Rational factor = q(i, k) / pivot;
            q.row(i) -= factor * q.row(k);
            q.col(i) -= factor * q.col(k);
        }
        if (pivot > 0)
            ++result.positive;
        else
            ++result.negative;
    }
    return result;
}

inline int signature_exact(const IntMatrix& m) { return inertia_exact(m).signature(); }

/// True iff det(m) = ±1.
inline bool unimodular_check(const IntMatrix& m) {
    detail::require_square(m, "unimodular_check");
    const BigInt det = integer_determinant(m);
    return det == 1 || det == -1;
}

/// Rank over Q.
inline Eigen::Index rational_rank(const IntMatrix& m) {
    Matrix<Rational> q = m.cast<Rational>();
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < q.cols() && rank < q.rows(); ++col) {
        Eigen::Index pivot = rank;
        while (pivot < q.rows() && q(pivot, col) == 0) ++pivot;
        if (pivot == q.rows()) continue;
        q.row(rank).swap(q.row(pivot));
        for (Eigen::Index i = rank + 1; i < q.rows(); ++i) {
            if (q(i, col) == 0) continue;
            const Rational factor = q(i, col) / q(rank, col);
            q.row(i) -= factor * q.row(rank);
        }
        ++rank;
    }
    return rank;
}

}  // namespace divknot

#endif  // DIVKNOT_EXACT_LINALG_HPP
