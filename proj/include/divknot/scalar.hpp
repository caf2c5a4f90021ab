// Exact scalar types and the dense matrix aliases used throughout divknot.
#ifndef DIVKNOT_SCALAR_HPP
#define DIVKNOT_SCALAR_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpq_class;
    using Literal = mpz_class;
    using Nested = mpz_class;
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    using Real = mpq_class;
    using NonInteger = mpq_class;
    using Literal = mpq_class;
    using Nested = mpq_class;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 300,
        MulCost = 300
    };
};

}  // namespace Eigen

namespace divknot {

using BigInt = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = Matrix<BigInt>;

/// Quotient a / b, which must be exact.
inline BigInt exact_quotient(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("exact_quotient: division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error("exact_quotient: inexact division");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline long long exact_quotient(long long a, long long b) {
    if (b == 0) throw std::domain_error("exact_quotient: division by zero");
    if (a % b != 0) throw std::domain_error("exact_quotient: inexact division");
    return a / b;
}

inline int sign_of(const BigInt& x) { return sgn(x); }
inline int sign_of(long long x) { return (x > 0) - (x < 0); }

inline std::optional<std::int64_t> to_int64(const BigInt& x) {
    if (!x.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(x.get_si());
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// Row-major copy of an integer matrix, convenient for brace-initialised tests.
inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = r == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.begin()->size());
    IntMatrix m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Eigen::Index>(row.size()) != c)
            throw std::invalid_argument("int_matrix: ragged rows");
        Eigen::Index j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

}  // namespace divknot


#endif  // DIVKNOT_SCALAR_HPP
