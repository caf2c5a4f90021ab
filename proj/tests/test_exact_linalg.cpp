#include "divknot/exact_linalg.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

using namespace divknot;

namespace {

Laurent t_pow(long e, long c = 1) { return Laurent::monomial(BigInt(c), e); }

LaurentMatrix random_laurent_matrix(std::mt19937& rng, Eigen::Index n, long lo, long hi) {
    LaurentMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = testing::random_laurent(rng, lo, hi, 2);
    return m;
}

}  // namespace

TEST_CASE("laurent_det examples") {
    LaurentMatrix m(2, 2);
    m << t_pow(1) - Laurent(1), t_pow(1), Laurent(-1), t_pow(1) - Laurent(1);
    CHECK(laurent_det(m) == Laurent::from_terms({{2, 1}, {1, -1}, {0, 1}}));

    LaurentMatrix id = LaurentMatrix::Identity(3, 3);
    CHECK(laurent_det(id) == Laurent(1));

    LaurentMatrix anti(2, 2);
    anti << Laurent{}, t_pow(1), Laurent(-1), Laurent{};
    CHECK(laurent_det(anti) == t_pow(1));

    CHECK(laurent_det(LaurentMatrix(0, 0)) == Laurent(1));
    CHECK_THROWS_AS(laurent_det(LaurentMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("laurent_det agrees with permutation expansion up to dimension 4") {
    std::mt19937 rng(11);
    for (Eigen::Index n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 40; ++trial) {
            const LaurentMatrix m = random_laurent_matrix(rng, n, trial % 3 == 0 ? -1 : 0, 2);
            CHECK(laurent_det(m) == testing::permutation_determinant<Laurent>(m));
        }
}

TEST_CASE("Bareiss elimination agrees with permutation expansion on Laurent matrices") {
    std::mt19937 rng(12);
    for (Eigen::Index n = 4; n <= 5; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            LaurentMatrix m = random_laurent_matrix(rng, n, 0, 2);
            if (trial % 2 == 0) m.row(0).setConstant(Laurent{});  // singular
            if (trial % 3 == 0) m(0, 0) = Laurent{};              // forces a pivot swap
            CHECK(bareiss_determinant<Laurent>(m) == testing::permutation_determinant<Laurent>(m));
        }
}

TEST_CASE("laurent_det is multiplicative on blocks and alternating under row swaps") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<Eigen::Index> dim(1, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index p = dim(rng), q = dim(rng);
        const LaurentMatrix a = random_laurent_matrix(rng, p, -1, 1);
        const LaurentMatrix b = random_laurent_matrix(rng, q, 0, 1);
        LaurentMatrix block = LaurentMatrix::Constant(p + q, p + q, Laurent{});
        block.topLeftCorner(p, p) = a;
        block.bottomRightCorner(q, q) = b;
        CHECK(laurent_det(block) == laurent_det(a) * laurent_det(b));

        LaurentMatrix swapped = block;
        swapped.row(0).swap(swapped.row(p + q - 1));
        if (p + q > 1) CHECK(laurent_det(swapped) == -laurent_det(block));
    }
}

TEST_CASE("integer determinant") {
    CHECK(integer_determinant(int_matrix({{2, 1}, {1, 2}})) == 3);
    CHECK(integer_determinant(int_matrix({{0, 1}, {1, 0}})) == -1);
    CHECK(integer_determinant(int_matrix({{1, 2}, {2, 4}})) == 0);
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m(5, 5);
        for (Eigen::Index i = 0; i < 5; ++i)
            for (Eigen::Index j = 0; j < 5; ++j) m(i, j) = entry(rng);
        CHECK(integer_determinant(m) == testing::permutation_determinant<BigInt>(m));
    }
}

TEST_CASE("unimodular_check") {
    CHECK(unimodular_check(int_matrix({{0, 1}, {-1, 0}})));
    CHECK_FALSE(unimodular_check(int_matrix({{2, 0}, {0, 1}})));
    CHECK(unimodular_check(IntMatrix(0, 0)));
    CHECK_THROWS_AS(unimodular_check(IntMatrix(1, 2)), std::invalid_argument);
}

TEST_CASE("signature_exact examples") {
    CHECK(signature_exact(int_matrix({{2, 1}, {1, 2}})) == 2);
    CHECK(signature_exact(int_matrix({{0, 1}, {1, 0}})) == 0);
    CHECK(signature_exact(int_matrix({{2, 0}, {0, -5}})) == 0);
    CHECK(signature_exact(IntMatrix(0, 0)) == 0);
    CHECK(signature_exact(int_matrix({{0, 0}, {0, 0}})) == 0);
    CHECK(inertia_exact(int_matrix({{1, 1}, {1, 1}})).zero == 1);
    CHECK_THROWS_AS(signature_exact(int_matrix({{1, 2}, {3, 1}})), std::invalid_argument);
}

TEST_CASE("signature is invariant under unimodular congruence") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> entry(-3, 3);
    std::uniform_int_distribution<Eigen::Index> dim(1, 8);
    for (int trial = 0; trial < 60; ++trial) {
        const Eigen::Index n = dim(rng);
        IntMatrix m(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
        const IntMatrix p = testing::random_unimodular(n, rng);
        const IntMatrix c = p * m * p.transpose();
        const Inertia before = inertia_exact(m);
        const Inertia after = inertia_exact(c);
        CHECK(before.signature() == after.signature());
        CHECK(before.zero == after.zero);
    }
}

TEST_CASE("signature agrees with a floating-point eigenvalue count") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> entry(-5, 5);
    std::uniform_int_distribution<Eigen::Index> dim(1, 12);
    int checked = 0;
    while (checked < 50) {
        const Eigen::Index n = dim(rng);
        IntMatrix m(n, n);
        Eigen::MatrixXd f(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = i; j < n; ++j) {
                m(i, j) = m(j, i) = entry(rng);
                f(i, j) = f(j, i) = m(i, j).get_d();
            }
        const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(f).eigenvalues();
        if ((ev.array().abs() < 1e-6).any()) continue;
        const int expected = static_cast<int>((ev.array() > 0).count()) - static_cast<int>((ev.array() < 0).count());
        CHECK(signature_exact(m) == expected);
        ++checked;
    }
}

TEST_CASE("rational_rank") {
    CHECK(rational_rank(int_matrix({{1, 2, 3}, {2, 4, 6}})) == 1);
    CHECK(rational_rank(int_matrix({{0, 1, -1, 0}, {0, 0, 0, 1}})) == 2);
    CHECK(rational_rank(IntMatrix(0, 4)) == 0);
}
