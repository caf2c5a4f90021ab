#include "divknot/defect.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace divknot;

namespace {

struct Snail {
    DivideDiagram diagram;
    SeifertData data;
};

Snail make_snail(int n) {
    Snail s{analyse(snail(n)), {}};
    s.data = seifert_matrix(s.diagram);
    return s;
}

}  // namespace

TEST_CASE("restrict_form") {
    const IntMatrix a = int_matrix({{1, 1}, {0, 1}});
    CHECK(restrict_form(a, SubgroupBasis{IntMatrix::Identity(2, 2)}) == a);
    CHECK(restrict_form(a, SubgroupBasis{IntMatrix(0, 2)}).size() == 0);
    CHECK_THROWS_AS(restrict_form(a, SubgroupBasis{int_matrix({{1, 0, 0}})}), std::invalid_argument);
    CHECK_THROWS_AS(restrict_form(a, SubgroupBasis{int_matrix({{1, 1}, {2, 2}})}), std::invalid_argument);

    const Snail s2 = make_snail(2);
    const SubgroupBasis v = snail_subgroup_in_basis(s2.diagram, s2.data, 2);
    CHECK(restrict_form(s2.data.matrix, v) == int_matrix({{0, 0}, {1, 1}}));
}

TEST_CASE("verify_alex_trivial") {
    // A whose restriction to the coordinate sublattice is [[0,0],[1,1]]
    const IntMatrix b = int_matrix({{0, 0}, {1, 1}});
    const auto cert = verify_alex_trivial(b, SubgroupBasis{IntMatrix::Identity(2, 2)}, 5);
    REQUIRE(cert);
    CHECK(cert->unit == Unit{1, 1});
    CHECK(cert->upper_bound == 4);

    CHECK_FALSE(verify_alex_trivial(int_matrix({{1}}), SubgroupBasis{int_matrix({{1}})}, 1));

    const auto empty = verify_alex_trivial(int_matrix({{1, 1}, {0, 1}}), SubgroupBasis{IntMatrix(0, 2)}, 1);
    REQUIRE(empty);
    CHECK(empty->upper_bound == 1);
    CHECK(empty->unit == Unit{1, 0});
}

TEST_CASE("snail_subgroup coordinates") {
    CHECK(snail_subgroup(1).rank() == 0);
    CHECK(snail_subgroup(2).vectors == int_matrix({{0, 1, -1, 0}, {0, 0, 0, 1}}));
    CHECK(snail_subgroup(4).rank() == 6);
    CHECK(rational_rank(snail_subgroup(7).vectors) == 12);
    CHECK_THROWS_AS(snail_subgroup(0), std::invalid_argument);
}

TEST_CASE("snail frame runs from the inside out") {
    for (int n = 1; n <= 6; ++n) {
        const Snail s = make_snail(n);
        const auto frame = snail_frame(s.diagram, s.data, n);
        REQUIRE(frame.size() == static_cast<std::size_t>(2 * n));
        for (int i = 0; i < n; ++i) {
            const auto& alpha = s.data.basis[static_cast<std::size_t>(frame[static_cast<std::size_t>(i)])];
            // innermost black, then alternating
            CHECK((alpha.kind == GeneratorKind::BlackRegion) == (i % 2 == 0));
            CHECK(s.data.basis[static_cast<std::size_t>(frame[static_cast<std::size_t>(n + i)])].label ==
                  "v" + std::to_string(i + 1));
        }
    }
}

TEST_CASE("restricted snail determinant is ±t^(n-1)") {
    for (int n = 1; n <= 10; ++n) {
        const Snail s = make_snail(n);
        const IntMatrix b = restrict_form(s.data.matrix, snail_subgroup_in_basis(s.diagram, s.data, n));
        const Laurent det = laurent_det(alexander_matrix(b));
        const auto unit = is_unit(det);
        REQUIRE(unit);
        CHECK(unit->exponent == n - 1);
        CHECK(normalize_alexander(det) == Laurent(1));
    }
}

TEST_CASE("entrywise identities of the restricted snail form") {
    for (int n = 2; n <= 10; ++n) {
        const Snail s = make_snail(n);
        const IntMatrix b = restrict_form(s.data.matrix, snail_subgroup_in_basis(s.diagram, s.data, n));
        const Eigen::Index m = n - 1;
        auto a_ = [](Eigen::Index i) { return i - 1; };
        auto b_ = [m](Eigen::Index i) { return m + i - 1; };
        for (Eigen::Index i = 1; i <= m; ++i) {
            for (Eigen::Index j = 1; j <= m; ++j) CHECK(b(a_(i), a_(j)) == 0);
            CHECK(b(a_(i), b_(i)) == (i % 2 == 0 ? 1 : 0));
            CHECK(b(b_(i), a_(i)) == (i % 2 == 1 ? 1 : 0));
            for (Eigen::Index j = i + 1; j <= m; ++j) {
                CHECK(b(a_(i), b_(j)) == 0);
                CHECK(b(b_(j), a_(i)) == 0);
            }
        }
    }
}

TEST_CASE("search_defect on small snails") {
    SearchConfig cfg;
    cfg.target_upper_bound = 1;
    for (int n = 2; n <= 4; ++n) {
        const Snail s = make_snail(n);
        SearchStats stats;
        const DefectCertificate cert = search_defect(s.data.matrix, n, cfg, &stats);
        CHECK(cert.upper_bound == 1);
        CHECK(cert.subgroup.rank() == 2 * n - 2);
        CHECK(revalidate(s.data.matrix, n, cert));
        CHECK_FALSE(stats.timed_out);
        CHECK_FALSE(stats.truncated);
    }
}

TEST_CASE("search_defect on the trefoil finds nothing") {
    const IntMatrix a = make_snail(1).data.matrix;
    // brute force over the coefficient box: p^2 + pq + q^2 vanishes only at 0
    for (long p = -1; p <= 1; ++p)
        for (long q = -1; q <= 1; ++q) {
            const BigInt value = p * p * a(0, 0) + p * q * (a(0, 1) + a(1, 0)) + q * q * a(1, 1);
            CHECK((value == 0) == (p == 0 && q == 0));
        }
    SearchStats stats;
    const DefectCertificate cert = search_defect(a, 1, SearchConfig{}, &stats);
    CHECK(cert.subgroup.rank() == 0);
    CHECK(cert.upper_bound == 1);
    CHECK(stats.isotropic == 0);
}

TEST_CASE("search_defect on the empty form") {
    const DefectCertificate cert = search_defect(IntMatrix(0, 0), 0, SearchConfig{});
    CHECK(cert.upper_bound == 0);
    CHECK(cert.subgroup.rank() == 0);
}

TEST_CASE("search_defect respects the candidate cap") {
    const Snail s = make_snail(3);
    SearchConfig cfg;
    cfg.max_candidates = 5;
    SearchStats stats;
    const DefectCertificate cert = search_defect(s.data.matrix, 3, cfg, &stats);
    CHECK(stats.truncated);
    CHECK(stats.candidates == 5);
    CHECK(revalidate(s.data.matrix, 3, cert));
}

TEST_CASE("g4_bounds") {
    for (int n : {1, 3}) {
        const Snail s = make_snail(n);
        const BoundsReport r = g4_bounds(s.data, SearchConfig{}, snail_subgroup_in_basis(s.diagram, s.data, n));
        CHECK(r.g4top_lower == 1);
        CHECK(r.g4top_upper == 1);
        CHECK(r.exact);
    }
    const BoundsReport chord = g4_bounds(seifert_matrix(analyse(parse_divide(""))), SearchConfig{});
    CHECK(chord.g4top_lower == 0);
    CHECK(chord.g4top_upper == 0);
    CHECK(chord.exact);

    // without the known sublattice the search alone closes the gap for small snails
    const Snail s3 = make_snail(3);
    const BoundsReport searched = g4_bounds(s3.data, SearchConfig{});
    CHECK(searched.exact);
    REQUIRE(searched.certificates.size() == 1);
    CHECK(searched.certificates[0].source == "search");
}

TEST_CASE("property: bounds and certificates over the corpus") {
    auto corpus = testing::random_divides(50, 6, 4242);
    SearchConfig cfg;
    cfg.time_budget_seconds = 2.0;
    for (const auto& d : corpus) {
        const SeifertData sd = seifert_matrix(analyse(d));
        const BoundsReport r = g4_bounds(sd, cfg);
        INFO(d.gauss_code());
        CHECK(r.g4top_lower <= r.g4top_upper);
        CHECK(r.g4top_upper <= r.invariants.genus);
        CHECK(r.exact == (r.g4top_lower == r.g4top_upper));
        for (const auto& c : r.certificates) {
            CHECK(c.subgroup.rank() % 2 == 0);
            CHECK(revalidate(sd.matrix, r.invariants.genus, c));
        }
    }
    for (int n = 1; n <= 10; ++n) {
        const Snail s = make_snail(n);
        const BoundsReport r = g4_bounds(s.data, cfg, snail_subgroup_in_basis(s.diagram, s.data, n));
        CHECK(r.g4top_lower == 1);
        CHECK(r.g4top_upper == 1);
        for (const auto& c : r.certificates) CHECK(revalidate(s.data.matrix, n, c));
    }
}

TEST_CASE("revalidate rejects tampered certificates") {
    const Snail s = make_snail(3);
    auto cert = *verify_alex_trivial(s.data.matrix, snail_subgroup_in_basis(s.diagram, s.data, 3), 3);
    CHECK(revalidate(s.data.matrix, 3, cert));
    DefectCertificate wrong_bound = cert;
    wrong_bound.upper_bound = 0;
    CHECK_FALSE(revalidate(s.data.matrix, 3, wrong_bound));
    DefectCertificate wrong_vectors = cert;
    wrong_vectors.subgroup.vectors(0, 0) += 1;
    CHECK_FALSE(revalidate(s.data.matrix, 3, wrong_vectors));
}
