#include "divknot/defect.hpp"
#include "divknot/seifert.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace divknot;

TEST_CASE("ishikawa_basis") {
    const DivideDiagram loop = analyse(snail(1));
    const auto basis = ishikawa_basis(loop);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].kind == GeneratorKind::BlackRegion);
    CHECK(basis[1].kind == GeneratorKind::DoublePoint);
    CHECK(basis[1].label == "v1");

    for (int n = 1; n <= 8; ++n) CHECK(ishikawa_basis(analyse(snail(n))).size() == static_cast<std::size_t>(2 * n));
    CHECK(ishikawa_basis(analyse(parse_divide(""))).empty());
}

TEST_CASE("basis order: inner regions by id, then vertices by first visit") {
    const DivideDiagram d = analyse(snail(4));
    const auto basis = ishikawa_basis(d);
    std::size_t last_region = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(basis[i].kind != GeneratorKind::DoublePoint);
        if (i > 0) CHECK(basis[i].region > last_region);
        last_region = basis[i].region;
    }
    CHECK(basis[4].label == "v4");
    CHECK(basis[7].label == "v1");
}

TEST_CASE("incidences and shared edges") {
    const DivideDiagram loop = analyse(snail(1));
    const std::size_t inner = snail_innermost_region(loop.map, loop.regions);
    const int v1 = loop.map.vertex_index("v1");
    CHECK(vertex_multiplicity(loop.map, loop.regions[inner], v1) == 1);
    CHECK(incidences(loop.map, loop.regions, v1)[inner] == 1);

    const DivideDiagram two = analyse(snail(2));
    const SeifertData sd2 = seifert_matrix(two);
    const auto frame = snail_frame(two, sd2, 2);
    const Region& alpha2 = two.regions[sd2.basis[static_cast<std::size_t>(frame[1])].region];
    CHECK(vertex_multiplicity(two.map, alpha2, two.map.vertex_index("v1")) == 2);
    CHECK(vertex_multiplicity(two.map, alpha2, two.map.vertex_index("v2")) == 1);

    const DivideDiagram three = analyse(snail(3));
    const SeifertData sd3 = seifert_matrix(three);
    const auto f3 = snail_frame(three, sd3, 3);
    const Region& a1 = three.regions[sd3.basis[static_cast<std::size_t>(f3[0])].region];
    const Region& a3 = three.regions[sd3.basis[static_cast<std::size_t>(f3[2])].region];
    CHECK(shared_edges(three.map, a1, a3) == 0);
    CHECK(vertex_multiplicity(three.map, a1, three.map.vertex_index("v3")) == 0);
    // α3 sits across v2->v1 and v1->v2 from α2, so it meets v1 in one corner
    CHECK(vertex_multiplicity(three.map, a3, three.map.vertex_index("v1")) == 1);
}

TEST_CASE("seifert_matrix of the loop divide") {
    const SeifertData sd = seifert_matrix(analyse(snail(1)));
    CHECK(sd.matrix == int_matrix({{1, 1}, {0, 1}}));
    validate_seifert(sd);
}

TEST_CASE("seifert_matrix of snail(2) matches the incidence table") {
    const DivideDiagram d = analyse(snail(2));
    const SeifertData sd = seifert_matrix(d);
    const auto f = snail_frame(d, sd, 2);
    auto S = [&](int i, int j) { return sd.matrix(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]); };
    // frame order: α1 (black), α2 (white), γ1, γ2
    CHECK(S(0, 1) == 1);  // one shared edge
    CHECK(S(1, 0) == 0);
    CHECK(S(0, 2) == 1);  // v1 once on ∂α1
    CHECK(S(2, 1) == 2);  // v1 twice on ∂α2
    CHECK(S(3, 1) == 1);  // v2 once on ∂α2
    CHECK(S(1, 3) == 0);
    CHECK(S(2, 3) == 0);
    CHECK(S(3, 2) == 0);
}

TEST_CASE("table structure holds on every divide in the corpus") {
    auto corpus = testing::random_divides(60, 6, 31);
    for (int n = 1; n <= 10; ++n) corpus.push_back(snail(n));
    for (const auto& d : corpus) {
        const DivideDiagram diagram = analyse(d);
        const SeifertData sd = seifert_matrix(diagram);
        const auto n = static_cast<Eigen::Index>(sd.size());
        CHECK(sd.matrix.rows() == n);
        const BigInt edge_bound = BigInt(2 * static_cast<long>(diagram.map.edge_count()));
        for (Eigen::Index i = 0; i < n; ++i) {
            CHECK(sd.matrix(i, i) == 1);
            for (Eigen::Index j = 0; j < n; ++j) {
                CHECK(sd.matrix(i, j) >= 0);
                CHECK(sd.matrix(i, j) <= edge_bound);
                const auto ki = sd.basis[static_cast<std::size_t>(i)].kind;
                const auto kj = sd.basis[static_cast<std::size_t>(j)].kind;
                if (ki == GeneratorKind::WhiteRegion && kj == GeneratorKind::BlackRegion) CHECK(sd.matrix(i, j) == 0);
                if (i != j && ki == kj) CHECK(sd.matrix(i, j) == 0);
            }
        }
        const IntMatrix form = sd.matrix - sd.matrix.transpose();
        CHECK(unimodular_check(form));
    }
}

TEST_CASE("colour swap transposes the Seifert matrix") {
    auto corpus = testing::random_divides(30, 6, 8);
    corpus.push_back(snail(5));
    for (const auto& d : corpus) {
        const SeifertData a = seifert_matrix(analyse(d));
        const SeifertData b = seifert_matrix(analyse(d, true));
        // the basis order does not depend on colours, so the matching permutation is the identity
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.basis[i].label == b.basis[i].label);
        CHECK(b.matrix == a.matrix.transpose());
    }
}

TEST_CASE("snail symmetrised forms have diagonal 2") {
    for (int n = 1; n <= 10; ++n) {
        const SeifertData sd = seifert_matrix(analyse(snail(n)));
        const IntMatrix sym = sd.matrix + sd.matrix.transpose();
        for (Eigen::Index i = 0; i < sym.rows(); ++i) CHECK(sym(i, i) == 2);
    }
}

TEST_CASE("validate_seifert rejects broken forms") {
    SeifertData bad;
    bad.matrix = int_matrix({{1, 2}, {0, 1}});  // A - A^T has determinant 4
    CHECK_THROWS_AS(validate_seifert(bad), InvariantViolation);
    bad.matrix = int_matrix({{2, 1}, {0, 1}});
    CHECK_THROWS_AS(validate_seifert(bad), InvariantViolation);
}
