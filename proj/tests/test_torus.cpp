#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brq/torus.hpp"

using namespace brq;

TEST_CASE("coface maps: prepend, duplicate, append") {
    FgAbGroup m = FgAbGroup::free(1);
    auto d1 = coface_maps(1, m);
    REQUIRE(d1.size() == 3);
    // delta_0([a]) = [0, a]
    CHECK(d1[0].matrix == IntMatrix{{0}, {1}});
    // delta_1([a]) = [a, a]
    CHECK(d1[1].matrix == IntMatrix{{1}, {1}});
    // delta_2([a]) = [a, 0]
    CHECK(d1[2].matrix == IntMatrix{{1}, {0}});

    auto d2 = coface_maps(2, m);
    REQUIRE(d2.size() == 4);
    // delta_3([a1,a2]) = [a1, a2, 0]
    CHECK(d2[3].matrix == IntMatrix{{1, 0}, {0, 1}, {0, 0}});
}

TEST_CASE("simplicial identities: delta_j delta_i = delta_i delta_{j-1} for i < j") {
    for (std::size_t mrank : {1u, 2u}) {
        FgAbGroup m = FgAbGroup::free(mrank);
        for (std::size_t p = 0; p <= 3; ++p) {
            auto lo = coface_maps(p, m);
            auto hi = coface_maps(p + 1, m);
            for (std::size_t i = 0; i + 1 <= p + 1; ++i)
                for (std::size_t j = i + 1; j <= p + 2; ++j)
                    CHECK(hi[j].matrix * lo[i].matrix == hi[i].matrix * lo[j - 1].matrix);
        }
    }
}

TEST_CASE("differential: p=1 vanishes on characters, identity on units") {
    UnitsComplexSpec spec(FgAbGroup::free(1), FgAbGroup::free(1), 4);
    GroupHom d1 = differential(1, spec);
    // blocks: row/col 0 is U, the rest is the character part
    CHECK(d1.matrix(0, 0) == 1);
    for (std::size_t a = 1; a < d1.matrix.rows(); ++a)
        for (std::size_t b = 1; b < d1.matrix.cols(); ++b) CHECK(d1.matrix(a, b) == 0);
    for (std::size_t a = 1; a < d1.matrix.rows(); ++a) CHECK(d1.matrix(a, 0) == 0);
    for (std::size_t b = 1; b < d1.matrix.cols(); ++b) CHECK(d1.matrix(0, b) == 0);
}

TEST_CASE("differential: p=2 character block is [-a1, 0, a2]") {
    UnitsComplexSpec spec(FgAbGroup::free(1), FgAbGroup::free(1), 4);
    GroupHom d2 = differential(2, spec);
    // U row is zero (even p)
    CHECK(d2.matrix(0, 0) == 0);
    // character block: 3x2
    IntMatrix expect{{-1, 0}, {0, 0}, {0, 1}};
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 2; ++b) CHECK(d2.matrix(1 + a, 1 + b) == expect(a, b));
}

TEST_CASE("differential matches closed forms in both parities") {
    UnitsComplexSpec spec(FgAbGroup::free(1), FgAbGroup::free(2), 8);
    for (std::size_t p = 1; p < 8; ++p) {
        GroupHom d = differential(p, spec);
        IntMatrix cf = closed_form_character_matrix(p, 2);
        for (std::size_t a = 0; a < cf.rows(); ++a)
            for (std::size_t b = 0; b < cf.cols(); ++b)
                CHECK(d.matrix(1 + a, 1 + b) == cf(a, b));
    }
}

TEST_CASE("d∘d = 0 up to degree 8 for M in {Z, Z^2, Z^3}") {
    for (std::size_t k : {1u, 2u, 3u}) {
        UnitsComplexSpec spec(FgAbGroup::free(1), FgAbGroup::free(k), 8);
        for (std::size_t p = 0; p + 1 < 8; ++p) {
            GroupHom a = differential(p, spec);
            GroupHom b = differential(p + 1, spec);
            CHECK((b.matrix * a.matrix).is_zero());
        }
    }
}

TEST_CASE("bottom row: E2^{p,0} = 0 for 2 <= p <= 6, E2^{1,0} = M") {
    UnitsComplexSpec spec(FgAbGroup::free(1), FgAbGroup::free(1), 7);
    BottomRowReport rep = bottom_row_cohomology(spec);
    REQUIRE(rep.degrees.size() == 8);
    CHECK(*rep.degrees[0].cohomology == FgAbGroup::free(1));  // U itself
    CHECK(*rep.degrees[1].cohomology == FgAbGroup::free(1));  // the character lattice
    for (std::size_t p = 2; p <= 6; ++p) {
        INFO("degree ", p);
        CHECK(rep.degrees[p].cohomology->is_trivial());
    }
    CHECK(rep.closed_form_contained);
    CHECK(rep.degree_one_note.find("zero") != std::string::npos);
}

TEST_CASE("bottom row: rank-2 characters at p=1, torsion units at p=0") {
    UnitsComplexSpec spec(FgAbGroup{1, {6}}, FgAbGroup::free(2), 4);
    BottomRowReport rep = bottom_row_cohomology(spec);
    CHECK(*rep.degrees[0].cohomology == FgAbGroup{1, {6}});
    CHECK(*rep.degrees[1].cohomology == FgAbGroup::free(2));
    CHECK(rep.degrees[2].cohomology->is_trivial());
    CHECK(rep.degrees[3].cohomology->is_trivial());
}

TEST_CASE("bottom row: trivial character lattice") {
    UnitsComplexSpec spec(FgAbGroup::free(1), FgAbGroup::trivial(), 5);
    BottomRowReport rep = bottom_row_cohomology(spec);
    CHECK(*rep.degrees[0].cohomology == FgAbGroup::free(1));
    for (std::size_t p = 1; p <= 4; ++p) CHECK(rep.degrees[p].cohomology->is_trivial());
}

TEST_CASE("torsion-full character lattice is rejected") {
    CHECK_THROWS_AS(UnitsComplexSpec(FgAbGroup::free(1), FgAbGroup{0, {2}}, 4),
                    std::invalid_argument);
}

TEST_CASE("gln bottom row equals the rank-one torus report") {
    UnitsComplexSpec torus(FgAbGroup::free(1), FgAbGroup::free(1), 5);
    BottomRowReport t = bottom_row_cohomology(torus);
    for (std::size_t n : {1u, 2u, 3u}) {
        BottomRowReport g = gln_bottom_row(n, 5);
        REQUIRE(g.degrees.size() == t.degrees.size());
        for (std::size_t p = 0; p < t.degrees.size(); ++p) {
            CHECK(g.degrees[p].term_generators == t.degrees[p].term_generators);
            CHECK(g.degrees[p].differential == t.degrees[p].differential);
            CHECK(g.degrees[p].cohomology == t.degrees[p].cohomology);
        }
        CHECK(g.gln_n == n);
        REQUIRE(g.generator_labels.size() == 6);
        CHECK(g.generator_labels[2] ==
              std::vector<std::string>{"u", "det_factor_1", "det_factor_2"});
        // E2 vanishes at p = 2, 3
        CHECK(g.degrees[2].cohomology->is_trivial());
        CHECK(g.degrees[3].cohomology->is_trivial());
    }
}
