#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "brq/koszul.hpp"

using namespace brq;

TEST_CASE("subset enumeration is lexicographic") {
    auto s = subsets_of_size(3, 2);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == std::vector<std::size_t>{0, 1});
    CHECK(s[1] == std::vector<std::size_t>{0, 2});
    CHECK(s[2] == std::vector<std::size_t>{1, 2});
    CHECK(subsets_of_size(4, 0).size() == 1);
}

TEST_CASE("rank 1, trivial Z: complex Z --0--> Z") {
    ZrModule m = ZrModule::trivial(FgAbGroup::free(1), 1);
    CochainComplex cx = koszul_cochain_complex(m);
    REQUIRE(cx.terms.size() == 2);
    CHECK(cx.differentials[0].matrix.is_zero());
    auto h = group_cohomology(m);
    CHECK(h[0] == FgAbGroup::free(1));
    CHECK(h[1] == FgAbGroup::free(1));
}

TEST_CASE("rank 2, trivial Z: term sizes 1,2,1 and zero differentials") {
    ZrModule m = ZrModule::trivial(FgAbGroup::free(1), 2);
    CochainComplex cx = koszul_cochain_complex(m);
    REQUIRE(cx.terms.size() == 3);
    CHECK(cx.terms[0].generators == 1);
    CHECK(cx.terms[1].generators == 2);
    CHECK(cx.terms[2].generators == 1);
    CHECK(cx.differentials[0].matrix.is_zero());
    CHECK(cx.differentials[1].matrix.is_zero());
}

TEST_CASE("rank 2: twisted action t1 = -1 gives degree-1->2 matrix (0, 2)") {
    GroupPresentation z = GroupPresentation::free(1);
    IntMatrix minus_one{{-1}};
    IntMatrix plus_one{{1}};
    ZrModule m(z, {minus_one, plus_one});
    CochainComplex cx = koszul_cochain_complex(m);
    // f2*: (m1, m2) -> (t2-1)m1 - (t1-1)m2 = 0*m1 + 2*m2
    const IntMatrix& d1 = cx.differentials[1].matrix;
    REQUIRE(d1.rows() == 1);
    REQUIRE(d1.cols() == 2);
    CHECK(d1(0, 0) == 0);
    CHECK(d1(0, 1) == 2);

    auto h = group_cohomology(m);
    CHECK(h[2] == FgAbGroup{0, {2}});  // coker of 2Z in Z
}

TEST_CASE("H^2(Z^2, M) = M for trivial modules") {
    for (const FgAbGroup& m : {FgAbGroup::free(1), FgAbGroup{0, {2}}, FgAbGroup{0, {12}},
                               FgAbGroup::free(2)}) {
        auto h = group_cohomology(ZrModule::trivial(m, 2));
        CHECK(h[2] == m);
        CHECK(h[0] == m);
    }
}

TEST_CASE("trivial action: exterior pattern H^p = M^(r choose p), r <= 3") {
    std::vector<FgAbGroup> modules{FgAbGroup::free(1), FgAbGroup{0, {12}}, FgAbGroup{1, {2}}};
    for (const auto& m : modules) {
        for (std::size_t r = 0; r <= 3; ++r) {
            auto h = group_cohomology(ZrModule::trivial(m, r));
            REQUIRE(h.size() == r + 1);
            std::size_t binom = 1;
            for (std::size_t p = 0; p <= r; ++p) {
                CHECK(h[p] == direct_sum_power(m, binom));
                binom = binom * (r - p) / (p + 1);
            }
        }
    }
}

TEST_CASE("order-independence: permuting the acting variables preserves cohomology") {
    std::mt19937_64 rng(2024);
    // M = Z^2 with commuting automorphisms; include a twist
    GroupPresentation z2 = GroupPresentation::free(2);
    IntMatrix t1{{-1, 0}, {0, 1}};
    IntMatrix t2{{1, 0}, {0, -1}};
    IntMatrix t3 = IntMatrix::identity(2);
    std::vector<IntMatrix> acts{t1, t2, t3};
    auto base_h = group_cohomology(ZrModule(z2, acts));
    std::vector<std::size_t> perm{0, 1, 2};
    for (int iter = 0; iter < 5; ++iter) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<IntMatrix> shuffled{acts[perm[0]], acts[perm[1]], acts[perm[2]]};
        auto h = group_cohomology(ZrModule(z2, shuffled));
        CHECK(h == base_h);
    }
}

TEST_CASE("torsion coefficients with twist") {
    // M = Z/12 with t1 acting as -1: H^* of the 1-variable complex
    GroupPresentation m(1, IntMatrix{{12}});
    IntMatrix neg{{-1}};
    ZrModule mod(m, {neg});
    auto h = group_cohomology(mod);
    // d^0 = (t1 - 1) = -2: on Z/12 kernel = 6Z/12 = Z/2, coker = Z/2
    CHECK(h[0] == FgAbGroup{0, {2}});
    CHECK(h[1] == FgAbGroup{0, {2}});
}

TEST_CASE("invalid modules are rejected") {
    GroupPresentation z2 = GroupPresentation::free(2);
    // non-commuting actions
    IntMatrix a{{1, 1}, {0, 1}};
    IntMatrix b{{1, 0}, {1, 1}};
    CHECK_THROWS_AS(ZrModule(z2, {a, b}), std::invalid_argument);
    // non-invertible action
    IntMatrix sq{{2, 0}, {0, 1}};
    CHECK_THROWS_AS(ZrModule(z2, {sq}), std::invalid_argument);
    // action not preserving relations: on Z/2 (+) Z/4, swap of generators
    GroupPresentation m(2, IntMatrix{{2, 0}, {0, 4}});
    IntMatrix swap{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(ZrModule(m, {swap}), std::invalid_argument);
}

TEST_CASE("sign action on Z in both variables matches the product formula") {
    // One variable acting by -1 on Z: H^0 = 0, H^1 = Z/2. The two-variable
    // sign action then has H^0 = 0, H^1 = Z/2 (a torsion product term),
    // H^2 = Z/2 (tensor of the two degree-one groups).
    GroupPresentation z = GroupPresentation::free(1);
    IntMatrix neg{{-1}};
    auto h1 = group_cohomology(ZrModule(z, {neg}));
    CHECK(h1[0] == FgAbGroup::trivial());
    CHECK(h1[1] == FgAbGroup{0, {2}});

    auto h2 = group_cohomology(ZrModule(z, {neg, neg}));
    CHECK(h2[0] == FgAbGroup::trivial());
    CHECK(h2[1] == FgAbGroup{0, {2}});
    CHECK(h2[2] == FgAbGroup{0, {2}});
}

TEST_CASE("koszul degree-2 slot for Z^2 acting trivially on Z/12") {
    auto h = group_cohomology(ZrModule::trivial(FgAbGroup{0, {12}}, 2));
    CHECK(h[2] == FgAbGroup{0, {12}});
}
