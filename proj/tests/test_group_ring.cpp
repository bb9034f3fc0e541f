#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brq/group_ring.hpp"

using namespace brq;

namespace {

GroupRingElement random_element(std::mt19937_64& rng, const BaseRing& base, std::size_t rank,
                                int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> expo(-3, 3);
    std::uniform_int_distribution<long> coeff(-9, 9);
    GroupRingElement e = GroupRingElement::zero(base, rank);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Exponent ex(rank);
        for (auto& v : ex) v = expo(rng);
        e.add_term(ex, base.from_int(coeff(rng)));
    }
    return e;
}

}  // namespace

TEST_CASE("base rings: construction, arithmetic, units") {
    BaseRing z = BaseRing::integers();
    CHECK(z.from_int(5).to_string() == "5");
    CHECK(z.from_int(1).is_unit());
    CHECK(z.from_int(-1).is_unit());
    CHECK_FALSE(z.from_int(2).is_unit());

    BaseRing z6 = BaseRing::integers_mod(6);
    CHECK(z6.from_int(8) == z6.from_int(2));
    CHECK(z6.from_int(5).is_unit());
    CHECK_FALSE(z6.from_int(3).is_unit());
    CHECK(z6.from_int(5).inverse() == z6.from_int(5));

    BaseRing f7 = BaseRing::prime_field(7);
    CHECK(f7.from_int(3).inverse() == f7.from_int(5));
    CHECK_THROWS_AS(BaseRing::prime_field(6), std::invalid_argument);

    // Z[a]/(a^2): nilpotents
    BaseRing za = BaseRing::parse("Z[a]/(a^2)");
    RingElem a = za.quotient_variable();
    CHECK((a * a).is_zero());
    RingElem u = za.one() + a;  // 1 + a
    CHECK(u.is_unit());
    CHECK(u.inverse() == za.one() - a);
    CHECK_FALSE(a.is_unit());
    CHECK_FALSE((za.from_int(2) + a).is_unit());

    // F5[b]/(b^2+b+1) is a field iff the modulus is irreducible over F5;
    // x^2+x+1 has no root mod 5, so it is irreducible.
    BaseRing f25 = BaseRing::parse("F5[b]/(b^2+b+1)");
    CHECK(f25.is_integral_domain());
    RingElem b = f25.quotient_variable();
    CHECK(b.is_unit());
    CHECK((b * b.inverse()).is_one());

    // x^2-1 = (x-1)(x+1) is reducible mod 5
    CHECK_FALSE(BaseRing::parse("F5[c]/(c^2-1)").is_integral_domain());
    CHECK_FALSE(za.is_integral_domain());
    CHECK_FALSE(BaseRing::integers_mod(6).is_integral_domain());
}

TEST_CASE("base ring round trips") {
    for (const char* txt : {"Z", "Z/12", "F7", "Z[a]/(a^2)", "F5[b]/(b^2+b+1)"}) {
        BaseRing r = BaseRing::parse(txt);
        CHECK(BaseRing::parse(r.to_string()) == r);
    }
}

TEST_CASE("group ring: monomial inverses and simple products") {
    BaseRing z = BaseRing::integers();
    auto t1 = GroupRingElement::variable(z, 2, 1);
    auto t1inv = t1.pow(-1);
    CHECK((t1 * t1inv).is_one());

    // (t-1)(t+1) = t^2 - 1 over Z
    auto t = GroupRingElement::variable(z, 1, 1);
    auto one = GroupRingElement::from_int(z, 1, 1);
    auto prod = (t - one) * (t + one);
    CHECK(prod == t.pow(2) - one);
}

TEST_CASE("group ring: the nilpotent square identity") {
    // (d+a)(d-a) = d^2 over Z[a]/(a^2), with d a single stand-in variable
    BaseRing za = BaseRing::parse("Z[a]/(a^2)");
    auto d = GroupRingElement::variable(za, 1, 1);
    auto a = GroupRingElement::constant(za, 1, za.quotient_variable());
    CHECK((d + a) * (d - a) == d.pow(2));
}

TEST_CASE("recognize_unit: monomials with unit coefficients") {
    BaseRing f7 = BaseRing::prime_field(7);
    auto x = GroupRingElement::monomial(f7, 2, f7.from_int(5), {2, -1});
    auto r = recognize_unit(x);
    CHECK(r.is_unit);
    CHECK(r.coefficient == f7.from_int(5));
    CHECK(r.exponent == Exponent{2, -1});
    // soundness: x * (u^{-1} t^{-m}) == 1
    auto inv = GroupRingElement::monomial(f7, 2, r.coefficient.inverse(), {-2, 1});
    CHECK((x * inv).is_one());
}

TEST_CASE("recognize_unit: rejections") {
    BaseRing z = BaseRing::integers();
    auto t1 = GroupRingElement::variable(z, 2, 1);
    auto t2 = GroupRingElement::variable(z, 2, 2);
    auto r = recognize_unit(t1 + t2);
    CHECK_FALSE(r.is_unit);
    CHECK(r.reason.find("not a monomial") != std::string::npos);

    auto two_t1 = t1.scale(z.from_int(2));
    auto r2 = recognize_unit(two_t1);
    CHECK_FALSE(r2.is_unit);
    CHECK(r2.reason.find("not a unit") != std::string::npos);

    // unsupported base: Z/6 is not a domain
    BaseRing z6 = BaseRing::integers_mod(6);
    auto y = GroupRingElement::variable(z6, 1, 1);
    CHECK_THROWS_AS(recognize_unit(y), std::domain_error);
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(99);
    for (const char* ring_txt : {"Z", "Z/12", "F7", "Z[a]/(a^2)"}) {
        BaseRing base = BaseRing::parse(ring_txt);
        for (int iter = 0; iter < 40; ++iter) {
            auto x = random_element(rng, base, 2, 3);
            auto y = random_element(rng, base, 2, 3);
            auto z = random_element(rng, base, 2, 3);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x * y == y * x);
            CHECK(x + y == y + x);
        }
    }
}

TEST_CASE("product of two multi-term elements over a domain is never a unit monomial") {
    std::mt19937_64 rng(12345);
    BaseRing z = BaseRing::integers();
    int checked = 0;
    while (checked < 60) {
        auto x = random_element(rng, z, 2, 4);
        auto y = random_element(rng, z, 2, 4);
        if (x.term_count() < 2 || y.term_count() < 2) continue;
        ++checked;
        auto p = x * y;
        CHECK(p.term_count() >= 2);
        auto r = recognize_unit(p);
        CHECK_FALSE(r.is_unit);
    }
}

TEST_CASE("element text round trip is exact") {
    std::mt19937_64 rng(777);
    for (const char* ring_txt : {"Z", "F7", "Z[a]/(a^2)"}) {
        BaseRing base = BaseRing::parse(ring_txt);
        for (int iter = 0; iter < 50; ++iter) {
            auto x = random_element(rng, base, 2, 4);
            std::string s = x.to_string();
            auto back = parse_group_ring_element(base, 2, s);
            CHECK(back == x);
            CHECK(back.to_string() == s);
        }
    }
    // and the documented sample form parses
    BaseRing z = BaseRing::integers();
    auto e = parse_group_ring_element(z, 2, "3*t1^2*t2^-1 + 1");
    CHECK(e.term_count() == 2);
    CHECK(e.to_string() == "3*t1^2*t2^-1 + 1");
}

TEST_CASE("matrices: identity, scaling pattern, Laplace determinant") {
    BaseRing z = BaseRing::integers();
    std::size_t rank = 2;  // symbols xi, beta
    auto xi = GroupRingElement::variable(z, rank, 1);
    auto beta = GroupRingElement::variable(z, rank, 2);
    auto one = GroupRingElement::from_int(z, rank, 1);

    GroupRingMatrix m(z, rank, 2);
    m(0, 1) = beta;
    m(1, 0) = one;
    CHECK(GroupRingMatrix::identity(z, rank, 2) * m == m);

    // diag(1, xi) * [[0, b], [1, 0]] = [[0, b], [xi, 0]]
    GroupRingMatrix d(z, rank, 2);
    d(0, 0) = one;
    d(1, 1) = xi;
    GroupRingMatrix prod = d * m;
    CHECK(prod(0, 0).is_zero());
    CHECK(prod(0, 1) == beta);
    CHECK(prod(1, 0) == xi);
    CHECK(prod(1, 1).is_zero());

    // det [[0, b], [1, 0]] = -b
    CHECK(m.determinant() == -beta);
}

TEST_CASE("base ring mismatch is rejected") {
    BaseRing z = BaseRing::integers();
    BaseRing f7 = BaseRing::prime_field(7);
    auto x = GroupRingElement::from_int(z, 1, 1);
    auto y = GroupRingElement::from_int(f7, 1, 1);
    CHECK_THROWS_AS((void)(x + y), std::invalid_argument);
    CHECK_THROWS_AS((void)(x * y), std::invalid_argument);
}
