#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brq/verdict.hpp"

using namespace brq;

namespace {

SchemeInvariants plain_base() {
    SchemeInvariants s;
    s.pic = FgAbGroup::trivial();
    s.pic_torsion = FgAbGroup::trivial();
    s.br_prime = FgAbGroup::trivial();
    s.units_torsion = FgAbGroup::trivial();
    return s;
}

bool has_rule(const Verdict& v, const std::string& name) {
    for (const auto& step : v.trace)
        if (step.rule == name) return true;
    return false;
}

}  // namespace

TEST_CASE("rank 2 discrete with torsion units: SBMIFails with the units model") {
    SchemeInvariants s = plain_base();
    s.units_torsion = FgAbGroup{0, {6}};
    s.br_prime = FgAbGroup{0, {3}};
    StackDescriptor d = StackDescriptor::discrete(FgAbGroup::trivial(), 2);
    Verdict v = evaluate(d, s);
    CHECK(v.conclusion == Conclusion::SBMIFails);
    REQUIRE(v.br_prime_model.has_value());
    CHECK(*v.br_prime_model == direct_sum(FgAbGroup{0, {3}}, FgAbGroup{0, {6}}));
    CHECK(has_rule(v, "R4"));
    CHECK(has_rule(v, "R7"));
    CHECK(replay_trace(v, d, s));
}

TEST_CASE("rank 3 discrete: the model picks up H^2(Z^3, units) = units^3") {
    SchemeInvariants s = plain_base();
    s.units_torsion = FgAbGroup{0, {6}};
    StackDescriptor d = StackDescriptor::discrete(FgAbGroup::trivial(), 3);
    Verdict v = evaluate(d, s);
    CHECK(v.conclusion == Conclusion::SBMIFails);
    REQUIRE(v.br_prime_model.has_value());
    CHECK(*v.br_prime_model == FgAbGroup{0, {6, 6, 6}});
}

TEST_CASE("rank 1 discrete with finite part and affirmative base: BrEqualsBrPrime") {
    SchemeInvariants s = plain_base();
    s.br_equals_br_prime = Tristate::Yes;
    StackDescriptor d = StackDescriptor::discrete(FgAbGroup{0, {5}}, 1);
    Verdict v = evaluate(d, s);
    CHECK(v.conclusion == Conclusion::BrEqualsBrPrime);
    CHECK(has_rule(v, "R4"));
    CHECK(has_rule(v, "R2"));
    CHECK(has_rule(v, "R3"));
    CHECK(replay_trace(v, d, s));
}

TEST_CASE("rank 0 and rank 1 discrete: SBMIHolds when the base flag is unknown") {
    SchemeInvariants s = plain_base();
    for (std::size_t rank : {0u, 1u}) {
        for (const FgAbGroup& finite : {FgAbGroup::trivial(), FgAbGroup{0, {5}}}) {
            StackDescriptor d = StackDescriptor::discrete(finite, rank);
            Verdict v = evaluate(d, s);
            CHECK(v.conclusion == Conclusion::SBMIHolds);
            CHECK(replay_trace(v, d, s));
        }
    }
    // rank >= 2 fails regardless of the finite part
    for (const FgAbGroup& finite : {FgAbGroup::trivial(), FgAbGroup{0, {4}}}) {
        Verdict v = evaluate(StackDescriptor::discrete(finite, 2), s);
        CHECK(v.conclusion == Conclusion::SBMIFails);
    }
}

TEST_CASE("base with negative answer propagates along SBMI") {
    SchemeInvariants s = plain_base();
    s.br_equals_br_prime = Tristate::No;
    Verdict v = evaluate(StackDescriptor::discrete(FgAbGroup::trivial(), 1), s);
    CHECK(v.conclusion == Conclusion::BrNotEqual);
}

TEST_CASE("diagonalizable groups always satisfy SBMI (R5)") {
    SchemeInvariants s = plain_base();
    for (const FgAbGroup& chars :
         {FgAbGroup::free(4), FgAbGroup{0, {3}}, FgAbGroup{2, {2, 4}}}) {
        StackDescriptor d = StackDescriptor::diagonalizable(chars);
        Verdict v = evaluate(d, s);
        CHECK(v.conclusion == Conclusion::SBMIHolds);
        CHECK(has_rule(v, "R5"));
        CHECK(replay_trace(v, d, s));
    }
}

TEST_CASE("BGLn needs the normality flags; never guesses") {
    SchemeInvariants s = plain_base();
    StackDescriptor d = StackDescriptor::gl(3);
    {
        Verdict v = evaluate(d, s);
        CHECK(v.conclusion == Conclusion::Unknown);
        CHECK(v.unknown_reason.find("noetherian_normal") != std::string::npos);
        CHECK(replay_trace(v, d, s));
    }
    {
        SchemeInvariants s2 = s;
        s2.noetherian_normal = true;
        Verdict v = evaluate(d, s2);
        CHECK(v.conclusion == Conclusion::Unknown);
        CHECK(v.unknown_reason.find("integral") != std::string::npos);
    }
    {
        SchemeInvariants s3 = s;
        s3.noetherian_normal = true;
        s3.integral = true;
        Verdict v = evaluate(d, s3);
        CHECK(v.conclusion == Conclusion::SBMIHolds);
        s3.br_equals_br_prime = Tristate::Yes;
        CHECK(evaluate(d, s3).conclusion == Conclusion::BrEqualsBrPrime);
    }
}

TEST_CASE("good moduli quotient with henselian local space: BrEqualsBrPrime") {
    SchemeInvariants s = plain_base();
    StackDescriptor d = StackDescriptor::quotient_good_moduli();
    CHECK(evaluate(d, s).conclusion == Conclusion::Unknown);
    s.henselian_local_gms = true;
    Verdict v = evaluate(d, s);
    CHECK(v.conclusion == Conclusion::BrEqualsBrPrime);
    CHECK(has_rule(v, "R8"));
    CHECK(replay_trace(v, d, s));
}

TEST_CASE("R9 agrees with the curve-level verdict") {
    SchemeInvariants s = plain_base();
    std::vector<EllipticCurveSpec> curves{
        {false, Int(7), Int(1), Int(1)},   // finite field: always nontrivial torsion
        {true, Int(0), Int(-1), Int(0)},   // full rational 2-torsion
        {true, Int(0), Int(0), Int(2)},    // torsion-free
    };
    for (const auto& c : curves) {
        StackDescriptor d = StackDescriptor::abelian_variety(c);
        Verdict v = evaluate(d, s);
        BaVerdict bv = verdict_ba(c);
        CHECK((v.conclusion == Conclusion::BrEqualsBrPrime) == bv.br_equals_br_prime);
        CHECK(replay_trace(v, d, s));
    }
}

TEST_CASE("monotonicity: enriching flags never flips a decided Br verdict") {
    std::vector<StackDescriptor> descriptors{
        StackDescriptor::discrete(FgAbGroup::trivial(), 0),
        StackDescriptor::discrete(FgAbGroup{0, {5}}, 1),
        StackDescriptor::discrete(FgAbGroup::trivial(), 2),
        StackDescriptor::diagonalizable(FgAbGroup::free(2)),
        StackDescriptor::gl(2),
        StackDescriptor::quotient_good_moduli(),
    };
    auto decided_br = [](Conclusion c) {
        return c == Conclusion::BrEqualsBrPrime || c == Conclusion::BrNotEqual;
    };
    for (const auto& d : descriptors) {
        for (int base_flags = 0; base_flags < 16; ++base_flags) {
            SchemeInvariants lo = plain_base();
            lo.noetherian_normal = base_flags & 1;
            lo.integral = base_flags & 2;
            lo.regular_codim1 = base_flags & 4;
            lo.henselian_local_gms = base_flags & 8;
            for (int enrich = 0; enrich < 16; ++enrich) {
                SchemeInvariants hi = lo;
                hi.noetherian_normal |= enrich & 1;
                hi.integral |= enrich & 2;
                hi.regular_codim1 |= enrich & 4;
                hi.henselian_local_gms |= enrich & 8;
                Conclusion a = evaluate(d, lo).conclusion;
                Conclusion b = evaluate(d, hi).conclusion;
                if (decided_br(a) && decided_br(b)) CHECK(a == b);
            }
            // tristate enrichment unknown -> yes
            SchemeInvariants yes = lo;
            yes.br_equals_br_prime = Tristate::Yes;
            Conclusion a = evaluate(d, lo).conclusion;
            Conclusion b = evaluate(d, yes).conclusion;
            if (decided_br(a) && decided_br(b)) CHECK(a == b);
        }
    }
}

TEST_CASE("br_prime_of_classifying: the documented models") {
    // BZ_S with pic = Z/2 (+) Z, br' = Z/3  ->  Z/2 (+) Z/3 = Z/6
    {
        SchemeInvariants s = plain_base();
        s.pic = FgAbGroup{1, {2}};
        s.pic_torsion = FgAbGroup{0, {2}};
        s.br_prime = FgAbGroup{0, {3}};
        auto m = br_prime_of_classifying(StackDescriptor::discrete(FgAbGroup::trivial(), 1), s);
        CHECK(m.model == FgAbGroup{0, {6}});
    }
    // split torus of rank 4 over a normal base: unchanged
    {
        SchemeInvariants s = plain_base();
        s.noetherian_normal = true;
        s.br_prime = FgAbGroup{0, {7}};
        auto m = br_prime_of_classifying(StackDescriptor::diagonalizable(FgAbGroup::free(4)), s);
        CHECK(m.model == FgAbGroup{0, {7}});
    }
    // BZ^2 with pic = 0, units torsion 0: unchanged
    {
        SchemeInvariants s = plain_base();
        s.br_prime = FgAbGroup{0, {5}};
        auto m = br_prime_of_classifying(StackDescriptor::discrete(FgAbGroup::trivial(), 2), s);
        CHECK(m.model == FgAbGroup{0, {5}});
    }
    // GL_n over a normal integral base: unchanged
    {
        SchemeInvariants s = plain_base();
        s.noetherian_normal = true;
        s.integral = true;
        s.br_prime = FgAbGroup{0, {2}};
        auto m = br_prime_of_classifying(StackDescriptor::gl(3), s);
        CHECK(m.model == FgAbGroup{0, {2}});
    }
    // abelian variety over Q with full 2-torsion
    {
        SchemeInvariants s = plain_base();
        s.br_prime = FgAbGroup{0, {3}};
        auto m = br_prime_of_classifying(
            StackDescriptor::abelian_variety({true, Int(0), Int(-1), Int(0)}), s);
        CHECK(m.model == direct_sum(FgAbGroup{0, {3}}, FgAbGroup{0, {2, 2}}));
    }
    // unsupported kinds and unmet hypotheses throw
    {
        SchemeInvariants s = plain_base();
        CHECK_THROWS_AS(br_prime_of_classifying(StackDescriptor::quotient_good_moduli(), s),
                        std::domain_error);
        CHECK_THROWS_AS(br_prime_of_classifying(StackDescriptor::gl(2), s), std::domain_error);
        CHECK_THROWS_AS(
            br_prime_of_classifying(StackDescriptor::discrete(FgAbGroup::trivial(), 3), s),
            std::domain_error);
        SchemeInvariants bad = plain_base();
        bad.pic = FgAbGroup{0, {2}};
        bad.pic_torsion = FgAbGroup{0, {2}};
        CHECK_THROWS_AS(
            br_prime_of_classifying(StackDescriptor::discrete(FgAbGroup::trivial(), 2), bad),
            std::domain_error);
    }
}

TEST_CASE("evaluate and the dedicated model computation agree where both apply") {
    SchemeInvariants s = plain_base();
    s.noetherian_normal = true;
    s.integral = true;
    s.pic = FgAbGroup{1, {2}};
    s.pic_torsion = FgAbGroup{0, {2}};
    s.br_prime = FgAbGroup{0, {3}};
    s.units_torsion = FgAbGroup{0, {4}};
    std::vector<StackDescriptor> ds{
        StackDescriptor::discrete(FgAbGroup::trivial(), 0),
        StackDescriptor::discrete(FgAbGroup::trivial(), 1),
        StackDescriptor::diagonalizable(FgAbGroup::free(3)),
        StackDescriptor::gl(2),
        StackDescriptor::abelian_variety({true, Int(0), Int(0), Int(1)}),
    };
    for (const auto& d : ds) {
        Verdict v = evaluate(d, s);
        BrPrimeModel m = br_prime_of_classifying(d, s);
        REQUIRE(v.br_prime_model.has_value());
        CHECK(*v.br_prime_model == m.model);
        CHECK(replay_trace(v, d, s));
    }
    // the rank-2 case needs trivial Pic for both paths
    SchemeInvariants s2 = plain_base();
    s2.units_torsion = FgAbGroup{0, {4}};
    StackDescriptor d2 = StackDescriptor::discrete(FgAbGroup::trivial(), 2);
    Verdict v2 = evaluate(d2, s2);
    REQUIRE(v2.br_prime_model.has_value());
    CHECK(*v2.br_prime_model == br_prime_of_classifying(d2, s2).model);
}

TEST_CASE("invalid inputs are rejected") {
    SchemeInvariants s = plain_base();
    s.pic = FgAbGroup{0, {2}};  // pic_torsion left trivial: inconsistent
    CHECK_THROWS_AS(evaluate(StackDescriptor::gl(1), s), std::invalid_argument);
    CHECK_THROWS_AS(StackDescriptor::discrete(FgAbGroup{1, {2}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(StackDescriptor::gl(0), std::invalid_argument);
}

TEST_CASE("every trace step names a registered rule") {
    SchemeInvariants s = plain_base();
    s.units_torsion = FgAbGroup{0, {2}};
    for (const auto& d :
         {StackDescriptor::discrete(FgAbGroup::trivial(), 2), StackDescriptor::gl(1)}) {
        Verdict v = evaluate(d, s);
        for (const auto& step : v.trace) {
            bool registered = false;
            for (const auto& r : rule_registry()) registered |= r.name == step.rule;
            CHECK(registered);
            CHECK_FALSE(step.anchor.empty());
        }
    }
}
