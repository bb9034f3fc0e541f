#include "brq/verdict.hpp"

#include <stdexcept>

#include "brq/koszul.hpp"

namespace brq {

std::string to_string(Tristate t) {
    switch (t) {
        case Tristate::Yes: return "yes";
        case Tristate::No: return "no";
        case Tristate::Unknown: return "unknown";
    }
    return "unknown";
}

Tristate tristate_from_string(const std::string& s) {
    if (s == "yes") return Tristate::Yes;
    if (s == "no") return Tristate::No;
    if (s == "unknown") return Tristate::Unknown;
    throw std::invalid_argument("tristate: expected yes/no/unknown, got '" + s + "'");
}

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::BrEqualsBrPrime: return "BrEqualsBrPrime";
        case Conclusion::BrNotEqual: return "BrNotEqual";
        case Conclusion::SBMIHolds: return "SBMIHolds";
        case Conclusion::SBMIFails: return "SBMIFails";
        case Conclusion::Unknown: return "Unknown";
    }
    return "Unknown";
}

void SchemeInvariants::validate() const {
    if (pic_torsion != pic.torsion_part())
        throw std::invalid_argument(
            "SchemeInvariants: pic_torsion must equal the torsion part of pic");
    if (pic_torsion.rank != 0 || units_torsion.rank != 0)
        throw std::invalid_argument("SchemeInvariants: torsion groups must have rank 0");
}

void StackDescriptor::validate() const {
    switch (kind) {
        case Kind::BDiscrete:
            if (finite_part.rank != 0)
                throw std::invalid_argument("BDiscrete: finite part must have rank 0");
            break;
        case Kind::BDiagonalizable:
            break;
        case Kind::BGLn:
            if (n < 1) throw std::invalid_argument("BGLn: n must be >= 1");
            break;
        case Kind::BAbelianVariety:
            if (!curve) throw std::invalid_argument("BAbelianVariety: missing curve handle");
            break;
        case Kind::QuotientGoodModuli:
            break;
    }
}

StackDescriptor StackDescriptor::discrete(FgAbGroup finite, std::size_t rank) {
    StackDescriptor d;
    d.kind = Kind::BDiscrete;
    d.finite_part = std::move(finite);
    d.free_rank = rank;
    d.validate();
    return d;
}

StackDescriptor StackDescriptor::diagonalizable(FgAbGroup characters) {
    StackDescriptor d;
    d.kind = Kind::BDiagonalizable;
    d.characters = std::move(characters);
    return d;
}

StackDescriptor StackDescriptor::gl(std::size_t n) {
    StackDescriptor d;
    d.kind = Kind::BGLn;
    d.n = n;
    d.validate();
    return d;
}

StackDescriptor StackDescriptor::abelian_variety(EllipticCurveSpec curve) {
    StackDescriptor d;
    d.kind = Kind::BAbelianVariety;
    d.curve = std::move(curve);
    return d;
}

StackDescriptor StackDescriptor::quotient_good_moduli() {
    StackDescriptor d;
    d.kind = Kind::QuotientGoodModuli;
    return d;
}

const std::vector<RuleInfo>& rule_registry() {
    static const std::vector<RuleInfo> registry{
        {"R1", "lemma-20160630-wr-01",
         "a finite flat finitely presented surjective cover transfers surjectivity of the "
         "Brauer map downward; classifying stacks of finite groups satisfy SBMI"},
        {"R2", "lemma-20160630-wr-02",
         "a morphism with a section transfers surjectivity of the Brauer map from the total "
         "space to the base"},
        {"R3", "lemma-20160630-wr-03",
         "in an extension 1 -> G1 -> G2 -> G3 -> 1 with G3 finite flat, classes on BG2 whose "
         "restriction to BG1 is represented by an Azumaya algebra are themselves represented"},
        {"R4", "theorem-20171113-57",
         "the classifying stack of a finitely generated discrete abelian group satisfies SBMI "
         "iff the free rank is at most 1"},
        {"R5", "theorem-20170920-03",
         "the classifying stack of any diagonalizable group scheme satisfies SBMI"},
        {"R6", "corollary-20170920-18",
         "over a Noetherian normal (integral) base, Br = Br' for the base iff it holds for the "
         "classifying stack of GL_n"},
        {"R7", "example-20171113-14",
         "for the classifying stack of Z^r (r >= 2) over a base with trivial Picard group and "
         "all vector bundles trivial, Br' = Br'(base) (+) H^2(Z^r, units) while Br = Br(base)"},
        {"R8", "corollary-20190912-01",
         "a quotient stack by a linearly reductive group whose good moduli space is henselian "
         "local has Br = Br'"},
        {"R9", "theorem-20170215-16",
         "for an abelian variety A over a field, Br = Br' for its classifying stack iff the "
         "k-points of the dual are torsion-free"},
    };
    return registry;
}

namespace {

const RuleInfo& rule(const std::string& name) {
    for (const auto& r : rule_registry())
        if (r.name == name) return r;
    throw std::logic_error("unregistered rule " + name);
}

Conclusion sbmi_conclusion(Tristate base_br) {
    switch (base_br) {
        case Tristate::Yes: return Conclusion::BrEqualsBrPrime;
        case Tristate::No: return Conclusion::BrNotEqual;
        case Tristate::Unknown: return Conclusion::SBMIHolds;
    }
    return Conclusion::SBMIHolds;
}

struct RuleFire {
    bool decisive = false;
    std::optional<Conclusion> conclusion;
    std::optional<FgAbGroup> model;
    std::string detail;
};

// H^2(Z^r, units) with trivial action, through the group-cohomology engine.
FgAbGroup h2_of_free_rank(const FgAbGroup& units, std::size_t r) {
    return group_cohomology(ZrModule::trivial(units, r))[2];
}

std::optional<RuleFire> apply_rule(const std::string& name, const StackDescriptor& d,
                                   const SchemeInvariants& s, std::string& first_unmet) {
    auto note_unmet = [&](const std::string& why) {
        if (first_unmet.empty()) first_unmet = why;
    };
    using Kind = StackDescriptor::Kind;

    if (name == "R1") {
        if (d.kind != Kind::BDiscrete || d.free_rank != 0) return std::nullopt;
        RuleFire f;
        f.decisive = true;
        f.conclusion = sbmi_conclusion(s.br_equals_br_prime);
        f.detail = "finite discrete group " + d.finite_part.to_string() +
                   ": SBMI holds by the finite flat cover argument; base Br=Br' flag is " +
                   to_string(s.br_equals_br_prime);
        return f;
    }
    if (name == "R2") {
        // every classifying stack here has the trivial-torsor section
        RuleFire f;
        f.decisive = false;
        f.detail = "the projection admits a section, so surjectivity of the Brauer map "
                   "descends to the base";
        return f;
    }
    if (name == "R3") {
        bool fires = (d.kind == Kind::BDiscrete && d.free_rank <= 1 &&
                      !d.finite_part.is_trivial()) ||
                     (d.kind == Kind::BDiagonalizable && !d.characters.is_torsion_free());
        if (!fires) return std::nullopt;
        RuleFire f;
        f.decisive = false;
        f.detail = "classes are pushed through the finite-flat quotient of the extension "
                   "splitting off the torsion part";
        return f;
    }
    if (name == "R4") {
        if (d.kind != Kind::BDiscrete) return std::nullopt;
        RuleFire f;
        f.decisive = true;
        if (d.free_rank <= 1) {
            f.conclusion = sbmi_conclusion(s.br_equals_br_prime);
            f.detail = "free rank " + std::to_string(d.free_rank) +
                       " <= 1: SBMI holds via the section and extension arguments (R2, R3) and "
                       "the rank-one splitting (lemma-20171113-15); base Br=Br' flag is " +
                       to_string(s.br_equals_br_prime);
            if (d.finite_part.is_trivial())
                f.model = d.free_rank == 0 ? s.br_prime : direct_sum(s.pic_torsion, s.br_prime);
        } else {
            f.conclusion = Conclusion::SBMIFails;
            f.detail = "free rank " + std::to_string(d.free_rank) +
                       " >= 2: SBMI fails (there are bases with torsion units where Br' "
                       "strictly contains Br; see R7 for the model)";
        }
        return f;
    }
    if (name == "R5") {
        if (d.kind != Kind::BDiagonalizable) return std::nullopt;
        RuleFire f;
        f.decisive = true;
        f.conclusion = sbmi_conclusion(s.br_equals_br_prime);
        f.detail = "diagonalizable group with characters " + d.characters.to_string() +
                   ": SBMI holds (torus acyclicity feeds R2; a finite Cartier-dual quotient "
                   "feeds R3 when the characters have torsion); base Br=Br' flag is " +
                   to_string(s.br_equals_br_prime);
        if (d.characters.is_torsion_free() && s.noetherian_normal) f.model = s.br_prime;
        return f;
    }
    if (name == "R6") {
        if (d.kind != Kind::BGLn) return std::nullopt;
        if (!s.noetherian_normal) {
            note_unmet("missing noetherian_normal flag");
            return std::nullopt;
        }
        if (!s.integral) {
            note_unmet("missing integral flag");
            return std::nullopt;
        }
        RuleFire f;
        f.decisive = true;
        f.conclusion = sbmi_conclusion(s.br_equals_br_prime);
        f.detail = "GL_" + std::to_string(d.n) +
                   " over a Noetherian normal integral base: Br=Br' transfers both ways; base "
                   "flag is " +
                   to_string(s.br_equals_br_prime);
        f.model = s.br_prime;
        return f;
    }
    if (name == "R7") {
        if (d.kind != Kind::BDiscrete || d.free_rank < 2) return std::nullopt;
        if (!d.finite_part.is_trivial()) {
            note_unmet("finite part present: the free-rank model does not apply");
            return std::nullopt;
        }
        if (!s.pic.is_trivial()) {
            note_unmet("nonzero Picard group: the units-only model does not apply");
            return std::nullopt;
        }
        RuleFire f;
        f.decisive = false;
        FgAbGroup h2 = h2_of_free_rank(s.units_torsion, d.free_rank);
        f.model = direct_sum(s.br_prime, h2);
        f.detail = "Br' model = Br'(base) (+) H^2(Z^" + std::to_string(d.free_rank) +
                   ", units_torsion) = " + f.model->to_string();
        return f;
    }
    if (name == "R8") {
        if (d.kind != Kind::QuotientGoodModuli) return std::nullopt;
        if (!s.henselian_local_gms) {
            note_unmet("missing henselian_local_gms flag");
            return std::nullopt;
        }
        RuleFire f;
        f.decisive = true;
        f.conclusion = Conclusion::BrEqualsBrPrime;
        f.detail = "good moduli space is henselian local: every Brauer class is represented";
        return f;
    }
    if (name == "R9") {
        if (d.kind != Kind::BAbelianVariety) return std::nullopt;
        BaVerdict bv = verdict_ba(*d.curve);
        RuleFire f;
        f.decisive = true;
        f.conclusion =
            bv.br_equals_br_prime ? Conclusion::BrEqualsBrPrime : Conclusion::BrNotEqual;
        f.model = direct_sum(s.br_prime, bv.torsion);
        std::string steps;
        for (const auto& line : bv.trace) steps += (steps.empty() ? "" : "; ") + line;
        f.detail = "point-group torsion " + bv.torsion.to_string() + " [" + steps + "]";
        return f;
    }
    return std::nullopt;
}

}  // namespace

Verdict evaluate(const StackDescriptor& d, const SchemeInvariants& s) {
    d.validate();
    s.validate();
    Verdict v;
    std::string first_unmet;
    bool decided = false;
    for (const auto& info : rule_registry()) {
        auto fire = apply_rule(info.name, d, s, first_unmet);
        if (!fire) continue;
        TraceStep step{info.name, info.anchor, fire->detail, false};
        if (fire->decisive && !decided) {
            decided = true;
            step.decisive = true;
            v.conclusion = *fire->conclusion;
        }
        v.trace.push_back(std::move(step));
        if (fire->model && !v.br_prime_model) v.br_prime_model = fire->model;
    }
    if (!decided) {
        v.conclusion = Conclusion::Unknown;
        v.unknown_reason = first_unmet.empty() ? "no rule applies to this descriptor" : first_unmet;
    }
    return v;
}

BrPrimeModel br_prime_of_classifying(const StackDescriptor& d, const SchemeInvariants& s) {
    d.validate();
    s.validate();
    using Kind = StackDescriptor::Kind;
    BrPrimeModel out;
    switch (d.kind) {
        case Kind::BDiscrete: {
            if (!d.finite_part.is_trivial())
                throw std::domain_error("br_prime_of_classifying: only free discrete groups");
            if (d.free_rank == 0) {
                out.model = s.br_prime;
                out.trace.push_back({"R1", "lemma-20160630-wr-01",
                                     "trivial group: the stack is the base itself", true});
                return out;
            }
            if (d.free_rank == 1) {
                out.model = direct_sum(s.pic_torsion, s.br_prime);
                out.trace.push_back(
                    {"R4", "lemma-20171113-15",
                     "split extension 0 -> Pic(S)_tors -> Br'(BZ_S) -> Br'(S) -> 0", true});
                return out;
            }
            if (d.free_rank == 2) {
                if (!s.pic.is_trivial())
                    throw std::domain_error(
                        "br_prime_of_classifying: rank-2 model needs trivial Pic");
                FgAbGroup h2 = group_cohomology(ZrModule::trivial(s.units_torsion, 2))[2];
                out.model = direct_sum(s.br_prime, h2);
                out.trace.push_back({"R7", "example-20171113-14",
                                     "Br' = Br'(base) (+) (units)_tors via H^2(Z^2, units)",
                                     true});
                return out;
            }
            throw std::domain_error("br_prime_of_classifying: discrete rank capped at 2");
        }
        case Kind::BDiagonalizable: {
            if (!d.characters.is_torsion_free())
                throw std::domain_error(
                    "br_prime_of_classifying: only torsion-free character groups (split tori)");
            if (!s.noetherian_normal)
                throw std::domain_error(
                    "br_prime_of_classifying: torus model needs a Noetherian normal base");
            out.model = s.br_prime;
            out.trace.push_back({"R5", "lemma-20170920-01",
                                 "pullback is an isomorphism over a normal base (bottom row "
                                 "acyclic in degrees >= 2, Picard row vanishes)",
                                 true});
            return out;
        }
        case Kind::BGLn: {
            if (!s.noetherian_normal || !s.integral)
                throw std::domain_error(
                    "br_prime_of_classifying: GL_n model needs a Noetherian normal integral "
                    "base");
            out.model = s.br_prime;
            out.trace.push_back({"R6", "proposition-20170920-06",
                                 "pullback along the trivial torsor is an isomorphism", true});
            return out;
        }
        case Kind::BAbelianVariety: {
            BaVerdict bv = verdict_ba(*d.curve);
            out.model = direct_sum(s.br_prime, bv.torsion);
            out.trace.push_back({"R9", "lemma-20170215-14",
                                 "H^2 = Br(k) (+) dual points; torsion part adds " +
                                     bv.torsion.to_string(),
                                 true});
            return out;
        }
        case Kind::QuotientGoodModuli:
            throw std::domain_error(
                "br_prime_of_classifying: no general model for quotient stacks");
    }
    throw std::domain_error("br_prime_of_classifying: unsupported kind");
}

bool replay_trace(const Verdict& v, const StackDescriptor& d, const SchemeInvariants& s) {
    std::string unused;
    Conclusion replayed = Conclusion::Unknown;
    std::optional<FgAbGroup> model;
    bool decided = false;
    for (const auto& step : v.trace) {
        rule(step.rule);  // must be registered
        auto fire = apply_rule(step.rule, d, s, unused);
        if (!fire) return false;  // a recorded step no longer fires
        if (fire->decisive && !decided) {
            decided = true;
            replayed = *fire->conclusion;
        }
        if (fire->model && !model) model = fire->model;
    }
    if (!decided) replayed = Conclusion::Unknown;
    if (replayed != v.conclusion) return false;
    if (v.br_prime_model.has_value() != model.has_value()) return false;
    if (model && *model != *v.br_prime_model) return false;
    return true;
}

}  // namespace brq
