#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brq/abelian.hpp"
#include "brq/elliptic.hpp"

namespace brq {

enum class Tristate { Yes, No, Unknown };

std::string to_string(Tristate t);
Tristate tristate_from_string(const std::string& s);

/// What is known about the base scheme.
struct SchemeInvariants {
    FgAbGroup pic;
    FgAbGroup pic_torsion;    // must equal the torsion part of pic
    FgAbGroup br_prime;
    FgAbGroup units_torsion;
    bool noetherian_normal = false;
    bool integral = false;
    bool regular_codim1 = false;
    bool henselian_local_gms = false;
    Tristate br_equals_br_prime = Tristate::Unknown;

    void validate() const;  // throws std::invalid_argument on inconsistency
};

/// Which classifying stack the question is about.
struct StackDescriptor {
    enum class Kind { BDiscrete, BDiagonalizable, BGLn, BAbelianVariety, QuotientGoodModuli };
    Kind kind = Kind::BDiscrete;

    // BDiscrete: G = finite_part (+) Z^free_rank
    FgAbGroup finite_part;  // rank 0
    std::size_t free_rank = 0;

    // BDiagonalizable: character group
    FgAbGroup characters;

    // BGLn
    std::size_t n = 0;

    // BAbelianVariety
    std::optional<EllipticCurveSpec> curve;

    void validate() const;

    static StackDescriptor discrete(FgAbGroup finite, std::size_t rank);
    static StackDescriptor diagonalizable(FgAbGroup characters);
    static StackDescriptor gl(std::size_t n);
    static StackDescriptor abelian_variety(EllipticCurveSpec curve);
    static StackDescriptor quotient_good_moduli();
};

enum class Conclusion { BrEqualsBrPrime, BrNotEqual, SBMIHolds, SBMIFails, Unknown };

std::string to_string(Conclusion c);

struct TraceStep {
    std::string rule;    // registered rule name (R1..R9)
    std::string anchor;  // stable statement identifier
    std::string detail;
    bool decisive = false;
};

struct Verdict {
    Conclusion conclusion = Conclusion::Unknown;
    std::optional<FgAbGroup> br_prime_model;
    std::vector<TraceStep> trace;
    std::string unknown_reason;  // first unmet hypothesis when Unknown
};

struct RuleInfo {
    std::string name;
    std::string anchor;
    std::string statement;
};

/// The fixed rule registry, in application order.
const std::vector<RuleInfo>& rule_registry();

/// Deterministic evaluation: rules run in registry order, the first decisive
/// rule fixes the conclusion, later firing rules are recorded as
/// corroborating. Unknown (with the first unmet hypothesis) when nothing
/// decides.
Verdict evaluate(const StackDescriptor& d, const SchemeInvariants& s);

struct BrPrimeModel {
    FgAbGroup model;
    std::vector<TraceStep> trace;
};

/// Cohomological Brauer group model for the supported classifying stacks;
/// throws std::domain_error for unsupported kinds or unmet hypotheses.
BrPrimeModel br_prime_of_classifying(const StackDescriptor& d, const SchemeInvariants& s);

/// Re-apply the rules named in the verdict's trace, in order, and check they
/// reproduce the conclusion and model.
bool replay_trace(const Verdict& v, const StackDescriptor& d, const SchemeInvariants& s);

}  // namespace brq
