#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "brq/abelian.hpp"

namespace brq {

using Rat = mpq_class;

/// Point on a curve over F_p (affine or the point at infinity).
struct FpPoint {
    bool infinity = true;
    Int x, y;

    static FpPoint at_infinity() { return {}; }
    static FpPoint affine(Int x, Int y) { return {false, std::move(x), std::move(y)}; }
    bool operator==(const FpPoint& o) const;
    bool operator<(const FpPoint& o) const;  // infinity first, then (x, y)
};

/// y^2 = x^3 + a x + b over F_p, p >= 5 prime, nonsingular.
class FpCurve {
public:
    FpCurve(const Int& p, const Int& a, const Int& b);

    const Int& p() const { return p_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    bool on_curve(const FpPoint& pt) const;
    FpPoint negate(const FpPoint& pt) const;
    FpPoint add(const FpPoint& p1, const FpPoint& p2) const;
    FpPoint scalar_mul(const Int& k, const FpPoint& pt) const;

    /// All points, infinity first then sorted by (x, y); requires p <= 10000.
    /// The count is asserted against the Hasse bound.
    std::vector<FpPoint> enumerate_points() const;

private:
    Int p_, a_, b_;
};

struct GroupStructureCertificate {
    Int order;            // = d1 * d2
    Int d1, d2;           // d1 | d2, d1 | p-1
    FgAbGroup structure;  // Z/d1 (+) Z/d2 canonical
    FpPoint generator_big;    // verified order d2
    FpPoint generator_small;  // verified order d1 in the quotient by <generator_big>
};

/// Structure of E(F_p) with explicit certified generators.
GroupStructureCertificate group_structure(const FpCurve& e);

/// Order of a point given the group order (smallest divisor d with d*P = O).
Int point_order(const FpCurve& e, const FpPoint& pt, const Int& group_order);

/// Point with rational coordinates (affine or infinity).
struct QPoint {
    bool infinity = true;
    Rat x, y;

    static QPoint at_infinity() { return {}; }
    static QPoint affine(Rat x, Rat y) { return {false, std::move(x), std::move(y)}; }
    bool operator==(const QPoint& o) const;
};

/// y^2 = x^3 + a x + b with integer coefficients, nonsingular.
class RationalCurve {
public:
    RationalCurve(const Int& a, const Int& b);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    bool on_curve(const QPoint& pt) const;
    QPoint negate(const QPoint& pt) const;
    QPoint add(const QPoint& p1, const QPoint& p2) const;

private:
    Int a_, b_;
};

struct RationalTorsionReport {
    FgAbGroup structure;
    std::vector<QPoint> points;  // the torsion subgroup including infinity
    std::vector<Int> orders;     // verified order per point
};

/// Torsion subgroup of E(Q) by the integrality criterion: candidates have
/// y = 0 or y^2 dividing 4a^3 + 27b^2; each candidate's multiples either
/// reach infinity within the candidate bound or leave the candidate set.
RationalTorsionReport rational_torsion(const RationalCurve& e);

/// Which curve a verdict is asked about.
struct EllipticCurveSpec {
    bool rational = false;  // over Q when true, else over F_p
    Int p;                  // prime, when !rational
    Int a, b;
};

struct BaVerdict {
    bool br_equals_br_prime = false;
    FgAbGroup torsion;
    std::optional<GroupStructureCertificate> finite_certificate;
    std::vector<std::string> trace;
};

/// Torsion of the point group decides the verdict; finite fields always
/// produce nontrivial torsion (Hasse), so the verdict is negative there.
BaVerdict verdict_ba(const EllipticCurveSpec& spec);

/// Prime factorization (trial division + Pollard rho); exact.
std::map<Int, unsigned> factorize(Int n);

/// All integer roots of x^3 + a x + c.
std::vector<Int> integer_roots_depressed_cubic(const Int& a, const Int& c);

/// Sorted divisors of n > 0.
std::vector<Int> divisors(const Int& n);

}  // namespace brq
