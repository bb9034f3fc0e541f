#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "brq/int_matrix.hpp"

namespace brq {

class RingElem;
struct BaseRingImpl;

/// A closed family of coefficient rings: Z, Z/m, F_p, and univariate
/// quotients base[x]/(f) with f monic. Equality, arithmetic, zero tests
/// and unit tests are decidable for every member.
class BaseRing {
public:
    enum class Tag { Integers, IntegersMod, PrimeField, UnivariateQuotient };

    static BaseRing integers();
    static BaseRing integers_mod(const Int& m);  // m >= 2
    static BaseRing prime_field(const Int& p);   // p prime (checked)
    /// base[var]/(modulus); modulus monic of degree >= 1, coefficients
    /// listed from degree 0 upward.
    static BaseRing univariate_quotient(const BaseRing& inner, std::vector<RingElem> modulus,
                                        std::string var = "a");

    Tag tag() const;
    const Int& modulus_int() const;
    BaseRing inner() const;
    const std::vector<RingElem>& modulus_poly() const;
    std::size_t modulus_degree() const;
    const std::string& variable() const;

    bool operator==(const BaseRing& other) const;
    bool operator!=(const BaseRing& other) const { return !(*this == other); }

    /// Certified integral domain within the family: Z, F_p, or
    /// F_p[x]/(irreducible). Quotients of Z are never certified here.
    bool is_integral_domain() const;

    RingElem zero() const;
    RingElem one() const;
    RingElem from_int(const Int& n) const;
    /// Element c0 + c1 x + ... in a quotient ring (reduced mod the modulus).
    RingElem from_poly(const std::vector<RingElem>& coeffs) const;
    /// The class of the quotient variable.
    RingElem quotient_variable() const;

    std::string to_string() const;
    /// Accepts "Z", "Z/6", "F7", "Z[a]/(a^2)", "F5[b]/(b^2+b+1)", ...
    static BaseRing parse(const std::string& text);

private:
    explicit BaseRing(std::shared_ptr<const BaseRingImpl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const BaseRingImpl> impl_;
    friend class RingElem;
    friend BaseRing make_base_ring(std::shared_ptr<const BaseRingImpl> impl);
};

/// Immutable element of a BaseRing.
class RingElem {
public:
    RingElem() = default;  // unusable until assigned

    const BaseRing& ring() const { return ring_; }

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator-() const;
    bool operator==(const RingElem& o) const;
    bool operator!=(const RingElem& o) const { return !(*this == o); }
    /// Total order within one ring, used for canonical printing only.
    bool operator<(const RingElem& o) const;

    bool is_zero() const;
    bool is_one() const;

    bool is_unit() const;
    /// Inverse of a unit; throws std::domain_error if not a unit.
    RingElem inverse() const;

    std::string to_string() const;

    /// Residue representative (Integers / IntegersMod / PrimeField only).
    const Int& integer_value() const;
    /// Coefficients from degree 0 upward (UnivariateQuotient only).
    const std::vector<RingElem>& poly_coeffs() const;

    /// Parse a coefficient literal in this ring's notation.
    static RingElem parse(const BaseRing& ring, const std::string& text);

private:
    friend class BaseRing;
    BaseRing ring_{nullptr};
    Int z_;                        // Integers / IntegersMod / PrimeField
    std::vector<RingElem> poly_;   // UnivariateQuotient, trimmed, deg < modulus
    RingElem(BaseRing r, Int z) : ring_(std::move(r)), z_(std::move(z)) {}
    RingElem(BaseRing r, std::vector<RingElem> p) : ring_(std::move(r)), poly_(std::move(p)) {}
};

}  // namespace brq
