#pragma once

#include <optional>

#include "brq/group_ring.hpp"

namespace brq {

/// Context for the coordinate ring of n x n invertible matrices over a base
/// ring: polynomials in the n^2 entry variables, localized at the
/// determinant.
struct DetRing {
    BaseRing base;
    std::size_t n;

    DetRing(BaseRing b, std::size_t n_);

    std::size_t var_count() const { return n * n; }
    /// 1-based matrix position -> variable slot.
    std::size_t var_index(std::size_t i, std::size_t j) const;
    std::vector<std::string> var_names() const;  // X11, X12, ..., Xnn

    GroupRingElement zero_poly() const { return GroupRingElement::zero(base, var_count()); }
    GroupRingElement var(std::size_t i, std::size_t j) const;

    bool operator==(const DetRing& o) const { return base == o.base && n == o.n; }
};

/// Full signed permutation expansion of the n x n determinant; n <= 5.
GroupRingElement determinant_poly(const DetRing& ring);

/// X_{i,i} -> T, X_{i,j} -> 0 (i != j); the result is univariate in T
/// (lattice rank 1).
GroupRingElement substitute_scalar_matrix(const GroupRingElement& f, const DetRing& ring);

/// X_{i,i} -> X_{i,i} + X_{1,1} for i >= 2, other variables unchanged.
GroupRingElement shift_diagonal_substitution(const GroupRingElement& f, const DetRing& ring);

/// Exact division of polynomials when the divisor has unit leading
/// coefficient in lexicographic order; nullopt if not divisible.
std::optional<GroupRingElement> divide_exact(const GroupRingElement& f, const GroupRingElement& d);

/// Element numerator / det^det_power in canonical form (the numerator is
/// not divisible by det whenever det_power > 0).
class DetRingElement {
public:
    DetRingElement(DetRing ring, GroupRingElement numerator, long det_power);

    static DetRingElement from_poly(const DetRing& ring, GroupRingElement numerator);
    static DetRingElement constant(const DetRing& ring, const RingElem& c);
    static DetRingElement det(const DetRing& ring, long power = 1);

    const DetRing& ring() const { return ring_; }
    const GroupRingElement& numerator() const { return numerator_; }
    long det_power() const { return det_power_; }

    DetRingElement operator+(const DetRingElement& o) const;
    DetRingElement operator-(const DetRingElement& o) const;
    DetRingElement operator-() const;
    DetRingElement operator*(const DetRingElement& o) const;
    DetRingElement pow(long e) const;  // negative e needs a*det^m shape
    bool operator==(const DetRingElement& o) const;
    bool operator!=(const DetRingElement& o) const { return !(*this == o); }

    bool is_zero() const { return numerator_.is_zero(); }
    bool is_one() const;

    std::string to_string() const;

private:
    DetRing ring_;
    GroupRingElement numerator_;
    long det_power_;
    void canonicalize();
};

struct PhiImage {
    RingElem a;  // a verified base-ring unit
    long m = 0;
};

struct PhiRecognition {
    bool is_image = false;
    std::optional<PhiImage> image;
    std::string witness;  // failing stage when !is_image
};

/// Is w = a * det^m for a base-ring unit a? Requires the inverse witness
/// w_inv with w * w_inv = 1 (throws std::domain_error otherwise). The
/// algorithm clears denominators, tests scalar-matrix homogeneity, then
/// compares exactly against the forced candidate a * det^k.
PhiRecognition recognize_phi_image(const DetRingElement& w, const DetRingElement& w_inv);

/// Syntactic a*det^m recognition without an inverse witness (used by the
/// expression parser for division).
std::optional<PhiImage> try_phi_form(const DetRingElement& w);

struct NonzerodivisorReport {
    std::size_t samples = 0;
    std::vector<std::string> violations;  // expected empty
    bool ok() const { return violations.empty(); }
};

/// Random nonzero polynomials f: check det * f != 0.
NonzerodivisorReport det_nonzerodivisor_probe(const DetRing& ring, std::size_t samples,
                                              unsigned long seed = 1);

/// Parse an expression over X11..Xnn, det, integer literals and the
/// quotient variable (when the base is a quotient ring); '/' only by
/// a*det^k factors.
DetRingElement parse_det_ring_element(const DetRing& ring, const std::string& text);

}  // namespace brq
