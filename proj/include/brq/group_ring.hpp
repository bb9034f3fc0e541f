#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brq/base_ring.hpp"

namespace brq {

using Exponent = std::vector<long>;

/// Element of the group ring base[Z^r]: a finite map from exponent vectors
/// to nonzero coefficients, kept in lexicographic term order.
class GroupRingElement {
public:
    GroupRingElement(BaseRing base, std::size_t lattice_rank)
        : base_(std::move(base)), rank_(lattice_rank) {}

    static GroupRingElement zero(const BaseRing& base, std::size_t rank);
    static GroupRingElement constant(const BaseRing& base, std::size_t rank, const RingElem& c);
    static GroupRingElement from_int(const BaseRing& base, std::size_t rank, const Int& n);
    static GroupRingElement monomial(const BaseRing& base, std::size_t rank, const RingElem& c,
                                     Exponent exp);
    /// The variable t_i (1-based index).
    static GroupRingElement variable(const BaseRing& base, std::size_t rank, std::size_t i);

    const BaseRing& base() const { return base_; }
    std::size_t lattice_rank() const { return rank_; }
    const std::map<Exponent, RingElem>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator-() const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement scale(const RingElem& c) const;
    GroupRingElement pow(long e) const;  // e < 0 needs a unit monomial
    bool operator==(const GroupRingElement& o) const;
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

    /// Multiply by t^shift.
    GroupRingElement shift(const Exponent& shift) const;

    void add_term(const Exponent& e, const RingElem& c);

    /// Inverse of a monomial with unit coefficient; throws otherwise.
    GroupRingElement monomial_inverse() const;

    /// Canonical text (descending lex term order). Default names t1..tr.
    std::string to_string() const;
    std::string to_string(const std::vector<std::string>& names) const;

private:
    BaseRing base_;
    std::size_t rank_;
    std::map<Exponent, RingElem> terms_;
};

/// Outcome of unit recognition over an integral-domain base.
struct UnitRecognition {
    bool is_unit = false;
    RingElem coefficient;  // meaningful when is_unit
    Exponent exponent;
    std::string reason;  // meaningful when !is_unit
};

/// Units of base[Z^r] over an integral domain are exactly u * t^m with u a
/// base-ring unit. Throws std::domain_error when the base ring cannot be
/// certified as an integral domain within the family.
UnitRecognition recognize_unit(const GroupRingElement& x);

GroupRingElement parse_group_ring_element(const BaseRing& base, std::size_t rank,
                                          const std::string& text);
GroupRingElement parse_group_ring_element(const BaseRing& base, std::size_t rank,
                                          const std::vector<std::string>& names,
                                          const std::string& text);

/// Square matrix over one group ring.
class GroupRingMatrix {
public:
    GroupRingMatrix(const BaseRing& base, std::size_t lattice_rank, std::size_t n);

    static GroupRingMatrix identity(const BaseRing& base, std::size_t rank, std::size_t n);

    std::size_t size() const { return n_; }
    const BaseRing& base() const { return base_; }
    std::size_t lattice_rank() const { return rank_; }

    const GroupRingElement& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * n_ + j];
    }
    GroupRingElement& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    GroupRingMatrix operator*(const GroupRingMatrix& o) const;
    GroupRingMatrix operator-(const GroupRingMatrix& o) const;
    GroupRingMatrix scale(const GroupRingElement& c) const;
    bool operator==(const GroupRingMatrix& o) const;
    bool operator!=(const GroupRingMatrix& o) const { return !(*this == o); }

    /// Laplace expansion along the first row.
    GroupRingElement determinant() const;

    /// Transposed cofactor matrix; M * adj(M) = det(M) * I.
    GroupRingMatrix adjugate() const;

private:
    BaseRing base_;
    std::size_t rank_;
    std::size_t n_;
    std::vector<GroupRingElement> entries_;
};

}  // namespace brq
