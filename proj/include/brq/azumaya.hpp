#pragma once

#include <map>
#include <optional>
#include <utility>

#include "brq/abelian.hpp"
#include "brq/group_ring.hpp"

namespace brq {

/// Canonical coset representatives of Z^s modulo an integer lattice.
class CosetReducer {
public:
    explicit CosetReducer(const IntMatrix& lattice_columns);
    std::vector<Int> reduce(const std::vector<Int>& v) const;
    Exponent reduce(const Exponent& v) const;

private:
    std::size_t dim_;
    IntMatrix u_;     // from the SNF of the lattice
    IntMatrix uinv_;
    std::vector<Int> diag_;
};

/// Rewrite every exponent to its canonical coset representative, combining
/// terms that collapse.
GroupRingElement reduce_mod_lattice(const GroupRingElement& e, const CosetReducer& red);

/// Which way the n-torsion trivializing relation is oriented.
enum class TorsionOrientation {
    Printed,   // xi_{i1,i2}^n = beta_{i1}^{-1} * beta_{i2}
    Reversed,  // xi_{i1,i2}^n = beta_{i2}^{-1} * beta_{i1}
};

std::string to_string(TorsionOrientation o);

/// Free abelian group on the overlap units xi_{i<j} and the per-chart units
/// beta_i, with the cocycle relations xi_{ij} * xi_{jk} = xi_{ik} and,
/// optionally, the n-torsion relation in a chosen orientation.
struct SymbolicUnitGroup {
    std::size_t n = 2;
    std::size_t charts = 2;
    bool with_torsion_relation = true;

    SymbolicUnitGroup(std::size_t n_, std::size_t charts_, bool with_torsion = true);

    std::size_t symbol_count() const;
    std::size_t beta_index(std::size_t i) const;                  // 1-based chart
    std::size_t xi_index(std::size_t i, std::size_t j) const;     // 1-based, i < j
    std::vector<std::string> symbol_names() const;
    std::vector<std::pair<std::size_t, std::size_t>> overlaps() const;  // (i, j), i < j

    IntMatrix cocycle_relation_rows() const;
    IntMatrix relation_rows(TorsionOrientation o) const;
    /// Relation lattice (columns) under the given orientation.
    IntMatrix relation_lattice(TorsionOrientation o) const;
    /// The presented group; nontrivial for every valid instance.
    FgAbGroup invariants(TorsionOrientation o) const;
};

/// The gluing matrices: per chart the companion-style matrix M_i with 1s on
/// the subdiagonal and beta_i in the upper-right corner; per overlap the
/// diagonal change-of-basis D = diag(1, xi, ..., xi^{n-1}).
struct GluingData {
    SymbolicUnitGroup group;
    BaseRing base;
    std::vector<GroupRingMatrix> companion;  // index = chart - 1
    std::map<std::pair<std::size_t, std::size_t>, GroupRingMatrix> transition;
    /// The module basis the matrices act on: tensor powers 0..n-1 of the
    /// chart's trivializing section.
    std::vector<std::string> basis;

    const GroupRingMatrix& m(std::size_t chart) const { return companion.at(chart - 1); }
    const GroupRingMatrix& d(std::size_t i, std::size_t j) const { return transition.at({i, j}); }
};

GluingData build_gluing(std::size_t n, std::size_t charts, bool with_torsion_relation = true);

struct OverlapCheck {
    std::size_t i = 0, j = 0;
    bool printed_holds = false;
    bool reversed_holds = false;
    /// lhs - rhs over the free symbol ring (before imposing any torsion
    /// relation); kept for failure reports.
    std::optional<GroupRingMatrix> discrepancy;
};

struct GluingCheck {
    bool holds = false;
    std::optional<TorsionOrientation> orientation;  // set when holds
    std::vector<OverlapCheck> overlaps;
};

/// Does D * M_{i1} = xi * M_{i2} * D hold on every overlap, and under which
/// orientation of the torsion relation? Failure is a value, not an error.
GluingCheck verify_gluing_identity(const GluingData& data);

struct CoboundaryClass {
    std::size_t i = 0, j = 0;
    Exponent class_exponent;  // the class of the overlap unit xi_{ij}
    bool n_torsion = false;   // n * class lies in the beta-coboundary lattice
};

/// The class of the conjugation discrepancy on each overlap; requires the
/// gluing identity to hold (throws std::logic_error otherwise).
std::vector<CoboundaryClass> coboundary_class(const GluingData& data);

struct TorsionCertificate {
    bool certified = false;  // all overlaps certified
    struct PerOverlap {
        std::size_t i = 0, j = 0;
        bool ok = false;
        std::optional<Int> beta_multiple;  // k with xi^n = (beta_i^{-1} beta_j)^k mod relations
    };
    std::vector<PerOverlap> overlaps;
};

/// Certifies xi^n lies in the subgroup generated by beta_{i}^{-1} beta_{j}
/// modulo the group's relations (i.e. the coboundary class is n-torsion).
TorsionCertificate determinant_torsion_bound(const GluingData& data);

/// D_{i2,i3} * D_{i1,i2} = D_{i1,i3} modulo the cocycle relations, for all
/// chart triples.
bool triple_overlap_consistent(const GluingData& data);

}  // namespace brq
