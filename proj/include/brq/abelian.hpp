#pragma once

#include <string>
#include <vector>

#include "brq/int_matrix.hpp"
#include "brq/smith.hpp"

namespace brq {

/// Canonical form of a finitely generated abelian group:
/// Z^rank  (+)  Z/d_1 (+) ... (+) Z/d_k  with  2 <= d_1 | d_2 | ... | d_k.
struct FgAbGroup {
    std::size_t rank = 0;
    std::vector<Int> invariant_factors;

    bool operator==(const FgAbGroup& other) const = default;

    bool is_trivial() const { return rank == 0 && invariant_factors.empty(); }
    bool is_torsion_free() const { return invariant_factors.empty(); }
    FgAbGroup torsion_part() const { return {0, invariant_factors}; }

    static FgAbGroup trivial() { return {}; }
    static FgAbGroup free(std::size_t r) { return {r, {}}; }
    static FgAbGroup cyclic(const Int& n);

    std::string to_string() const;
};

/// Recanonicalized direct sum (Z/2 (+) Z/3 collapses to Z/6).
FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup direct_sum_power(const FgAbGroup& a, std::size_t copies);

/// A group given by generators and relations: Z^generators / rowspan(relations).
struct GroupPresentation {
    std::size_t generators = 0;
    IntMatrix relations;  // one relation per row, `generators` columns

    GroupPresentation() : relations(0, 0) {}
    GroupPresentation(std::size_t gens, IntMatrix rels);

    /// Presentation of the canonical group (diagonal relations).
    static GroupPresentation of(const FgAbGroup& g);
    static GroupPresentation free(std::size_t r) { return GroupPresentation(r, IntMatrix(0, r)); }

    /// Relation lattice as matrix columns (transpose of `relations`).
    IntMatrix relation_lattice() const { return relations.transpose(); }

    FgAbGroup invariants() const;

    /// Same generator count and mutually contained relation lattices.
    bool compatible_with(const GroupPresentation& other) const;

    /// Block direct sum of presentations.
    static GroupPresentation direct_sum(const std::vector<GroupPresentation>& parts);
};

FgAbGroup group_invariants(std::size_t generators, const IntMatrix& relations);
bool is_torsion_free(const FgAbGroup& g);

/// Homomorphism between presented groups; `matrix` acts on generator
/// column vectors (target_generators x source_generators). Construction
/// checks that the matrix carries source relations into the target
/// relation lattice.
struct GroupHom {
    GroupPresentation source;
    GroupPresentation target;
    IntMatrix matrix;

    GroupHom(GroupPresentation src, GroupPresentation tgt, IntMatrix m);

    static GroupHom zero(GroupPresentation src, GroupPresentation tgt);
    static GroupHom identity(const GroupPresentation& p);

    /// Is this map zero as a map of groups (every column in the target relation lattice)?
    bool is_zero_hom() const;

    /// Induced cokernel: target / (image + target relations).
    FgAbGroup cokernel() const;
};

/// Is g ∘ f zero as a map of groups?
bool composes_to_zero(const GroupHom& f, const GroupHom& g);

/// ker(d_out) / im(d_in) as a canonical group. Throws std::invalid_argument
/// when the maps are incompatible or the composition is nonzero.
FgAbGroup homology_at(const GroupHom& d_in, const GroupHom& d_out);

/// A bounded cochain complex: terms[0] -> terms[1] -> ... with
/// differentials[p] : terms[p] -> terms[p+1] and d∘d = 0 (verified).
struct CochainComplex {
    std::vector<GroupPresentation> terms;
    std::vector<GroupHom> differentials;

    CochainComplex(std::vector<GroupPresentation> t, std::vector<GroupHom> d);

    std::size_t length() const { return terms.size(); }

    /// Cohomology at degree p (0-based).
    FgAbGroup cohomology(std::size_t p) const;
    std::vector<FgAbGroup> all_cohomology() const;
};

}  // namespace brq
