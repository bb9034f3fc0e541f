#pragma once

#include "brq/abelian.hpp"

namespace brq {

/// A finitely generated abelian group together with r pairwise-commuting
/// automorphisms, i.e. a module over the group ring of Z^r.
struct ZrModule {
    GroupPresentation underlying;
    std::vector<IntMatrix> actions;  // T_1 ... T_r on generators

    /// Validates that each T_i preserves the relation lattice, acts
    /// invertibly on the quotient, and that the actions commute as
    /// endomorphisms of the group.
    ZrModule(GroupPresentation group, std::vector<IntMatrix> action_matrices);

    std::size_t rank() const { return actions.size(); }

    /// Trivial action of Z^r on the given group.
    static ZrModule trivial(const FgAbGroup& m, std::size_t r);
};

/// Cochain complex computing H^*(Z^r, M) from the standard free resolution
/// over the group ring: C^p = M^(r choose p), differentials assembled from
/// the maps (t_i - 1). The degree-1 -> degree-2 component for r = 2 is
/// (m1, m2) |-> (t2-1)m1 - (t1-1)m2.
CochainComplex koszul_cochain_complex(const ZrModule& m);

/// H^p(Z^r, M) for p = 0..r.
std::vector<FgAbGroup> group_cohomology(const ZrModule& m);

/// All p-element subsets of {0,..,r-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t r, std::size_t p);

}  // namespace brq
