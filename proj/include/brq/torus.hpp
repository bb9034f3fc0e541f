#pragma once

#include <optional>

#include "brq/abelian.hpp"

namespace brq {

/// Input for the unit/character cochain complex of a classifying stack of a
/// split torus: U models the global units, M is the (torsion-free) character
/// lattice.
struct UnitsComplexSpec {
    FgAbGroup units;       // U
    FgAbGroup characters;  // M, must be torsion-free
    std::size_t max_degree = 2;

    UnitsComplexSpec(FgAbGroup u, FgAbGroup m, std::size_t maxdeg);
};

/// One degree of the bottom row: the term U (+) M^p, the outgoing
/// differential, and the cohomology at this spot.
struct BottomRowDegree {
    std::size_t degree = 0;
    std::string term;                     // human-readable shape
    std::size_t term_generators = 0;
    std::optional<IntMatrix> differential;  // d^p, absent at the top degree
    std::optional<FgAbGroup> cohomology;    // E2^{p,0}, p <= max_degree-1
};

struct BottomRowReport {
    std::vector<BottomRowDegree> degrees;
    /// Sign convention actually used, stated as a fact about the matrices.
    std::string convention_note;
    /// The computed degree-1 behaviour (the character block of d^1 vanishes).
    std::string degree_one_note;
    /// Even degrees p where the closed-form image was verified to lie inside
    /// the computed image.
    std::vector<std::size_t> closed_form_checked;
    bool closed_form_contained = true;
    /// Set for the GL_n variant: the group size and per-degree generator labels.
    std::optional<std::size_t> gln_n;
    std::vector<std::vector<std::string>> generator_labels;
};

/// The p+2 coface maps M^p -> M^(p+1): prepend zero, duplicate slot j
/// (1 <= j <= p), append zero.
std::vector<GroupHom> coface_maps(std::size_t p, const FgAbGroup& m);

/// d^p on U (+) M^p: alternating sum of the cofaces; identity on U for odd
/// p, zero for even p, no mixing between the blocks.
GroupHom differential(std::size_t p, const UnitsComplexSpec& spec);

/// Closed-form image of d^p on the character block (consecutive-pair
/// differences in even degree, duplicated entries in odd degree).
IntMatrix closed_form_character_matrix(std::size_t p, std::size_t m_rank);

BottomRowReport bottom_row_cohomology(const UnitsComplexSpec& spec);

/// Bottom row for GL_n: identical matrices to the rank-one torus case, with
/// generators labeled by the determinants of the p factors.
BottomRowReport gln_bottom_row(std::size_t n, std::size_t max_degree);

}  // namespace brq
