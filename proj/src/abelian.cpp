#include "brq/abelian.hpp"

#include <sstream>
#include <stdexcept>

namespace brq {

FgAbGroup FgAbGroup::cyclic(const Int& n) {
    Int a = abs(n);
    if (a == 0) return free(1);
    if (a == 1) return trivial();
    return {0, {a}};
}

std::string FgAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank == 1) {
        os << "Z";
        first = false;
    } else if (rank > 1) {
        os << "Z^" << rank;
        first = false;
    }
    for (const auto& d : invariant_factors) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> diag;
    diag.insert(diag.end(), a.invariant_factors.begin(), a.invariant_factors.end());
    diag.insert(diag.end(), b.invariant_factors.begin(), b.invariant_factors.end());
    IntMatrix rel(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) rel(i, i) = diag[i];
    FgAbGroup torsion = group_invariants(diag.size(), rel);
    torsion.rank = a.rank + b.rank;
    return torsion;
}

FgAbGroup direct_sum_power(const FgAbGroup& a, std::size_t copies) {
    FgAbGroup out;
    for (std::size_t i = 0; i < copies; ++i) out = direct_sum(out, a);
    return out;
}

GroupPresentation::GroupPresentation(std::size_t gens, IntMatrix rels)
    : generators(gens), relations(std::move(rels)) {
    if (relations.cols() != generators)
        throw std::invalid_argument("GroupPresentation: relation width != generator count");
}

GroupPresentation GroupPresentation::of(const FgAbGroup& g) {
    std::size_t n = g.rank + g.invariant_factors.size();
    IntMatrix rel(g.invariant_factors.size(), n);
    for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) rel(i, i) = g.invariant_factors[i];
    return GroupPresentation(n, rel);
}

FgAbGroup GroupPresentation::invariants() const { return group_invariants(generators, relations); }

bool GroupPresentation::compatible_with(const GroupPresentation& other) const {
    if (generators != other.generators) return false;
    return lattice_contains_all(relation_lattice(), other.relation_lattice()) &&
           lattice_contains_all(other.relation_lattice(), relation_lattice());
}

GroupPresentation GroupPresentation::direct_sum(const std::vector<GroupPresentation>& parts) {
    std::size_t gens = 0, rels = 0;
    for (const auto& p : parts) {
        gens += p.generators;
        rels += p.relations.rows();
    }
    IntMatrix rel(rels, gens);
    std::size_t goff = 0, roff = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.relations.rows(); ++i)
            for (std::size_t j = 0; j < p.generators; ++j) rel(roff + i, goff + j) = p.relations(i, j);
        goff += p.generators;
        roff += p.relations.rows();
    }
    return GroupPresentation(gens, rel);
}

FgAbGroup group_invariants(std::size_t generators, const IntMatrix& relations) {
    if (relations.cols() != generators)
        throw std::invalid_argument("group_invariants: relation width != generator count");
    SmithForm f = smith_normal_form(relations);
    FgAbGroup g;
    g.rank = generators - f.rank();
    g.invariant_factors = f.invariant_factors();
    return g;
}

bool is_torsion_free(const FgAbGroup& g) { return g.is_torsion_free(); }

GroupHom::GroupHom(GroupPresentation src, GroupPresentation tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (matrix.rows() != target.generators || matrix.cols() != source.generators)
        throw std::invalid_argument("GroupHom: matrix shape does not match presentations");
    IntMatrix tgt_lattice = target.relation_lattice();
    IntMatrix mapped = matrix * source.relation_lattice();
    if (!lattice_contains_all(tgt_lattice, mapped))
        throw std::invalid_argument("GroupHom: matrix does not preserve relations");
}

GroupHom GroupHom::zero(GroupPresentation src, GroupPresentation tgt) {
    IntMatrix m(tgt.generators, src.generators);
    return GroupHom(std::move(src), std::move(tgt), std::move(m));
}

GroupHom GroupHom::identity(const GroupPresentation& p) {
    return GroupHom(p, p, IntMatrix::identity(p.generators));
}

bool GroupHom::is_zero_hom() const {
    return lattice_contains_all(target.relation_lattice(), matrix);
}

FgAbGroup GroupHom::cokernel() const {
    IntMatrix rel = IntMatrix::hconcat(matrix, target.relation_lattice()).transpose();
    return group_invariants(target.generators, rel);
}

bool composes_to_zero(const GroupHom& f, const GroupHom& g) {
    IntMatrix prod = g.matrix * f.matrix;
    return lattice_contains_all(g.target.relation_lattice(), prod);
}

FgAbGroup homology_at(const GroupHom& d_in, const GroupHom& d_out) {
    if (!d_in.target.compatible_with(d_out.source))
        throw std::invalid_argument("homology_at: middle presentations incompatible");
    if (!composes_to_zero(d_in, d_out))
        throw std::invalid_argument("homology_at: composition of differentials is nonzero");

    // Kernel lattice L = { x : d_out(x) in target relations }, via the
    // kernel of [ D_out | -R_C ] projected to the x block.
    const IntMatrix r_c = d_out.target.relation_lattice();
    IntMatrix stacked = IntMatrix::hconcat(d_out.matrix, -r_c);
    IntMatrix ker = kernel_basis(stacked);
    std::size_t n = d_out.source.generators;
    IntMatrix kernel_lattice(n, ker.cols());
    for (std::size_t j = 0; j < ker.cols(); ++j)
        for (std::size_t i = 0; i < n; ++i) kernel_lattice(i, j) = ker(i, j);

    // The numerator lattice contains im(d_in) and the middle relations.
    IntMatrix numerator = IntMatrix::hconcat(d_in.matrix, d_in.target.relation_lattice());

    // Rewrite the numerator in a basis of the kernel lattice. A basis is
    // obtained from the SNF of kernel_lattice: the first `rank` columns of
    // U^{-1} scaled... simpler: columns of kernel_lattice itself need not be
    // independent, so extract an independent generating set first.
    SmithForm kf = smith_normal_form(kernel_lattice);
    std::size_t rank = kf.rank();
    // basis_i = (U^{-1} * S) column i / ... use L = U^{-1} S V^{-1}:
    // column span of L equals column span of U^{-1} * S_diag, whose nonzero
    // columns are s_i * (U^{-1} e_i).
    IntMatrix uinv_cols(n, rank);
    {
        // Solve U * x = e_i for each needed i (U unimodular).
        for (std::size_t i = 0; i < rank; ++i) {
            std::vector<Int> e(n);
            e[i] = 1;
            auto x = solve(kf.U, e);
            if (!x) throw std::logic_error("homology_at: unimodular solve failed");
            std::vector<Int> col(n);
            for (std::size_t k = 0; k < n; ++k) col[k] = (*x)[k] * kf.S(i, i);
            uinv_cols.set_column(i, col);
        }
    }
    const IntMatrix& basis = uinv_cols;  // n x rank, independent columns spanning L

    // Express numerator columns in that basis.
    IntMatrix w(rank, numerator.cols());
    for (std::size_t j = 0; j < numerator.cols(); ++j) {
        auto x = solve(basis, numerator.column(j));
        if (!x) throw std::logic_error("homology_at: numerator not inside kernel lattice");
        w.set_column(j, *x);
    }
    return group_invariants(rank, w.transpose());
}

CochainComplex::CochainComplex(std::vector<GroupPresentation> t, std::vector<GroupHom> d)
    : terms(std::move(t)), differentials(std::move(d)) {
    if (terms.empty()) throw std::invalid_argument("CochainComplex: no terms");
    if (differentials.size() + 1 != terms.size())
        throw std::invalid_argument("CochainComplex: need exactly one differential per gap");
    for (std::size_t p = 0; p < differentials.size(); ++p)
        if (differentials[p].source.generators != terms[p].generators ||
            differentials[p].target.generators != terms[p + 1].generators)
            throw std::invalid_argument("CochainComplex: differential does not match terms");
    for (std::size_t p = 0; p + 1 < differentials.size(); ++p)
        if (!composes_to_zero(differentials[p], differentials[p + 1]))
            throw std::invalid_argument("CochainComplex: d∘d != 0 at degree " + std::to_string(p));
}

FgAbGroup CochainComplex::cohomology(std::size_t p) const {
    if (p >= terms.size()) return FgAbGroup::trivial();
    GroupHom in = p == 0 ? GroupHom::zero(GroupPresentation::free(0), terms[0]) : differentials[p - 1];
    GroupHom out = p + 1 == terms.size() ? GroupHom::zero(terms[p], GroupPresentation::free(0))
                                         : differentials[p];
    return homology_at(in, out);
}

std::vector<FgAbGroup> CochainComplex::all_cohomology() const {
    std::vector<FgAbGroup> out;
    out.reserve(terms.size());
    for (std::size_t p = 0; p < terms.size(); ++p) out.push_back(cohomology(p));
    return out;
}

}  // namespace brq
