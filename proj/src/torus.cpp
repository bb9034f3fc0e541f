#include "brq/torus.hpp"

#include <sstream>
#include <stdexcept>

namespace brq {

UnitsComplexSpec::UnitsComplexSpec(FgAbGroup u, FgAbGroup m, std::size_t maxdeg)
    : units(std::move(u)), characters(std::move(m)), max_degree(maxdeg) {
    if (!characters.is_torsion_free())
        throw std::invalid_argument("UnitsComplexSpec: character lattice must be torsion-free");
    if (max_degree < 2) throw std::invalid_argument("UnitsComplexSpec: max_degree must be >= 2");
}

namespace {

GroupPresentation m_power(const FgAbGroup& m, std::size_t p) {
    return GroupPresentation::direct_sum(
        std::vector<GroupPresentation>(p, GroupPresentation::of(m)));
}

// Character block of the coface map delta_j : M^p -> M^(p+1).
IntMatrix coface_matrix(std::size_t p, std::size_t k, std::size_t j) {
    IntMatrix d((p + 1) * k, p * k);
    auto copy_block = [&](std::size_t out_slot, std::size_t in_slot) {
        for (std::size_t a = 0; a < k; ++a) d(out_slot * k + a, in_slot * k + a) = 1;
    };
    if (j == 0) {
        for (std::size_t i = 0; i < p; ++i) copy_block(i + 1, i);
    } else if (j == p + 1) {
        for (std::size_t i = 0; i < p; ++i) copy_block(i, i);
    } else {
        // duplicate slot j (1-based)
        for (std::size_t i = 0; i < p; ++i) {
            if (i + 1 <= j)
                copy_block(i, i);
            if (i + 1 >= j)
                copy_block(i + 1, i);
        }
    }
    return d;
}

std::string term_shape(const FgAbGroup& u, const FgAbGroup& m, std::size_t p) {
    std::ostringstream os;
    os << "U";
    if (p > 0) os << " + M^" << p;
    (void)u;
    (void)m;
    return os.str();
}

}  // namespace

std::vector<GroupHom> coface_maps(std::size_t p, const FgAbGroup& m) {
    GroupPresentation src = m_power(m, p);
    GroupPresentation tgt = m_power(m, p + 1);
    std::size_t k = GroupPresentation::of(m).generators;
    std::vector<GroupHom> out;
    out.reserve(p + 2);
    for (std::size_t j = 0; j <= p + 1; ++j)
        out.emplace_back(src, tgt, coface_matrix(p, k, j));
    return out;
}

GroupHom differential(std::size_t p, const UnitsComplexSpec& spec) {
    GroupPresentation u_pres = GroupPresentation::of(spec.units);
    std::size_t uk = u_pres.generators;
    std::size_t mk = GroupPresentation::of(spec.characters).generators;

    GroupPresentation src = GroupPresentation::direct_sum({u_pres, m_power(spec.characters, p)});
    GroupPresentation tgt =
        GroupPresentation::direct_sum({u_pres, m_power(spec.characters, p + 1)});

    IntMatrix d(tgt.generators, src.generators);
    // U block: sum of p+2 alternating identities = id for odd p, 0 for even p.
    if (p % 2 == 1)
        for (std::size_t a = 0; a < uk; ++a) d(a, a) = 1;
    // M block: alternating sum of the cofaces.
    for (std::size_t j = 0; j <= p + 1; ++j) {
        IntMatrix cf = coface_matrix(p, mk, j);
        long sign = (j % 2 == 0) ? 1 : -1;
        for (std::size_t a = 0; a < cf.rows(); ++a)
            for (std::size_t b = 0; b < cf.cols(); ++b)
                if (cf(a, b) != 0) d(uk + a, uk + b) += sign * cf(a, b);
    }
    return GroupHom(std::move(src), std::move(tgt), std::move(d));
}

IntMatrix closed_form_character_matrix(std::size_t p, std::size_t k) {
    IntMatrix cf((p + 1) * k, p * k);
    auto add_block = [&](std::size_t out_slot, std::size_t in_slot, long val) {
        for (std::size_t a = 0; a < k; ++a) cf(out_slot * k + a, in_slot * k + a) += val;
    };
    if (p % 2 == 0) {
        // [-a1, 0, a2-a3, 0, ..., a_{p-2}-a_{p-1}, 0, a_p]
        if (p == 0) return cf;
        add_block(0, 0, -1);
        for (std::size_t t = 1; 2 * t < p; ++t) {
            add_block(2 * t, 2 * t - 1, 1);   // + a_{2t}
            add_block(2 * t, 2 * t, -1);      // - a_{2t+1}
        }
        add_block(p, p - 1, 1);
    } else {
        // [0, a2, a2, a4, a4, ..., a_{p-1}, a_{p-1}, 0]
        for (std::size_t t = 1; 2 * t <= p - 1; ++t) {
            add_block(2 * t - 1, 2 * t - 1, 1);
            add_block(2 * t, 2 * t - 1, 1);
        }
    }
    return cf;
}

BottomRowReport bottom_row_cohomology(const UnitsComplexSpec& spec) {
    BottomRowReport report;
    report.convention_note =
        "d^p = sum_{j=0}^{p+1} (-1)^j delta_j with delta_0 = prepend 0, delta_j = duplicate "
        "slot j, delta_{p+1} = append 0; on the U block this is the identity for odd p and "
        "zero for even p";

    std::size_t uk = GroupPresentation::of(spec.units).generators;
    std::vector<GroupPresentation> terms;
    std::vector<GroupHom> diffs;
    for (std::size_t p = 0; p <= spec.max_degree; ++p)
        terms.push_back(GroupPresentation::direct_sum(
            {GroupPresentation::of(spec.units), m_power(spec.characters, p)}));
    for (std::size_t p = 0; p < spec.max_degree; ++p) diffs.push_back(differential(p, spec));

    CochainComplex complex(terms, diffs);  // validates d∘d = 0

    for (std::size_t p = 0; p <= spec.max_degree; ++p) {
        BottomRowDegree deg;
        deg.degree = p;
        deg.term = term_shape(spec.units, spec.characters, p);
        deg.term_generators = terms[p].generators;
        if (p < spec.max_degree) deg.differential = diffs[p].matrix;
        if (p + 1 <= spec.max_degree) deg.cohomology = complex.cohomology(p);
        report.degrees.push_back(std::move(deg));
    }

    // degree-1 ground truth: the character block of d^1 vanishes
    {
        const IntMatrix& d1 = diffs[1].matrix;
        bool char_block_zero = true;
        for (std::size_t a = uk; a < d1.rows(); ++a)
            for (std::size_t b = uk; b < d1.cols(); ++b)
                if (d1(a, b) != 0) char_block_zero = false;
        std::ostringstream os;
        os << "the character block of d^1 is " << (char_block_zero ? "zero" : "nonzero")
           << "; E2^{1,0} equals the character lattice"
           << (char_block_zero ? "" : " (unexpected)");
        report.degree_one_note = os.str();
    }

    // closed-form image containment at even degrees
    std::size_t mk = GroupPresentation::of(spec.characters).generators;
    for (std::size_t p = 2; p < spec.max_degree; p += 2) {
        IntMatrix cf = closed_form_character_matrix(p, mk);
        const IntMatrix& d = diffs[p].matrix;
        bool ok = true;
        for (std::size_t j = 0; j < cf.cols() && ok; ++j) {
            std::vector<Int> v(d.rows());
            for (std::size_t i = 0; i < cf.rows(); ++i) v[uk + i] = cf(i, j);
            if (!lattice_contains(d, v)) ok = false;
        }
        report.closed_form_checked.push_back(p);
        if (!ok) report.closed_form_contained = false;
    }
    return report;
}

BottomRowReport gln_bottom_row(std::size_t n, std::size_t max_degree) {
    if (n < 1) throw std::invalid_argument("gln_bottom_row: n must be >= 1");
    UnitsComplexSpec spec(FgAbGroup::free(1), FgAbGroup::free(1), max_degree);
    BottomRowReport report = bottom_row_cohomology(spec);
    report.gln_n = n;
    for (std::size_t p = 0; p <= max_degree; ++p) {
        std::vector<std::string> labels;
        labels.push_back("u");
        for (std::size_t i = 1; i <= p; ++i) labels.push_back("det_factor_" + std::to_string(i));
        report.generator_labels.push_back(std::move(labels));
    }
    return report;
}

}  // namespace brq
