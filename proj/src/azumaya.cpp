#include "brq/azumaya.hpp"

#include <stdexcept>

namespace brq {

// ---- CosetReducer ----

CosetReducer::CosetReducer(const IntMatrix& lattice_columns) : dim_(lattice_columns.rows()) {
    SmithForm f = smith_normal_form(lattice_columns);
    u_ = f.S.rows() ? f.U : IntMatrix::identity(dim_);
    std::size_t nmin = std::min(f.S.rows(), f.S.cols());
    diag_.assign(dim_, Int(0));
    for (std::size_t i = 0; i < nmin; ++i) diag_[i] = f.S(i, i);
    // invert the unimodular U by solving U x = e_i columnwise
    uinv_ = IntMatrix(dim_, dim_);
    for (std::size_t c = 0; c < dim_; ++c) {
        std::vector<Int> e(dim_);
        e[c] = 1;
        auto x = solve(u_, e);
        if (!x) throw std::logic_error("CosetReducer: U not invertible");
        uinv_.set_column(c, *x);
    }
}

std::vector<Int> CosetReducer::reduce(const std::vector<Int>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("CosetReducer: bad vector length");
    std::vector<Int> w = u_.apply(v);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (diag_[i] != 0) {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), w[i].get_mpz_t(), diag_[i].get_mpz_t());
            w[i] = r;
        }
    }
    return uinv_.apply(w);
}

Exponent CosetReducer::reduce(const Exponent& v) const {
    std::vector<Int> big(v.begin(), v.end());
    std::vector<Int> red = reduce(big);
    Exponent out(red.size());
    for (std::size_t i = 0; i < red.size(); ++i) {
        if (!red[i].fits_slong_p()) throw std::overflow_error("CosetReducer: exponent overflow");
        out[i] = red[i].get_si();
    }
    return out;
}

GroupRingElement reduce_mod_lattice(const GroupRingElement& e, const CosetReducer& red) {
    GroupRingElement out(e.base(), e.lattice_rank());
    for (const auto& [exp, c] : e.terms()) out.add_term(red.reduce(exp), c);
    return out;
}

// ---- SymbolicUnitGroup ----

std::string to_string(TorsionOrientation o) {
    return o == TorsionOrientation::Printed ? "xi^n = beta_i1^-1 * beta_i2"
                                            : "xi^n = beta_i2^-1 * beta_i1";
}

SymbolicUnitGroup::SymbolicUnitGroup(std::size_t n_, std::size_t charts_, bool with_torsion)
    : n(n_), charts(charts_), with_torsion_relation(with_torsion) {
    if (n < 1) throw std::invalid_argument("SymbolicUnitGroup: n must be >= 1");
    if (charts < 2) throw std::invalid_argument("SymbolicUnitGroup: need at least two charts");
}

std::size_t SymbolicUnitGroup::symbol_count() const {
    return charts + charts * (charts - 1) / 2;
}

std::size_t SymbolicUnitGroup::beta_index(std::size_t i) const {
    if (i < 1 || i > charts) throw std::out_of_range("beta_index");
    return i - 1;
}

std::size_t SymbolicUnitGroup::xi_index(std::size_t i, std::size_t j) const {
    if (!(1 <= i && i < j && j <= charts)) throw std::out_of_range("xi_index");
    // pairs (1,2),(1,3),...,(1,c),(2,3),... in lexicographic order
    std::size_t offset = 0;
    for (std::size_t a = 1; a < i; ++a) offset += charts - a;
    return charts + offset + (j - i - 1);
}

std::vector<std::string> SymbolicUnitGroup::symbol_names() const {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= charts; ++i) names.push_back("b_" + std::to_string(i));
    for (std::size_t i = 1; i <= charts; ++i)
        for (std::size_t j = i + 1; j <= charts; ++j)
            names.push_back("xi_" + std::to_string(i) + "_" + std::to_string(j));
    return names;
}

std::vector<std::pair<std::size_t, std::size_t>> SymbolicUnitGroup::overlaps() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 1; i <= charts; ++i)
        for (std::size_t j = i + 1; j <= charts; ++j) out.emplace_back(i, j);
    return out;
}

IntMatrix SymbolicUnitGroup::cocycle_relation_rows() const {
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 1; i <= charts; ++i)
        for (std::size_t j = i + 1; j <= charts; ++j)
            for (std::size_t k = j + 1; k <= charts; ++k) {
                std::vector<Int> r(symbol_count());
                r[xi_index(i, j)] += 1;
                r[xi_index(j, k)] += 1;
                r[xi_index(i, k)] -= 1;
                rows.push_back(std::move(r));
            }
    IntMatrix m(rows.size(), symbol_count());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < symbol_count(); ++b) m(a, b) = rows[a][b];
    return m;
}

IntMatrix SymbolicUnitGroup::relation_rows(TorsionOrientation o) const {
    IntMatrix cocycle = cocycle_relation_rows();
    if (!with_torsion_relation) return cocycle;
    auto ovl = overlaps();
    IntMatrix m(cocycle.rows() + ovl.size(), symbol_count());
    for (std::size_t a = 0; a < cocycle.rows(); ++a)
        for (std::size_t b = 0; b < symbol_count(); ++b) m(a, b) = cocycle(a, b);
    for (std::size_t t = 0; t < ovl.size(); ++t) {
        auto [i, j] = ovl[t];
        std::size_t row = cocycle.rows() + t;
        m(row, xi_index(i, j)) = static_cast<long>(n);
        if (o == TorsionOrientation::Printed) {
            // n*xi = beta_j - beta_i
            m(row, beta_index(j)) = -1;
            m(row, beta_index(i)) = 1;
        } else {
            // n*xi = beta_i - beta_j
            m(row, beta_index(i)) = -1;
            m(row, beta_index(j)) = 1;
        }
    }
    return m;
}

IntMatrix SymbolicUnitGroup::relation_lattice(TorsionOrientation o) const {
    return relation_rows(o).transpose();
}

FgAbGroup SymbolicUnitGroup::invariants(TorsionOrientation o) const {
    return group_invariants(symbol_count(), relation_rows(o));
}

// ---- gluing data ----

GluingData build_gluing(std::size_t n, std::size_t charts, bool with_torsion_relation) {
    if (n < 2) throw std::invalid_argument("build_gluing: n must be >= 2");
    SymbolicUnitGroup group(n, charts, with_torsion_relation);
    BaseRing z = BaseRing::integers();
    std::size_t s = group.symbol_count();

    GluingData data{group, z, {}, {}, {}};
    data.basis.push_back("1");
    for (std::size_t l = 1; l < n; ++l)
        data.basis.push_back(l == 1 ? "s" : "s^" + std::to_string(l));
    for (std::size_t i = 1; i <= charts; ++i) {
        GroupRingMatrix m(z, s, n);
        for (std::size_t l = 1; l < n; ++l)
            m(l, l - 1) = GroupRingElement::from_int(z, s, 1);
        Exponent beta(s, 0);
        beta[group.beta_index(i)] = 1;
        m(0, n - 1) = GroupRingElement::monomial(z, s, z.one(), beta);
        data.companion.push_back(std::move(m));
    }
    for (auto [i, j] : group.overlaps()) {
        GroupRingMatrix d(z, s, n);
        Exponent xi(s, 0);
        xi[group.xi_index(i, j)] = 1;
        for (std::size_t l = 0; l < n; ++l) {
            Exponent e(s, 0);
            e[group.xi_index(i, j)] = static_cast<long>(l);
            d(l, l) = GroupRingElement::monomial(z, s, z.one(), e);
        }
        data.transition.emplace(std::make_pair(i, j), std::move(d));
    }
    return data;
}

namespace {

bool equal_mod(const GroupRingMatrix& a, const GroupRingMatrix& b, const CosetReducer& red) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (reduce_mod_lattice(a(i, j), red) != reduce_mod_lattice(b(i, j), red)) return false;
    return true;
}

GroupRingElement xi_monomial(const GluingData& data, std::size_t i, std::size_t j) {
    std::size_t s = data.group.symbol_count();
    Exponent e(s, 0);
    e[data.group.xi_index(i, j)] = 1;
    return GroupRingElement::monomial(data.base, s, data.base.one(), e);
}

}  // namespace

GluingCheck verify_gluing_identity(const GluingData& data) {
    GluingCheck out;
    CosetReducer printed(data.group.relation_lattice(TorsionOrientation::Printed));
    CosetReducer reversed(data.group.relation_lattice(TorsionOrientation::Reversed));

    bool all_printed = true, all_reversed = true;
    for (auto [i, j] : data.group.overlaps()) {
        const GroupRingMatrix& d = data.d(i, j);
        GroupRingMatrix lhs = d * data.m(i);
        GroupRingMatrix rhs = (data.m(j) * d).scale(xi_monomial(data, i, j));
        OverlapCheck chk;
        chk.i = i;
        chk.j = j;
        chk.printed_holds = equal_mod(lhs, rhs, printed);
        chk.reversed_holds = equal_mod(lhs, rhs, reversed);
        if (!chk.printed_holds || !chk.reversed_holds) chk.discrepancy = lhs - rhs;
        all_printed = all_printed && chk.printed_holds;
        all_reversed = all_reversed && chk.reversed_holds;
        out.overlaps.push_back(std::move(chk));
    }
    // The identity must pin down exactly one orientation.
    if (all_printed == all_reversed) {
        out.holds = false;
        return out;
    }
    out.holds = true;
    out.orientation = all_printed ? TorsionOrientation::Printed : TorsionOrientation::Reversed;
    return out;
}

std::vector<CoboundaryClass> coboundary_class(const GluingData& data) {
    GluingCheck chk = verify_gluing_identity(data);
    if (!chk.holds)
        throw std::logic_error("coboundary_class: gluing identity does not hold under a unique "
                               "torsion orientation");
    TorsionCertificate cert = determinant_torsion_bound(data);
    std::vector<CoboundaryClass> out;
    std::size_t s = data.group.symbol_count();
    std::size_t t = 0;
    for (auto [i, j] : data.group.overlaps()) {
        CoboundaryClass c;
        c.i = i;
        c.j = j;
        c.class_exponent.assign(s, 0);
        c.class_exponent[data.group.xi_index(i, j)] = 1;
        c.n_torsion = cert.overlaps[t++].ok;
        out.push_back(std::move(c));
    }
    return out;
}

TorsionCertificate determinant_torsion_bound(const GluingData& data) {
    GluingCheck chk = verify_gluing_identity(data);
    TorsionOrientation o = chk.holds ? *chk.orientation : TorsionOrientation::Printed;
    IntMatrix lattice = data.group.relation_lattice(o);
    std::size_t s = data.group.symbol_count();

    TorsionCertificate cert;
    cert.certified = true;
    for (auto [i, j] : data.group.overlaps()) {
        // n * xi_{ij} = k * (beta_j - beta_i) + relation combo?
        IntMatrix beta_col(s, 1);
        beta_col(data.group.beta_index(j), 0) = 1;
        beta_col(data.group.beta_index(i), 0) = -1;
        IntMatrix extended = IntMatrix::hconcat(lattice, beta_col);
        std::vector<Int> target(s);
        target[data.group.xi_index(i, j)] = static_cast<long>(data.group.n);
        auto sol = solve(extended, target);
        TorsionCertificate::PerOverlap po;
        po.i = i;
        po.j = j;
        po.ok = sol.has_value();
        if (sol) po.beta_multiple = (*sol)[extended.cols() - 1];
        cert.certified = cert.certified && po.ok;
        cert.overlaps.push_back(std::move(po));
    }
    return cert;
}

bool triple_overlap_consistent(const GluingData& data) {
    CosetReducer red(data.group.cocycle_relation_rows().transpose());
    for (std::size_t i = 1; i <= data.group.charts; ++i)
        for (std::size_t j = i + 1; j <= data.group.charts; ++j)
            for (std::size_t k = j + 1; k <= data.group.charts; ++k) {
                GroupRingMatrix lhs = data.d(j, k) * data.d(i, j);
                const GroupRingMatrix& rhs = data.d(i, k);
                if (!equal_mod(lhs, rhs, red)) return false;
            }
    return true;
}

}  // namespace brq
