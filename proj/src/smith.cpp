#include "brq/smith.hpp"

#include <stdexcept>

namespace brq {

std::size_t SmithForm::rank() const {
    std::size_t n = std::min(S.rows(), S.cols());
    std::size_t r = 0;
    while (r < n && S(r, r) != 0) ++r;
    return r;
}

std::vector<Int> SmithForm::invariant_factors() const {
    std::vector<Int> out;
    std::size_t n = std::min(S.rows(), S.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (S(i, i) > 1) out.push_back(S(i, i));
    return out;
}

namespace {

// Least-absolute-value nonzero entry of S within the trailing block at (t,t).
bool find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            Int a = abs(s(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& s = f.S;
    IntMatrix& u = f.U;
    IntMatrix& v = f.V;
    std::size_t nmin = std::min(s.rows(), s.cols());

    for (std::size_t t = 0; t < nmin; ++t) {
        for (;;) {
            // Least-absolute-value pivot: each nonzero remainder below makes
            // the next round's pivot strictly smaller, so this terminates.
            std::size_t pi = t, pj = t;
            if (!find_pivot(s, t, pi, pj)) return f;
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
                s.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (s(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
                s.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (s(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // force the pivot to divide the rest of the block
            bool fixed = false;
            for (std::size_t i = t + 1; i < s.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < s.cols() && !fixed; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        s.add_col_multiple(t, j, 1);
                        v.add_col_multiple(t, j, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }

        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return f;
}

std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: bad vector length");
    SmithForm f = smith_normal_form(a);
    std::vector<Int> c = f.U.apply(b);
    std::size_t r = f.rank();
    std::vector<Int> z(a.cols());
    for (std::size_t i = 0; i < r; ++i) {
        if (c[i] % f.S(i, i) != 0) return std::nullopt;
        z[i] = c[i] / f.S(i, i);
    }
    for (std::size_t i = r; i < c.size(); ++i)
        if (c[i] != 0) return std::nullopt;
    return f.V.apply(z);
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    std::size_t r = f.rank();
    IntMatrix out(a.cols(), a.cols() - r);
    for (std::size_t j = r; j < a.cols(); ++j)
        out.set_column(j - r, f.V.column(j));
    return out;
}

bool lattice_contains(const IntMatrix& lattice, const std::vector<Int>& v) {
    if (lattice.cols() == 0) {
        for (const auto& e : v)
            if (e != 0) return false;
        return true;
    }
    return solve(lattice, v).has_value();
}

bool lattice_contains_all(const IntMatrix& lattice, const IntMatrix& sub) {
    for (std::size_t j = 0; j < sub.cols(); ++j)
        if (!lattice_contains(lattice, sub.column(j))) return false;
    return true;
}

}  // namespace brq
