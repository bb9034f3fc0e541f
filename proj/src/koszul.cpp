#include "brq/koszul.hpp"

#include <stdexcept>

namespace brq {

ZrModule::ZrModule(GroupPresentation group, std::vector<IntMatrix> action_matrices)
    : underlying(std::move(group)), actions(std::move(action_matrices)) {
    const std::size_t n = underlying.generators;
    const IntMatrix lattice = underlying.relation_lattice();
    for (const auto& t : actions) {
        if (t.rows() != n || t.cols() != n)
            throw std::invalid_argument("ZrModule: action matrix has wrong shape");
        if (!lattice_contains_all(lattice, t * lattice))
            throw std::invalid_argument("ZrModule: action does not preserve relations");
        // invertible on the quotient: cokernel of the induced endomorphism is 0
        IntMatrix rel = IntMatrix::hconcat(t, lattice).transpose();
        if (!group_invariants(n, rel).is_trivial())
            throw std::invalid_argument("ZrModule: action is not invertible on the group");
    }
    for (std::size_t i = 0; i < actions.size(); ++i)
        for (std::size_t j = i + 1; j < actions.size(); ++j) {
            IntMatrix comm = actions[i] * actions[j] - actions[j] * actions[i];
            if (!lattice_contains_all(lattice, comm))
                throw std::invalid_argument("ZrModule: actions do not commute on the group");
        }
}

ZrModule ZrModule::trivial(const FgAbGroup& m, std::size_t r) {
    GroupPresentation p = GroupPresentation::of(m);
    std::vector<IntMatrix> acts(r, IntMatrix::identity(p.generators));
    return ZrModule(std::move(p), std::move(acts));
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t r, std::size_t p) {
    std::vector<std::vector<std::size_t>> out;
    if (p > r) return out;
    std::vector<std::size_t> cur(p);
    for (std::size_t i = 0; i < p; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        // next combination in lexicographic order
        std::size_t k = p;
        while (k > 0 && cur[k - 1] == r - p + (k - 1)) --k;
        if (k == 0) break;
        ++cur[k - 1];
        for (std::size_t i = k; i < p; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

CochainComplex koszul_cochain_complex(const ZrModule& m) {
    const std::size_t r = m.rank();
    const std::size_t n = m.underlying.generators;

    std::vector<GroupPresentation> terms;
    std::vector<std::vector<std::vector<std::size_t>>> index;  // per degree, list of subsets
    for (std::size_t p = 0; p <= r; ++p) {
        auto subs = subsets_of_size(r, p);
        terms.push_back(GroupPresentation::direct_sum(
            std::vector<GroupPresentation>(subs.size(), m.underlying)));
        index.push_back(std::move(subs));
    }

    std::vector<GroupHom> diffs;
    for (std::size_t p = 0; p < r; ++p) {
        const auto& src = index[p];
        const auto& tgt = index[p + 1];
        IntMatrix d(tgt.size() * n, src.size() * n);
        for (std::size_t ti = 0; ti < tgt.size(); ++ti) {
            const auto& t = tgt[ti];
            for (std::size_t k = 0; k <= p; ++k) {
                // remove the k-th member of t to get the source subset
                std::vector<std::size_t> s;
                s.reserve(p);
                for (std::size_t q = 0; q <= p; ++q)
                    if (q != k) s.push_back(t[q]);
                std::size_t si = 0;
                while (si < src.size() && src[si] != s) ++si;
                // component (-1)^{k+1} (T_{t[k]} - I)
                const IntMatrix& act = m.actions[t[k]];
                long sign = (k % 2 == 0) ? -1 : 1;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) {
                        Int v = act(a, b) - (a == b ? 1 : 0);
                        d(ti * n + a, si * n + b) += sign * v;
                    }
            }
        }
        diffs.emplace_back(terms[p], terms[p + 1], std::move(d));
    }
    return CochainComplex(std::move(terms), std::move(diffs));
}

std::vector<FgAbGroup> group_cohomology(const ZrModule& m) {
    return koszul_cochain_complex(m).all_cohomology();
}

}  // namespace brq
