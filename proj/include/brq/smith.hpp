#pragma once

#include <optional>

#include "brq/int_matrix.hpp"

namespace brq {

/// Smith normal form U*M*V = S with U, V unimodular, S diagonal,
/// diagonal entries nonnegative, each dividing the next.
struct SmithForm {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;

    std::size_t rank() const;
    /// Diagonal entries > 1, in divisibility order.
    std::vector<Int> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Some x with A*x = b, if any (x over the integers).
std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b);

/// Basis of the integer kernel {x : A*x = 0}, as matrix columns.
IntMatrix kernel_basis(const IntMatrix& a);

/// Does v lie in the column span (over Z) of `lattice`?
bool lattice_contains(const IntMatrix& lattice, const std::vector<Int>& v);

/// Does every column of `sub` lie in the column span of `lattice`?
bool lattice_contains_all(const IntMatrix& lattice, const IntMatrix& sub);

}  // namespace brq
