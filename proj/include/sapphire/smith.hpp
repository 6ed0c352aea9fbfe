#pragma once

#include <optional>

#include "sapphire/int_types.hpp"

namespace sapphire {

// U * M * V = D with U, V unimodular and D diagonal, nonnegative, each
// diagonal entry dividing the next. Uinv is maintained alongside U so that
// cokernel bases come out exactly.
struct SmithResult {
  IntMatrix U, Uinv, D, V;
  long rank = 0;  // number of nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMatrix& M);

// Columns form a basis of the integer kernel lattice {v : Mv = 0}.
IntMatrix kernel_basis(const IntMatrix& M);

// One integer solution of M x = b, if any.
std::optional<IntVector> solve(const IntMatrix& M, const IntVector& b);

// Basis (columns) of the lattice spanned by the columns of M.
IntMatrix lattice_basis(const IntMatrix& M);

}  // namespace sapphire
