#pragma once

#include <optional>
#include <vector>

namespace lma {

using IMat = std::vector<std::vector<long long>>;

// Smith normal form data for a square integer matrix A: unimodular L, R with
// L*A*R diagonal; only L and the diagonal are kept (enough to canonicalize
// residues modulo the column lattice of A).
struct SmithForm {
  std::vector<long long> diag;  // nonnegative elementary divisors
  IMat left;                    // unimodular row transform L
};

SmithForm smith_form(IMat a);

// Solves A x = b exactly over the integers (A square, nonsingular).
// Returns nullopt if the rational solution is not integral.
std::optional<std::vector<long long>> solve_integer(const IMat& a,
                                                    const std::vector<long long>& b);

long long det_integer(IMat a);

}  // namespace lma
