#pragma once

#include <optional>

#include "eqehr/matrix.hpp"

namespace eqehr {

struct HnfResult {
  IntMatrix H;  // row echelon, positive pivots, entries above a pivot reduced into [0, pivot)
  IntMatrix U;  // unimodular with U*m = H
};

HnfResult hnf(const IntMatrix& m);

struct SnfResult {
  std::vector<Int> diag;  // d_1 | d_2 | ... | d_k, k = min(rows, cols), trailing zeros allowed
  IntMatrix U, V;         // unimodular with U*m*V = diag
};

SnfResult snf(const IntMatrix& m);

// Basis (rows) of the integer kernel { x in Z^cols : A x = 0 }. The result is
// a saturated lattice of rank cols - rank(A).
IntMatrix integer_kernel(const IntMatrix& A);

// Saturation of the row span: { x in Z^cols : x in Q-span(rows) }, as an
// HNF-reduced basis.
IntMatrix saturate_rows(const IntMatrix& m);

// One integer solution of A x = b, or nullopt when none exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& A, const std::vector<Int>& b);

}  // namespace eqehr
