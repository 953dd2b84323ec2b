#pragma once

#include <span>
#include <vector>

#include "movsurf/matrix.hpp"

namespace movsurf {

// Fraction-free (Bareiss) determinant after clearing row denominators.
// The 0x0 determinant is 1.
Rational det(const ExactMatrix& a);

std::size_t rank(const ExactMatrix& a);

// Reduced row echelon form; pivot columns are written to `pivots` when given.
ExactMatrix rref(const ExactMatrix& a, std::vector<std::size_t>* pivots = nullptr);

// Right kernel basis. One vector per free column f, with entry 1 at f, 0 at the
// other free columns (pivot columns carry the reduced-echelon values).
std::vector<std::vector<Rational>> nullspace(const ExactMatrix& a);

// Submatrix in the given index order. Throws on out-of-range or duplicates.
ExactMatrix minor(const ExactMatrix& a, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols);
ExactMatrix select_columns(const ExactMatrix& a, std::span<const std::size_t> cols);
ExactMatrix select_rows(const ExactMatrix& a, std::span<const std::size_t> rows);
ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b);

// A^{-1} B for square nonsingular A; throws Singular otherwise.
ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b);

// Determinant polynomial by evaluation/interpolation on a total-degree lattice.
// Throws Interpolation when held-out points disagree (bound too small).
SparsePoly poly_det(const PolyMatrix& a, int degree_bound);

}  // namespace movsurf
