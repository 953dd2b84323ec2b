#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "movsurf/matrix.hpp"
#include "movsurf/surface.hpp"

namespace movsurf {

using Triple = std::array<SparsePoly, 3>;

// Matrices of the three-term Koszul complex built from f1, f2, f3^(d-1):
//   A = S^2 + S_(d-1) --psi0--> B = S_d^2 + S_2 --psi1--> C = S_(d+1)
// where S_c is S_{cm-1,cn-1} (tensor) or S_{cn-1} (triangular).
struct KoszulPair {
  ExactMatrix d0;  // dim B x dim A
  ExactMatrix d1;  // dim C x dim B
  int d = 2;
  Shape shape;
};

KoszulPair koszul_matrices(const Triple& f, int d, const Shape& shape);

// One choice of complementary minors. `columns` (of D1) and `rows` (of D0)
// partition 0..dim B - 1; both ascending.
struct ComplexMinor {
  std::vector<std::size_t> columns;
  std::vector<std::size_t> rows;
  Rational m1;  // |D1 restricted to columns|
  Rational m0;  // |D0 restricted to rows|
  int sign = 1; // (-1)^sigma for the permutation (columns, rows)
};

ComplexMinor complex_minor(const KoszulPair& k, std::span<const std::size_t> columns);

// Parity sign of the permutation listing `first` and then the complement, both ascending.
int split_permutation_sign(std::span<const std::size_t> first, std::size_t total);

// First column set of D1, in colexicographic order, whose complementary D0
// minor is nonzero. Throws ResultantVanishes when D0 is not injective.
std::vector<std::size_t> first_valid_index_set(const KoszulPair& k);

// Up to `count` distinct valid column sets (the first one above comes first).
std::vector<std::vector<std::size_t>> valid_index_sets(const KoszulPair& k, std::size_t count);

// sign * m1 / m0 for the given (or first valid) column set.
// Throws ResultantVanishes when the complex is not exact.
Rational complex_determinant(const KoszulPair& k);
Rational complex_determinant(const KoszulPair& k, std::span<const std::size_t> columns);

// Res_{m,n} and Res_n as the d = 2 complex determinant; 0 when they vanish.
Rational res_bihom(const Triple& f, int m, int n);
Rational res_tri(const Triple& f, int n);
Rational resultant(const Triple& f, const Shape& shape);

// Cayley-Dixon matrix in affine s, t: rows s^i t^j (i<m, j<2n), columns a^k b^l (k<2m, l<n).
ExactMatrix dixon_matrix(const Triple& f, int m, int n);
Rational dixon_res(const Triple& f, int m, int n);

struct MacaulayInfo {
  int permutation = 0;     // index into the 6 variable role orders
  bool perturbed = false;  // true when the lambda-perturbation fallback was used
  std::size_t size = 0;    // Macaulay matrix size
};

// det M / det M' in critical degree 3n-2.
Rational macaulay_res(const Triple& f, int n, MacaulayInfo* info = nullptr);

struct PStats {
  int degree_bound = 0;
  std::size_t evaluations = 0;
};

// P(X1,X2,X3) = Res(x1 - X1 x4, x2 - X2 x4, x3 - X3 x4), as an Affine polynomial.
// The zero polynomial when the surface has base points.
SparsePoly specialized_resultant_P(const ParamSurface& s, PStats* stats = nullptr);

}  // namespace movsurf
