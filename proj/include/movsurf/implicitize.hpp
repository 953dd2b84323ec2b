#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "movsurf/matrix.hpp"
#include "movsurf/movmat.hpp"
#include "movsurf/surface.hpp"

namespace movsurf {

// Kernel basis of MQ^2 with the identity tail on the x4^2 rows.
// Rows of `t` follow the MQ^2 columns (gamma outer, monomial inner).
// Triangular surfaces also carry the plane kernel T' of MP, rows following MP columns.
struct KernelTableau {
  Shape shape;
  std::optional<IndexSetI> index_set;
  ExactMatrix t;
  ExactMatrix ordered;          // rows regrouped per parameter monomial, quadric order below
  ExactMatrix planes;           // T' (triangular only)
  ExactMatrix ordered_planes;   // T' regrouped per parameter monomial
};

// x1^2, x2^2, x3^2, x4^2, x1x2, x1x3, x1x4, x2x3, x2x4, x3x4
const std::vector<Exponents>& quadric_row_order();

// Throws Singular when MS^2 (resp. MS^2_I) is singular. Triangular surfaces
// use `index_set` or, when absent, choose_index_set_I.
KernelTableau kernel_tableau(const ParamSurface& s, std::optional<IndexSetI> index_set = {});

// Square matrix of forms: rows are parameter monomials, columns the kernel
// vectors (triangular: quadric columns, then plane columns).
PolyMatrix build_Ttilde(const KernelTableau& k);

// M * ordered with M the block upper-triangular matrix of C rows (tensor only).
PolyMatrix build_MT_product(const KernelTableau& k);
// [M * ordered, M' * ordered_planes] (triangular only).
PolyMatrix build_combined_product(const KernelTableau& k);
// Dispatches on the patch type.
PolyMatrix build_product(const KernelTableau& k);

// Total degree of |Ttilde|: 2mn (tensor) or n^2 (triangular).
int tableau_degree(const Shape& shape);

enum class ImplicitMethod { MovingQuadrics, DirectResultant };
const char* method_name(ImplicitMethod method) noexcept;

// F = c * G^power with G primitive.
struct PowerDecomposition {
  SparsePoly root;
  unsigned power = 1;
};

// Largest k with F / lc(F) an exact k-th power over Q.
PowerDecomposition perfect_power(const SparsePoly& f);

// Res(x1,x2,x3) * |M T| against P^h.
struct MainIdentityCheck {
  Rational res;
  SparsePoly lhs;
  SparsePoly rhs;
  int sign = 0;  // +1 or -1 when lhs = sign * rhs, 0 otherwise
  bool holds() const { return sign != 0; }
};

struct ImplicitResult {
  SparsePoly f{Vars::Implicit};  // primitive normal form
  ImplicitMethod method = ImplicitMethod::MovingQuadrics;
  PowerDecomposition decomposition;
  std::optional<IndexSetI> index_set;
  std::optional<MainIdentityCheck> identity;  // moving quadrics only
  int affine_degree = -1;                     // total degree of P (direct route)
};

struct ImplicitOptions {
  bool check_identity = true;
};

ImplicitResult implicit_moving_quadrics(const ParamSurface& s, const ImplicitOptions& options = {});
// Throws BasePoints when P vanishes identically.
ImplicitResult implicit_direct_resultant(const ParamSurface& s);

MainIdentityCheck check_main_identity(const ParamSurface& s, const KernelTableau& k);

struct SurfaceValidation {
  int trials = 0;
  int zeros = 0;
  bool all_zero() const { return zeros == trials; }
};

// Evaluates F at the images of `trials` random rational parameter points.
// Throws InvalidArgument for the zero polynomial.
SurfaceValidation validate_on_surface(const SparsePoly& f, const ParamSurface& s, int trials,
                                      std::uint64_t seed);

}  // namespace movsurf
