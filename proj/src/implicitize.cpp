#include "movsurf/implicitize.hpp"

#include <map>

#include "movsurf/errors.hpp"
#include "movsurf/linalg.hpp"
#include "movsurf/random.hpp"
#include "movsurf/resultant.hpp"

namespace movsurf {

namespace {

enum class Role { Square, Zero, Free };

// Kernel matrix of `a` with identity on the Free columns, zero on the Zero
// columns, and -A_sq^{-1} A_free on the Square columns. Rows follow a's columns.
ExactMatrix structured_kernel(const ExactMatrix& a, const std::vector<Role>& roles, const char* what) {
  std::vector<std::size_t> square, free;
  for (std::size_t c = 0; c < roles.size(); ++c) {
    if (roles[c] == Role::Square) square.push_back(c);
    if (roles[c] == Role::Free) free.push_back(c);
  }
  if (square.size() != a.rows()) throw Error(ErrorCode::Internal, std::string(what) + " is not square");
  ExactMatrix sq = select_columns(a, square);
  ExactMatrix sol;
  try {
    sol = solve(sq, select_columns(a, free));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    throw Error(ErrorCode::Singular, std::string(what) +
                                         " is singular; the moving quadric method does not apply "
                                         "(use the direct resultant route)");
  }
  ExactMatrix t(a.cols(), free.size());
  for (std::size_t i = 0; i < square.size(); ++i) {
    for (std::size_t j = 0; j < free.size(); ++j) t(square[i], j) = -sol(i, j);
  }
  std::vector<Label> col_labels;
  for (std::size_t j = 0; j < free.size(); ++j) {
    t(free[j], j) = 1;
    col_labels.push_back(a.col_labels()[free[j]]);
  }
  t.set_labels(a.col_labels(), std::move(col_labels));
  return t;
}

// Rows of `t` regrouped: parameter monomial blocks in basis order, `order` inside each block.
ExactMatrix regroup(const ExactMatrix& t, const MonomialBasis& basis, const std::vector<Exponents>& order) {
  std::map<std::pair<Exponents, Exponents>, std::size_t> where;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const Label& l = t.row_labels()[r];
    where.emplace(std::pair{*l.gamma, l.monomial}, r);
  }
  std::vector<std::size_t> rows;
  for (const auto& mu : basis) {
    for (const auto& gamma : order) rows.push_back(where.at({gamma, mu}));
  }
  return select_rows(t, rows);
}

const std::vector<Exponents>& plane_row_order() {
  static const std::vector<Exponents> order{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  return order;
}

// Adds the forms sum_gamma t(row, c) X^gamma of each kernel column into rows of `out`.
void add_form_columns(PolyMatrix& out, const ExactMatrix& t, const MonomialBasis& basis,
                      std::size_t col_offset) {
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const Label& l = t.row_labels()[r];
    std::size_t row = *basis.index_of(l.monomial);
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (t(r, c) != 0) out(row, col_offset + c).add_term(*l.gamma, t(r, c));
    }
  }
}

// Block upper-triangular matrix with the row vector `c` repeated in every block at or right of the diagonal.
PolyMatrix block_triangular(std::size_t blocks, const std::vector<Exponents>& c) {
  PolyMatrix m(blocks, blocks * c.size(), Vars::Implicit);
  for (std::size_t k = 0; k < blocks; ++k) {
    for (std::size_t l = k; l < blocks; ++l) {
      for (std::size_t g = 0; g < c.size(); ++g) {
        m(k, l * c.size() + g) = SparsePoly::monomial(Vars::Implicit, c[g]);
      }
    }
  }
  return m;
}

PolyMatrix multiply(const PolyMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::Internal, "dimension mismatch in product");
  PolyMatrix out(a.rows(), b.cols(), a.vars());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b(k, c) != 0) out(r, c) += a(r, k) * b(k, c);
      }
    }
  }
  return out;
}

std::optional<SparsePoly> kth_root(const SparsePoly& monic, unsigned k) {
  const auto& [lead, lc] = monic.leading_term();
  Exponents e1;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (lead[i] % k != 0) return std::nullopt;
    e1[i] = static_cast<std::uint16_t>(lead[i] / k);
  }
  Exponents shift;
  for (std::size_t i = 0; i < kMaxVars; ++i) shift[i] = static_cast<std::uint16_t>(e1[i] * (k - 1));
  SparsePoly g = SparsePoly::monomial(monic.vars(), e1);
  std::size_t cap = homogeneous_basis(Vars::Implicit, e1.degree()).size() + 1;
  MonomialOrder before;
  for (std::size_t step = 0; step <= cap * cap; ++step) {
    SparsePoly r = monic - g.pow(k);
    if (r.is_zero()) return g;
    const auto& [er, cr] = r.leading_term();
    if (!shift.divides(er)) return std::nullopt;
    Exponents next = er - shift;
    if (!before(g.terms().rbegin()->first, next)) return std::nullopt;
    g.add_term(next, cr / Rational(k));
  }
  return std::nullopt;
}

}  // namespace

const std::vector<Exponents>& quadric_row_order() {
  static const std::vector<Exponents> order{
      {2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}, {1, 1, 0, 0},
      {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1},
  };
  return order;
}

KernelTableau kernel_tableau(const ParamSurface& s, std::optional<IndexSetI> index_set) {
  KernelTableau k;
  k.shape = s.shape();
  const Exponents x4{0, 0, 0, 1};
  const Exponents x4sq{0, 0, 0, 2};
  MonomialBasis basis = s.shape().scaled_space(1);

  if (s.patch() == Patch::Triangular) {
    if (!index_set) index_set = choose_index_set_I(s);
    if (index_set->n() != s.n()) throw Error(ErrorCode::InvalidArgument, "index set built for another degree");
    k.index_set = index_set;
  } else if (index_set) {
    throw Error(ErrorCode::InvalidArgument, "index sets apply to triangular surfaces only");
  }

  ExactMatrix mq = build_MQd(s, 2);
  std::vector<Role> roles;
  for (const auto& l : mq.col_labels()) {
    bool in_i = k.index_set && k.index_set->contains(l.monomial);
    if (in_i && (*l.gamma)[3] >= 1) roles.push_back(Role::Zero);
    else if (*l.gamma == x4sq) roles.push_back(Role::Free);
    else roles.push_back(Role::Square);
  }
  k.t = structured_kernel(mq, roles, k.index_set ? "MS^2_I" : "MS^2");
  k.ordered = regroup(k.t, basis, quadric_row_order());

  if (k.index_set) {
    ExactMatrix mp = build_MP(s);
    std::vector<Role> plane_roles;
    for (const auto& l : mp.col_labels()) {
      plane_roles.push_back(*l.gamma == x4 && k.index_set->contains(l.monomial) ? Role::Free : Role::Square);
    }
    k.planes = structured_kernel(mp, plane_roles, "MP_I");
    k.ordered_planes = regroup(k.planes, basis, plane_row_order());
  }
  return k;
}

PolyMatrix build_Ttilde(const KernelTableau& k) {
  MonomialBasis basis = k.shape.scaled_space(1);
  std::size_t cols = k.t.cols() + k.planes.cols();
  if (cols != basis.size()) throw Error(ErrorCode::Internal, "kernel tableau is not square");
  PolyMatrix out(basis.size(), cols, Vars::Implicit);
  add_form_columns(out, k.t, basis, 0);
  if (k.planes.cols() > 0) add_form_columns(out, k.planes, basis, k.t.cols());
  return out;
}

PolyMatrix build_MT_product(const KernelTableau& k) {
  if (k.shape.patch != Patch::Tensor) {
    throw Error(ErrorCode::InvalidArgument, "triangular tableaux use the combined product");
  }
  std::size_t blocks = k.shape.scaled_space(1).size();
  return multiply(block_triangular(blocks, quadric_row_order()), k.ordered);
}

PolyMatrix build_combined_product(const KernelTableau& k) {
  if (k.shape.patch != Patch::Triangular) {
    throw Error(ErrorCode::InvalidArgument, "the combined product needs a triangular tableau");
  }
  std::size_t blocks = k.shape.scaled_space(1).size();
  PolyMatrix quad = multiply(block_triangular(blocks, quadric_row_order()), k.ordered);
  PolyMatrix lin = multiply(block_triangular(blocks, plane_row_order()), k.ordered_planes);
  PolyMatrix out(blocks, quad.cols() + lin.cols(), Vars::Implicit);
  for (std::size_t r = 0; r < blocks; ++r) {
    for (std::size_t c = 0; c < quad.cols(); ++c) out(r, c) = quad(r, c);
    for (std::size_t c = 0; c < lin.cols(); ++c) out(r, quad.cols() + c) = lin(r, c);
  }
  return out;
}

PolyMatrix build_product(const KernelTableau& k) {
  return k.shape.patch == Patch::Tensor ? build_MT_product(k) : build_combined_product(k);
}

int tableau_degree(const Shape& shape) {
  return shape.patch == Patch::Tensor ? 2 * shape.m * shape.n : shape.n * shape.n;
}

const char* method_name(ImplicitMethod method) noexcept {
  return method == ImplicitMethod::MovingQuadrics ? "moving-quadrics" : "direct-resultant";
}

PowerDecomposition perfect_power(const SparsePoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no power decomposition");
  SparsePoly monic = f * (1 / f.leading_term().second);
  int deg = f.total_degree();
  for (int k = deg; k >= 2; --k) {
    if (deg % k != 0) continue;
    if (auto root = kth_root(monic, static_cast<unsigned>(k))) {
      return {primitive_normal_form(*root), static_cast<unsigned>(k)};
    }
  }
  return {primitive_normal_form(f), 1};
}

MainIdentityCheck check_main_identity(const ParamSurface& s, const KernelTableau& k) {
  MainIdentityCheck out;
  out.res = resultant({s.x(0), s.x(1), s.x(2)}, s.shape());
  int degree = tableau_degree(s.shape());
  out.lhs = poly_det(build_product(k), degree) * out.res;
  SparsePoly p = specialized_resultant_P(s);
  if (p.is_zero() || p.total_degree() > degree) {
    out.rhs = p.is_zero() ? SparsePoly(Vars::Implicit) : change_vars(p, Vars::Implicit);
    out.sign = 0;
    return out;
  }
  // Both sides have the degree of the tableau determinant.
  out.rhs = homogenize(p, degree);
  if (out.lhs == out.rhs) out.sign = 1;
  else if (out.lhs == -out.rhs) out.sign = -1;
  return out;
}

ImplicitResult implicit_moving_quadrics(const ParamSurface& s, const ImplicitOptions& options) {
  KernelTableau k = kernel_tableau(s);
  SparsePoly d = poly_det(build_Ttilde(k), tableau_degree(s.shape()));
  if (d.is_zero()) {
    throw Error(ErrorCode::Singular, "the moving quadric determinant vanishes identically");
  }
  ImplicitResult out;
  out.method = ImplicitMethod::MovingQuadrics;
  out.f = primitive_normal_form(d);
  out.decomposition = perfect_power(out.f);
  out.index_set = k.index_set;
  if (options.check_identity) out.identity = check_main_identity(s, k);
  return out;
}

ImplicitResult implicit_direct_resultant(const ParamSurface& s) {
  SparsePoly p = specialized_resultant_P(s);
  if (p.is_zero()) {
    throw Error(ErrorCode::BasePoints,
                "base points detected: the specialized resultant vanishes identically");
  }
  ImplicitResult out;
  out.method = ImplicitMethod::DirectResultant;
  out.affine_degree = p.total_degree();
  out.f = primitive_normal_form(homogenize(p, p.total_degree()));
  out.decomposition = perfect_power(out.f);
  return out;
}

SurfaceValidation validate_on_surface(const SparsePoly& f, const ParamSurface& s, int trials,
                                      std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "cannot validate the zero polynomial");
  if (f.vars() != Vars::Implicit) throw Error(ErrorCode::InvalidArgument, "expected a polynomial in X1..X4");
  InstanceRng rng(seed);
  SurfaceValidation out;
  std::size_t nv = var_count(s.param_vars());
  for (int i = 0; i < trials; ++i) {
    std::vector<Rational> param(nv);
    for (auto& x : param) x = rng.rational();
    std::vector<Rational> image(4);
    for (std::size_t j = 0; j < 4; ++j) image[j] = s.x(j).eval(param);
    ++out.trials;
    if (f.eval(image) == 0) ++out.zeros;
  }
  return out;
}

}  // namespace movsurf
