#include "movsurf/surface.hpp"

#include "movsurf/errors.hpp"

namespace movsurf {

const char* patch_name(Patch patch) noexcept {
  return patch == Patch::Tensor ? "tensor" : "triangular";
}

MonomialBasis Shape::scaled_space(int c) const {
  if (patch == Patch::Tensor) return bidegree_basis(c * m - 1, c * n - 1);
  return ternary_basis(c * n - 1);
}

MonomialBasis Shape::space(int k, int l) const {
  if (patch == Patch::Tensor) return bidegree_basis(k, l);
  return ternary_basis(l);
}

MonomialBasis Shape::input_space() const {
  if (patch == Patch::Tensor) return bidegree_basis(m, n);
  return ternary_basis(n);
}

void Shape::check_form(const SparsePoly& p, const char* what) const {
  if (p.vars() != param_vars()) {
    throw Error(ErrorCode::Degree, std::string(what) + " uses the wrong variable set");
  }
  if (p.is_zero()) return;
  if (patch == Patch::Tensor) {
    auto bd = p.bidegree();
    if (!bd || bd->first != m || bd->second != n) {
      throw Error(ErrorCode::Degree, std::string(what) + " = " + p.to_string() +
                                         " is not bihomogeneous of bidegree (" +
                                         std::to_string(m) + "," + std::to_string(n) + ")");
    }
  } else if (!p.is_homogeneous() || p.total_degree() != n) {
    throw Error(ErrorCode::Degree, std::string(what) + " = " + p.to_string() +
                                       " is not homogeneous of degree " + std::to_string(n));
  }
}

std::string Shape::describe() const {
  if (patch == Patch::Tensor) {
    return "tensor (m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
  }
  return "triangular n=" + std::to_string(n);
}

ParamSurface::ParamSurface(Shape shape, std::array<SparsePoly, 4> x)
    : shape_(shape), x_(std::move(x)) {
  if (shape_.n < 1 || (shape_.patch == Patch::Tensor && shape_.m < 1)) {
    throw Error(ErrorCode::Degree, "degrees must be positive");
  }
  if (shape_.patch == Patch::Triangular) shape_.m = shape_.n;
  static constexpr const char* kNames[] = {"x1", "x2", "x3", "x4"};
  for (std::size_t i = 0; i < 4; ++i) {
    if (x_[i].is_zero()) throw Error(ErrorCode::Degree, std::string(kNames[i]) + " is identically zero");
    shape_.check_form(x_[i], kNames[i]);
  }
}

SparsePoly ParamSurface::power_product(const Exponents& gamma) const {
  SparsePoly out = SparsePoly::constant(param_vars(), 1);
  for (std::size_t i = 0; i < 4; ++i) {
    if (gamma[i] > 0) out = out * x_[i].pow(gamma[i]);
  }
  return out;
}

std::string ParamSurface::describe() const {
  std::string out = shape_.describe();
  for (std::size_t i = 0; i < 4; ++i) {
    out += "; x" + std::to_string(i + 1) + "=" + x_[i].to_string();
  }
  return out;
}

}  // namespace movsurf
