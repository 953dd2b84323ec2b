#pragma once

#include <array>
#include <string>

#include "movsurf/poly.hpp"

namespace movsurf {

enum class Patch { Tensor, Triangular };

const char* patch_name(Patch patch) noexcept;

// Degree data shared by a surface and by resultant inputs.
// Tensor: bidegree (m, n). Triangular: degree n (m is unused and kept equal to n).
struct Shape {
  Patch patch = Patch::Tensor;
  int m = 1;
  int n = 1;

  static Shape tensor(int m, int n) { return {Patch::Tensor, m, n}; }
  static Shape triangular(int n) { return {Patch::Triangular, n, n}; }

  Vars param_vars() const { return patch == Patch::Tensor ? Vars::Tensor : Vars::Triangular; }
  // Tensor S_{c*m-1, c*n-1}; triangular S_{c*n-1}.
  MonomialBasis scaled_space(int c) const;
  // Tensor S_{k,l}; triangular S_l (k ignored).
  MonomialBasis space(int k, int l) const;
  // Space the x_i live in.
  MonomialBasis input_space() const;

  // Throws Degree unless p is zero or of exactly this (bi)degree.
  void check_form(const SparsePoly& p, const char* what) const;

  std::string describe() const;

  friend bool operator==(const Shape&, const Shape&) = default;
};

// Rational surface (x1/x4, x2/x4, x3/x4) over P1xP1 or P2.
class ParamSurface {
 public:
  // Validates degrees; none of the x_i may be zero.
  ParamSurface(Shape shape, std::array<SparsePoly, 4> x);

  static ParamSurface tensor(int m, int n, std::array<SparsePoly, 4> x) {
    return ParamSurface(Shape::tensor(m, n), std::move(x));
  }
  static ParamSurface triangular(int n, std::array<SparsePoly, 4> x) {
    return ParamSurface(Shape::triangular(n), std::move(x));
  }

  const Shape& shape() const { return shape_; }
  Patch patch() const { return shape_.patch; }
  int m() const { return shape_.m; }
  int n() const { return shape_.n; }
  Vars param_vars() const { return shape_.param_vars(); }

  // 0-based: x(0) is x1.
  const SparsePoly& x(std::size_t i) const { return x_[i]; }
  const std::array<SparsePoly, 4>& xs() const { return x_; }

  // x^gamma = x1^g1 x2^g2 x3^g3 x4^g4.
  SparsePoly power_product(const Exponents& gamma) const;

  std::string describe() const;

 private:
  Shape shape_;
  std::array<SparsePoly, 4> x_;
};

}  // namespace movsurf
