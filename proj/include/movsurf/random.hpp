#pragma once

#include <cstdint>
#include <random>

#include "movsurf/resultant.hpp"
#include "movsurf/surface.hpp"

namespace movsurf {

// Reproducible instance stream. Coefficients are uniform integers in [-9, 9].
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  int coefficient() { return static_cast<int>(engine_() % 19) - 9; }
  std::uint64_t next() { return engine_(); }

  // Random form spanning `basis`; never the zero polynomial.
  SparsePoly form(const MonomialBasis& basis);
  Triple triple(const Shape& shape);
  ParamSurface surface(const Shape& shape);
  // Rational in [-9, 9] with denominator in 1..5.
  Rational rational();

 private:
  std::mt19937_64 engine_;
};

}  // namespace movsurf
