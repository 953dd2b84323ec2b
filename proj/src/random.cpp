#include "movsurf/random.hpp"

namespace movsurf {

SparsePoly InstanceRng::form(const MonomialBasis& basis) {
  while (true) {
    SparsePoly p(basis.vars());
    for (const auto& mono : basis) p.add_term(mono, coefficient());
    if (!p.is_zero()) return p;
  }
}

Triple InstanceRng::triple(const Shape& shape) {
  MonomialBasis basis = shape.input_space();
  return {form(basis), form(basis), form(basis)};
}

ParamSurface InstanceRng::surface(const Shape& shape) {
  MonomialBasis basis = shape.input_space();
  return ParamSurface(shape, {form(basis), form(basis), form(basis), form(basis)});
}

Rational InstanceRng::rational() {
  int num = coefficient();
  int den = static_cast<int>(engine_() % 5) + 1;
  return make_rational(num, den);
}

}  // namespace movsurf
