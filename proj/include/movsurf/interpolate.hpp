#pragma once

#include <functional>
#include <span>
#include <vector>

#include "movsurf/poly.hpp"

namespace movsurf {

using PointFunction = std::function<Rational(std::span<const Rational>)>;

// Lattice node value for integer index k (nodes 1, 2, 3, ...).
inline Rational lattice_node(int k) { return Rational(k + 1); }

// Points {a : a_i >= 0, |a| <= degree} of the principal lattice in `nvars`
// variables, as index tuples, in a deterministic order.
std::vector<std::vector<int>> lattice_points(std::size_t nvars, int degree);

// The unique polynomial in `vars` of total degree <= degree agreeing with f on
// the principal lattice (multivariate Newton form, one variable at a time).
SparsePoly interpolate_total_degree(Vars vars, int degree, const PointFunction& f);

// Deterministic off-lattice rational points used to confirm degree bounds.
std::vector<std::vector<Rational>> held_out_points(std::size_t nvars, int degree, int count);

// Univariate: value at `at` of the polynomial through (nodes[i], values[i]).
Rational lagrange_at(std::span<const Rational> nodes, std::span<const Rational> values,
                     const Rational& at);

}  // namespace movsurf
