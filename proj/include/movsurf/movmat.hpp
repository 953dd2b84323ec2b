#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "movsurf/matrix.hpp"
#include "movsurf/surface.hpp"

namespace movsurf {

// ---------------------------------------------------------------------------
// Generic "multiply by fixed polynomials" map matrices.

struct TargetBlock {
  MonomialBasis basis;
  int block = 0;
};

// Source monomials mu contribute mu * images[t] to target block t.
struct SourceBlock {
  std::vector<Exponents> monomials;
  std::vector<SparsePoly> images;
  std::optional<Exponents> gamma;
  int block = 0;
};

ExactMatrix linear_map_matrix(Vars vars, std::span<const SourceBlock> sources,
                              std::span<const TargetBlock> targets);

// ---------------------------------------------------------------------------

// Multi-indices gamma in N^4 with |gamma| = d, lexicographic descending.
struct GammaSet {
  int d = 0;
  std::vector<Exponents> all;     // Gamma
  std::vector<Exponents> gamma0;  // gamma_4 <= 1
  std::vector<Exponents> gamma1;  // in gamma0 with gamma_1 = 0
  std::vector<Exponents> gamma4;  // in gamma0 with gamma_4 = 0
};

GammaSet gamma_sets(int d);

// n pairs (i, j), i + j <= n - 1, naming the S_{n-1} monomials s^i t^j u^(n-1-i-j)
// whose x4-columns are dropped in the triangular square submatrices.
class IndexSetI {
 public:
  IndexSetI(int n, std::vector<std::pair<int, int>> members);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& members() const { return members_; }
  bool contains(const Exponents& monomial) const;
  std::vector<Exponents> monomials() const;
  std::string to_string() const;

  friend bool operator==(const IndexSetI&, const IndexSetI&) = default;

 private:
  int n_;
  std::vector<std::pair<int, int>> members_;
};

// All n-subsets of {(i,j) : i + j <= n-1}, lexicographic on sorted member lists.
std::vector<IndexSetI> all_index_sets(int n);

ExactMatrix build_MP(const ParamSurface& s);
ExactMatrix build_MP_I(const ParamSurface& s, const IndexSetI& index_set);
ExactMatrix build_MQd(const ParamSurface& s, int d);
ExactMatrix build_MSd(const ParamSurface& s, int d, const std::optional<IndexSetI>& index_set = {});
ExactMatrix build_MTd(const ParamSurface& s, int d, const std::optional<IndexSetI>& index_set = {});

// Degree of the parameter coefficients of a moving surface. Triangular uses `first`.
struct Sigma {
  int first = 0;
  int second = 0;
};

// Coefficient matrix of sum_{gamma, mu} A_{gamma,mu} x^gamma mu over the moving
// d-surfaces of (bi)degree sigma; columns (gamma outer, mu inner).
ExactMatrix moving_space_matrix(const ParamSurface& s, int d, Sigma sigma);

// A moving d-surface: parameter monomial -> d-form in X1..X4.
struct MovingSurface {
  Vars param_vars = Vars::Tensor;
  std::map<Exponents, SparsePoly, MonomialOrder> coefficients;

  std::string to_string() const;
  // Substitutes X_i -> x_i; zero iff the moving surface follows s.
  SparsePoly substitute(const ParamSurface& s) const;
};

std::vector<MovingSurface> moving_space_basis(const ParamSurface& s, int d, Sigma sigma);

// First I (in all_index_sets order) with |MP_I| != 0. Throws Singular if none.
IndexSetI choose_index_set_I(const ParamSurface& s);

}  // namespace movsurf
