#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "movsurf/rational.hpp"

namespace movsurf {

// Ambient variable sets. Variable precedence follows declaration order.
enum class Vars : std::uint8_t {
  Tensor,      // s, u, t, v
  Triangular,  // s, t, u
  Implicit,    // X1, X2, X3, X4
  Affine,      // X1, X2, X3
  Dixon,       // s, t, a, b   (a, b are the Cayley auxiliaries)
};

std::size_t var_count(Vars vars) noexcept;
std::string_view var_name(Vars vars, std::size_t index);
std::optional<std::size_t> var_index(Vars vars, std::string_view name);

inline constexpr std::size_t kMaxVars = 4;

struct Exponents {
  std::array<std::uint16_t, kMaxVars> e{};

  Exponents() = default;
  Exponents(std::initializer_list<int> values);

  std::uint16_t& operator[](std::size_t i) { return e[i]; }
  std::uint16_t operator[](std::size_t i) const { return e[i]; }

  int degree() const;
  bool divides(const Exponents& other) const;

  friend Exponents operator+(Exponents a, const Exponents& b);
  // Requires b.divides(a).
  friend Exponents operator-(Exponents a, const Exponents& b);
  friend bool operator==(const Exponents&, const Exponents&) = default;
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

// Graded lexicographic, descending: true when a comes before b.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

std::string monomial_to_string(Vars vars, const Exponents& exps);

class SparsePoly {
 public:
  using Terms = std::map<Exponents, Rational, MonomialOrder>;

  explicit SparsePoly(Vars vars = Vars::Implicit) : vars_(vars) {}

  static SparsePoly constant(Vars vars, const Rational& c);
  static SparsePoly monomial(Vars vars, const Exponents& exps, const Rational& c = 1);
  static SparsePoly variable(Vars vars, std::size_t index);

  Vars vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Exponents& exps) const;
  // Leading term under MonomialOrder; requires !is_zero().
  const Terms::value_type& leading_term() const;

  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  // Bidegree in (s,u) and (t,v); nullopt when not bihomogeneous or zero.
  std::optional<std::pair<int, int>> bidegree() const;

  // Adds c * x^exps.
  void add_term(const Exponents& exps, const Rational& c);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const Rational& c);
  SparsePoly operator-() const;
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

  SparsePoly pow(unsigned exponent) const;
  // Multiplies every term by x^exps.
  SparsePoly shifted(const Exponents& exps) const;

  Rational eval(std::span<const Rational> point) const;

  // Canonical text: terms in MonomialOrder, "*" between factors, "^" for powers.
  std::string to_string() const;

 private:
  void check_compatible(const SparsePoly& other) const;

  Vars vars_;
  Terms terms_;
};

SparsePoly parse_poly(std::string_view text, Vars vars);

// Exponent vectors of one space in the fixed order.
class MonomialBasis {
 public:
  MonomialBasis() = default;
  MonomialBasis(Vars vars, std::vector<Exponents> monomials);

  Vars vars() const { return vars_; }
  std::size_t size() const { return monomials_.size(); }
  bool empty() const { return monomials_.empty(); }
  const Exponents& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponents>& monomials() const { return monomials_; }
  auto begin() const { return monomials_.begin(); }
  auto end() const { return monomials_.end(); }

  std::optional<std::size_t> index_of(const Exponents& exps) const;

 private:
  Vars vars_ = Vars::Tensor;
  std::vector<Exponents> monomials_;
  std::map<Exponents, std::size_t> index_;
};

// S_{k,l}: s^i u^(k-i) t^j v^(l-j). Empty when k < 0 or l < 0.
MonomialBasis bidegree_basis(int k, int l);
// S_l in (s,t,u). Empty when l < 0.
MonomialBasis ternary_basis(int l);
// All exponent vectors of total degree `degree` in the first `nvars` variables of `vars`.
MonomialBasis homogeneous_basis(Vars vars, int degree);

// Multiplies each term of P (Affine) by X4^(target_degree - term degree).
SparsePoly homogenize(const SparsePoly& p, int target_degree);
// Substitutes X4 = 1 and returns an Affine polynomial.
SparsePoly dehomogenize(const SparsePoly& p);

// Integer content removed, leading coefficient positive. Throws on zero.
SparsePoly primitive_normal_form(const SparsePoly& p);

// Re-interprets a polynomial in another variable set of at least the same size
// (trailing variables must be absent when shrinking).
SparsePoly change_vars(const SparsePoly& p, Vars target);

}  // namespace movsurf
