#include <doctest.h>

#include "movsurf/errors.hpp"
#include "movsurf/poly.hpp"
#include "movsurf/random.hpp"

using namespace movsurf;

namespace {

// Term-by-term evaluation that does not go through SparsePoly::eval.
Rational eval_oracle(const SparsePoly& p, const std::vector<Rational>& pt) {
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < pt.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= pt[i];
    }
    sum += term;
  }
  return sum;
}

SparsePoly random_poly(InstanceRng& rng, Vars vars, int max_degree) {
  SparsePoly p(vars);
  int terms = static_cast<int>(rng.next() % 6);
  for (int k = 0; k < terms; ++k) {
    Exponents e;
    for (std::size_t i = 0; i < var_count(vars); ++i) e[i] = static_cast<std::uint16_t>(rng.next() % (max_degree + 1));
    p.add_term(e, rng.rational());
  }
  return p;
}

}  // namespace

TEST_CASE("parse and print") {
  SparsePoly p = parse_poly("s*t + u*v", Vars::Tensor);
  CHECK(p.term_count() == 2);
  CHECK(p.coefficient(Exponents{1, 0, 1, 0}) == 1);
  CHECK(p.coefficient(Exponents{0, 1, 0, 1}) == 1);
  CHECK(p.to_string() == "s*t+u*v");
  CHECK(parse_poly("0", Vars::Triangular).is_zero());
  CHECK(parse_poly("0", Vars::Triangular).to_string() == "0");
  CHECK(parse_poly("(s+t)^2", Vars::Triangular).to_string() == "s^2+2*s*t+t^2");
  CHECK(parse_poly("-3/4*s + -(t)", Vars::Triangular).to_string() == "-3/4*s-t");
  CHECK(parse_poly("2*(X1-X4)^0", Vars::Implicit).to_string() == "2");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_poly("2st", Vars::Tensor), ParseError);
  CHECK_THROWS_AS(parse_poly("s^-1", Vars::Tensor), ParseError);
  CHECK_THROWS_AS(parse_poly("w", Vars::Tensor), ParseError);
  CHECK_THROWS_AS(parse_poly("(s+t", Vars::Tensor), ParseError);
  CHECK_THROWS_AS(parse_poly("s+", Vars::Tensor), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0", Vars::Tensor), ParseError);
  try {
    parse_poly("s + q", Vars::Tensor);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("round trip through canonical text") {
  InstanceRng rng(31);
  for (Vars vars : {Vars::Tensor, Vars::Triangular, Vars::Implicit, Vars::Affine}) {
    for (int k = 0; k < 50; ++k) {
      SparsePoly p = random_poly(rng, vars, 4);
      CHECK(parse_poly(p.to_string(), vars) == p);
    }
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  CHECK(parse_poly("s*t+u*v", Vars::Tensor).eval(std::vector<Rational>{1, 1, 1, 1}) == 2);
  CHECK(parse_poly("s*v+u*t+u*v", Vars::Tensor).eval(std::vector<Rational>{1, 1, 1, 1}) == 3);
  InstanceRng rng(32);
  for (int k = 0; k < 120; ++k) {
    SparsePoly p = random_poly(rng, Vars::Implicit, 3);
    SparsePoly q = random_poly(rng, Vars::Implicit, 3);
    std::vector<Rational> pt{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
    CHECK((p + q).eval(pt) == eval_oracle(p, pt) + eval_oracle(q, pt));
    CHECK((p * q).eval(pt) == eval_oracle(p, pt) * eval_oracle(q, pt));
  }
  CHECK_THROWS_AS(parse_poly("s", Vars::Tensor).eval(std::vector<Rational>{1}), Error);
}

TEST_CASE("monomial bases") {
  auto b11 = bidegree_basis(1, 1);
  std::vector<std::string> names;
  for (const auto& e : b11) names.push_back(monomial_to_string(Vars::Tensor, e));
  CHECK(names == std::vector<std::string>{"s*t", "s*v", "u*t", "u*v"});
  auto t1 = ternary_basis(1);
  CHECK(monomial_to_string(Vars::Triangular, t1[0]) == "s");
  CHECK(monomial_to_string(Vars::Triangular, t1[1]) == "t");
  CHECK(monomial_to_string(Vars::Triangular, t1[2]) == "u");
  CHECK(ternary_basis(2).size() == 6);
  for (int k = 0; k <= 8; ++k) {
    CHECK(ternary_basis(k).size() == static_cast<std::size_t>((k + 1) * (k + 2) / 2));
    for (int l = 0; l <= 8; ++l) {
      CHECK(bidegree_basis(k, l).size() == static_cast<std::size_t>((k + 1) * (l + 1)));
    }
  }
  CHECK(bidegree_basis(-1, 2).empty());
  CHECK(homogeneous_basis(Vars::Implicit, 2).size() == 10);
}

TEST_CASE("homogenize and dehomogenize") {
  CHECK(homogenize(parse_poly("X1+1", Vars::Affine), 1).to_string() == "X1+X4");
  CHECK(homogenize(parse_poly("X1*X2", Vars::Affine), 2).to_string() == "X1*X2");
  SparsePoly p = parse_poly("X1^2-3*X2*X3+X1-7", Vars::Affine);
  SparsePoly h = homogenize(p, p.total_degree());
  CHECK(h.is_homogeneous());
  CHECK(dehomogenize(h) == p);
  CHECK_THROWS_AS(homogenize(p, 1), Error);
}

TEST_CASE("primitive normal form") {
  CHECK(primitive_normal_form(parse_poly("-4*X1^2+2*X2^2", Vars::Implicit)).to_string() == "2*X1^2-X2^2");
  CHECK(primitive_normal_form(parse_poly("3", Vars::Implicit)).to_string() == "1");
  CHECK_THROWS_AS(primitive_normal_form(SparsePoly(Vars::Implicit)), Error);
  InstanceRng rng(33);
  for (int k = 0; k < 40; ++k) {
    SparsePoly p = random_poly(rng, Vars::Implicit, 3);
    if (p.is_zero()) continue;
    SparsePoly f = primitive_normal_form(p);
    CHECK(primitive_normal_form(f) == f);
    Rational c = rng.rational();
    if (c != 0) CHECK(primitive_normal_form(p * c) == f);
    CHECK(primitive_normal_form(p * make_rational(7, 3)) == f);
  }
}
