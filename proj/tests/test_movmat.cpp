#include <doctest.h>

#include <algorithm>

#include "movsurf/errors.hpp"
#include "movsurf/linalg.hpp"
#include "movsurf/movmat.hpp"
#include "movsurf/random.hpp"
#include "movsurf/resultant.hpp"

using namespace movsurf;

namespace {

ParamSurface example_cubes() {
  auto p = [](const char* t) { return parse_poly(t, Vars::Triangular); };
  return ParamSurface::triangular(3, {p("s^3"), p("t^3"), p("u^3"), p("s^3+t^3+u^3")});
}

ParamSurface example_bilinear() {
  auto p = [](const char* t) { return parse_poly(t, Vars::Tensor); };
  return ParamSurface::tensor(1, 1, {p("s*t+u*v"), p("s*v"), p("u*t"), p("s*v+u*t+u*v")});
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Triple first_three(const ParamSurface& s) { return {s.x(0), s.x(1), s.x(2)}; }

// Generic instance: nonzero resultant and |MP| (tensor).
ParamSurface generic_tensor(InstanceRng& rng, int m, int n) {
  while (true) {
    ParamSurface s = rng.surface(Shape::tensor(m, n));
    if (res_bihom(first_three(s), m, n) != 0 && det(build_MP(s)) != 0) return s;
  }
}

std::vector<std::string> label_strings(const std::vector<Label>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(l.to_string());
  return out;
}

}  // namespace

TEST_CASE("gamma set cardinalities") {
  for (int d = 1; d <= 4; ++d) {
    GammaSet g = gamma_sets(d);
    CHECK(g.gamma0.size() == static_cast<std::size_t>((d + 1) * (d + 1)));
    CHECK(g.all.size() == static_cast<std::size_t>((d + 1) * (d + 2) * (d + 3) / 6));
    for (const auto& gamma : g.gamma1) CHECK(gamma[0] == 0);
    for (const auto& gamma : g.gamma4) CHECK(gamma[3] == 0);
  }
  CHECK(gamma_sets(2).all.back() == Exponents{0, 0, 0, 2});
  CHECK_THROWS_AS(gamma_sets(0), Error);
}

TEST_CASE("index sets") {
  CHECK(all_index_sets(1).size() == 1);
  CHECK(all_index_sets(2).size() == 3);   // C(3,2)
  CHECK(all_index_sets(3).size() == 20);  // C(6,3)
  CHECK(all_index_sets(2).front().to_string() == "{(0,0),(0,1)}");
  CHECK_THROWS_AS(IndexSetI(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(IndexSetI(2, {{0, 0}, {1, 1}}), Error);
  CHECK_THROWS_AS(IndexSetI(2, {{0, 1}, {0, 1}}), Error);
}

TEST_CASE("matrix sizes") {
  InstanceRng rng(1);
  ParamSurface t11 = rng.surface(Shape::tensor(1, 1));
  CHECK(build_MP(t11).rows() == 4);
  CHECK(build_MP(t11).cols() == 4);
  CHECK(build_MQd(t11, 2).rows() == 9);
  CHECK(build_MQd(t11, 2).cols() == 10);
  CHECK(build_MSd(t11, 2).rows() == 9);
  CHECK(build_MSd(t11, 2).cols() == 9);
  CHECK(build_MTd(t11, 2).cols() == 9);

  ParamSurface t23 = rng.surface(Shape::tensor(2, 3));
  CHECK(build_MP(t23).rows() == 24);
  CHECK(build_MP(t23).cols() == 24);
  CHECK(build_MSd(t23, 3).cols() == 16 * 6);
  CHECK(build_MTd(t23, 3).cols() == 16 * 6);

  ParamSurface cubes = example_cubes();
  CHECK(build_MP(cubes).rows() == 21);
  CHECK(build_MP(cubes).cols() == 24);

  ParamSurface tri1 = rng.surface(Shape::triangular(1));
  IndexSetI i1(1, {{0, 0}});
  CHECK(build_MP_I(tri1, i1).rows() == 3);
  CHECK(build_MP_I(tri1, i1).cols() == 3);

  ParamSurface tri2 = rng.surface(Shape::triangular(2));
  for (const auto& i : all_index_sets(2)) {
    CHECK(build_MP_I(tri2, i).cols() == 10);
    ExactMatrix ms = build_MSd(tri2, 2, i);
    CHECK(ms.rows() == 21);
    CHECK(ms.cols() == 21);
    CHECK(build_MTd(tri2, 2, i).cols() == 21);
  }
  CHECK_THROWS_AS(build_MSd(tri2, 2), Error);
  CHECK_THROWS_AS(build_MP_I(t11, i1), Error);
}

TEST_CASE("MS^1 is MP entrywise; MT^1 is MP up to column order") {
  InstanceRng rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    ParamSurface s = rng.surface(Shape::tensor(1 + trial % 2, 1 + trial / 3));
    ExactMatrix mp = build_MP(s);
    CHECK(build_MSd(s, 1) == mp);
    ExactMatrix mt = build_MTd(s, 1);
    CHECK(abs(det(mt)) == abs(det(mp)));
    auto a = label_strings(mt.col_labels());
    auto b = label_strings(mp.col_labels());
    for (auto& x : a) x.erase(0, x.rfind(':') == std::string::npos ? 0 : x.rfind(':') + 1);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
  ParamSurface tri = rng.surface(Shape::triangular(2));
  for (const auto& i : all_index_sets(2)) CHECK(build_MSd(tri, 1, i) == build_MP_I(tri, i));
}

TEST_CASE("row labels enumerate the target basis, MS columns sit inside MQ") {
  InstanceRng rng(3);
  ParamSurface s = rng.surface(Shape::tensor(1, 2));
  for (int d = 1; d <= 3; ++d) {
    ExactMatrix mq = build_MQd(s, d);
    ExactMatrix ms = build_MSd(s, d);
    MonomialBasis target = s.shape().scaled_space(d + 1);
    REQUIRE(mq.row_labels().size() == target.size());
    for (std::size_t r = 0; r < target.size(); ++r) CHECK(mq.row_labels()[r].monomial == target[r]);
    auto q = label_strings(mq.col_labels());
    for (std::size_t c = 0; c < ms.cols(); ++c) {
      auto it = std::find(q.begin(), q.end(), ms.col_labels()[c].to_string());
      REQUIRE(it != q.end());
      CHECK(ms.column(c) == mq.column(static_cast<std::size_t>(it - q.begin())));
    }
  }
  CHECK(build_MP(s).col_labels().front().to_string() == "t*x1");
}

TEST_CASE("kernel vectors of MQ^d give moving surfaces that follow") {
  InstanceRng rng(4);
  ParamSurface s = rng.surface(Shape::tensor(1, 1));
  for (int d = 2; d <= 3; ++d) {
    auto basis = moving_space_basis(s, d, {0, 0});
    CHECK(basis.size() == static_cast<std::size_t>((d + 1) * d * (d - 1) / 6));
    for (const auto& ms : basis) CHECK(ms.substitute(s).is_zero());
  }
  ParamSurface tri = rng.surface(Shape::triangular(2));
  for (const auto& ms : moving_space_basis(tri, 2, {1, 0})) CHECK(ms.substitute(tri).is_zero());
}

TEST_CASE("bilinear example: moving plane and quadric spaces") {
  ParamSurface s = example_bilinear();
  CHECK(s.x(3).eval(std::vector<Rational>{1, 1, 1, 1}) == 3);
  // The nullity of the 9 x 16 system is at least 16 - 9 = 7.
  CHECK(moving_space_basis(s, 1, {1, 1}).size() == 7);
  CHECK(moving_space_basis(s, 1, {1, 0}).size() == 2);
  CHECK(moving_space_basis(s, 1, {0, 1}).size() == 2);
  CHECK(moving_space_basis(s, 1, {0, 0}).empty());
  CHECK(moving_space_basis(s, 2, {1, 1}).size() == 24);
  CHECK(moving_space_basis(s, 2, {0, 0}).size() == 1);

  // The two planes listed with the example do follow the surface.
  MovingSurface a, b;
  a.param_vars = b.param_vars = Vars::Tensor;
  a.coefficients.emplace(Exponents{0, 1, 0, 1}, parse_poly("X4-X1-X2-X3", Vars::Implicit));
  a.coefficients.emplace(Exponents{1, 0, 0, 1}, parse_poly("X3", Vars::Implicit));
  b.coefficients.emplace(Exponents{0, 1, 0, 1}, parse_poly("X4-X1-2*X2-X3", Vars::Implicit));
  b.coefficients.emplace(Exponents{1, 0, 0, 1}, parse_poly("X4-X2", Vars::Implicit));
  CHECK(a.substitute(s).is_zero());
  CHECK(b.substitute(s).is_zero());
}

TEST_CASE("cubes example: the unique constant moving plane") {
  ParamSurface s = example_cubes();
  auto planes = moving_space_basis(s, 1, {0, 0});
  REQUIRE(planes.size() == 1);
  const SparsePoly& form = planes[0].coefficients.begin()->second;
  CHECK(primitive_normal_form(form).to_string() == "X1+X2+X3-X4");
  CHECK(moving_space_basis(s, 2, {0, 0}).size() == 4);
  // Four constant planes of degree 0 make MP rank deficient.
  CHECK_THROWS_AS(choose_index_set_I(s), Error);
}

TEST_CASE("index set choice") {
  InstanceRng rng(5);
  ParamSurface tri1 = rng.surface(Shape::triangular(1));
  IndexSetI chosen = choose_index_set_I(tri1);
  CHECK(chosen == IndexSetI(1, {{0, 0}}));
  CHECK(det(build_MP_I(tri1, chosen)) != 0);

  ParamSurface tri2 = rng.surface(Shape::triangular(2));
  CHECK(det(build_MP_I(tri2, choose_index_set_I(tri2))) != 0);

  auto p = [](const char* t) { return parse_poly(t, Vars::Triangular); };
  ParamSurface dup = ParamSurface::triangular(2, {p("s^2+t*u"), p("s^2+t*u"), p("t^2"), p("u^2+s*t")});
  CHECK_THROWS_AS(choose_index_set_I(dup), Error);
  CHECK_THROWS_AS(choose_index_set_I(rng.surface(Shape::tensor(1, 1))), Error);
}

TEST_CASE("scaling x1 scales |MP| by lambda^(mn)") {
  InstanceRng rng(6);
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
    ParamSurface s = rng.surface(Shape::tensor(m, n));
    auto xs = s.xs();
    xs[0] *= 3;
    ParamSurface scaled(s.shape(), xs);
    CHECK(det(build_MP(scaled)) == pow(Rational(3), static_cast<unsigned>(m * n)) * det(build_MP(s)));
  }
}

TEST_CASE("tensor determinant identities") {
  InstanceRng rng(7);
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
    for (int trial = 0; trial < 3; ++trial) {
      ParamSurface s = generic_tensor(rng, m, n);
      Rational mp = det(build_MP(s));
      Rational res = res_bihom(first_three(s), m, n);
      CHECK(abs(det(build_MSd(s, 2))) == abs(mp * mp * mp * res));
      CHECK(abs(det(build_MTd(s, 2))) == abs(mp * mp * res));
    }
  }
  ParamSurface s = generic_tensor(rng, 1, 1);
  Rational mp = det(build_MP(s));
  Rational res = res_bihom(first_three(s), 1, 1);
  CHECK(abs(det(build_MSd(s, 3))) == abs(pow(mp, 6) * pow(res, 4)));
  CHECK(abs(det(build_MTd(s, 3))) == abs(pow(mp, 3) * pow(res, 3)));
}

TEST_CASE("triangular determinant identity with the cubed plane minor") {
  InstanceRng rng(8);
  for (int trial = 0; trial < 3; ++trial) {
    ParamSurface s = rng.surface(Shape::triangular(1));
    Rational res = res_tri(first_three(s), 1);
    for (const auto& i : all_index_sets(1)) {
      Rational mpi = det(build_MP_I(s, i));
      CHECK(abs(det(build_MSd(s, 2, i))) == abs(pow(mpi, 3) * res));
    }
  }
  ParamSurface s = rng.surface(Shape::triangular(2));
  IndexSetI i = choose_index_set_I(s);
  Rational mpi = det(build_MP_I(s, i));
  Rational res = res_tri(first_three(s), 2);
  CHECK(abs(det(build_MSd(s, 2, i))) == abs(pow(mpi, 3) * res));
}

TEST_CASE("nullity of MQ^d") {
  InstanceRng rng(9);
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}}) {
    ParamSurface s = generic_tensor(rng, m, n);
    for (int d = 2; d <= 3; ++d) {
      ExactMatrix mq = build_MQd(s, d);
      CHECK(mq.cols() - rank(mq) == static_cast<std::size_t>((d + 1) * d * (d - 1) / 6 * m * n));
    }
  }
  for (int n = 1; n <= 2; ++n) {
    ParamSurface s = rng.surface(Shape::triangular(n));
    ExactMatrix mq = build_MQd(s, 2);
    CHECK(mq.cols() - rank(mq) == static_cast<std::size_t>(n * 3 * 2 * (2 * n + 7 - n) / 12));
  }
}
