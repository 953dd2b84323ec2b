#include <doctest.h>
#include <json.hpp>

#include "movsurf/errors.hpp"
#include "movsurf/linalg.hpp"
#include "movsurf/movmat.hpp"
#include "movsurf/specfile.hpp"
#include "movsurf/verify.hpp"

using namespace movsurf;

namespace {

SuiteParams params(Identity id, Shape shape, int d, int trials, std::uint64_t seed) {
  SuiteParams p;
  p.identity = id;
  p.shape = shape;
  p.d = d;
  p.trials = trials;
  p.seed = seed;
  return p;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("key=value surface documents") {
  SpecFile f = parse_spec("# comment\ncase=tensor\n\nm=1\nn=2\nx1=s*t^2\nx2=s*v^2\nx3=u*t*v\nx4=u*v^2\n");
  CHECK(f.shape == Shape::tensor(1, 2));
  REQUIRE(f.x);
  CHECK((*f.x)[2] == parse_poly("u*t*v", Vars::Tensor));
  CHECK(!f.f);

  ParamSurface s = parse_surface_spec("case=triangular\nn=1\nx1=s\nx2=t\nx3=u\nx4=s+t+u\n");
  CHECK(s.shape() == Shape::triangular(1));

  auto [shape, triple] = parse_triple_spec("case=triangular\nn=1\nx1=s\nx2=t\nx3=u\nx4=s+t+u\n");
  CHECK(shape == Shape::triangular(1));
  CHECK(triple[1] == parse_poly("t", Vars::Triangular));

  CHECK(code_of([] { parse_spec("case=tensor\nm=1\nn=1\nbogus=1\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_spec("case=tensor\nm=1\nm=1\nn=1\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_spec("case=tensor\nm=1\nn=1\nno equals sign\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_spec("case=sphere\nn=1\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_spec("case=tensor\nm=0\nn=1\n"); }) == ErrorCode::Degree);
  CHECK(code_of([] { parse_spec("case=triangular\nm=2\nn=1\n"); }) == ErrorCode::Degree);
  CHECK(code_of([] { parse_surface_spec("case=tensor\nm=1\nn=1\nx1=s*t\nx2=s*v\nx3=u*t\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_surface_spec("case=tensor\nm=1\nn=1\nx1=s\nx2=s*v\nx3=u*t\nx4=u*v\n"); }) ==
        ErrorCode::Degree);
  try {
    parse_spec("case=tensor\nm=1\nn=1\nbogus=1\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("identity names round-trip") {
  for (Identity id : {Identity::ThmMt, Identity::LemmaMt, Identity::Conj61, Identity::Conj62, Identity::ThmMth,
                      Identity::RemarkPm, Identity::DimFormula}) {
    CHECK(parse_identity(identity_name(id)) == id);
  }
  CHECK_THROWS_AS(parse_identity("thm-zz"), Error);
}

TEST_CASE("reports are reproducible and mirrored in JSON") {
  auto p = params(Identity::Conj61, Shape::tensor(1, 1), 2, 30, 7);
  Report a = run_suite(p);
  Report b = run_suite(p);
  CHECK(a.to_text() == b.to_text());
  CHECK(a.to_json() == b.to_json());
  CHECK(a.passed());
  CHECK(a.pass_count() == 30);

  auto j = nlohmann::json::parse(a.to_json());
  CHECK(j["command"] == a.command);
  CHECK(j["checks"].size() == a.checks.size());
  CHECK(j["trials"].size() == 30);
  CHECK(j["resamples"] == a.resamples);
  for (std::size_t k = 0; k < a.checks.size(); ++k) {
    CHECK(j["checks"][k]["left"] == a.checks[k].left);
    CHECK(j["checks"][k]["sign"] == a.checks[k].sign);
  }

  Report c = run_suite(params(Identity::Conj61, Shape::tensor(1, 1), 2, 30, 8));
  CHECK(c.to_text() != a.to_text());
}

TEST_CASE("nullity of MQ^2 at bidegree (1,1) is one") {
  Report a = run_suite(params(Identity::DimFormula, Shape::tensor(1, 1), 2, 3, 1));
  for (const auto& c : a.checks) {
    CHECK(c.left == "1");
    CHECK(c.right == "1");
  }
}

TEST_CASE("checks record the resolved sign") {
  Report r = run_suite(params(Identity::ThmMt, Shape::tensor(1, 1), 3, 6, 3));
  REQUIRE(r.passed());
  for (const auto& c : r.checks) {
    Rational left = parse_rational(c.left), right = parse_rational(c.right);
    CHECK(left == right * c.sign);
    CHECK(left != 0);
  }
}

TEST_CASE("triangular suites report both exponent placements") {
  Report r = run_suite(params(Identity::Conj62, Shape::triangular(2), 2, 4, 5));
  CHECK(r.passed());
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0].find("holds 4/4") != std::string::npos);
  CHECK(r.notes[0].find("holds 0/4") != std::string::npos);
  for (const auto& t : r.trials) CHECK(t.index_set.has_value());

  Report one = run_suite(params(Identity::Conj62, Shape::triangular(1), 2, 3, 5));
  CHECK(one.passed());
  CHECK(one.checks.size() >= 3);
}

TEST_CASE("remark suites use at least three index sets") {
  Report r = run_suite(params(Identity::RemarkPm, Shape::triangular(2), 2, 2, 4));
  CHECK(r.passed());
  int pm = 0;
  for (const auto& c : r.checks) pm += c.name.rfind("pm ", 0) == 0;
  CHECK(pm >= 6);
}

TEST_CASE("suite parameter validation") {
  CHECK(code_of([] { run_suite(params(Identity::Conj61, Shape::triangular(1), 2, 1, 1)); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { run_suite(params(Identity::Conj62, Shape::tensor(1, 1), 2, 1, 1)); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { run_suite(params(Identity::ThmMt, Shape::tensor(1, 1), 2, 0, 1)); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { run_suite(params(Identity::RemarkPm, Shape::tensor(1, 1), 1, 1, 1)); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { run_suite(params(Identity::ThmMt, Shape::tensor(0, 1), 2, 1, 1)); }) == ErrorCode::Degree);
}

TEST_CASE("identities on a fixed surface") {
  ParamSurface s = parse_surface_spec("case=tensor\nm=1\nn=1\nx1=s*t+u*v\nx2=s*v\nx3=u*t\nx4=s*v+u*t+u*v\n");
  Report mth = verify_surface(s, Identity::ThmMth, 2);
  CHECK(mth.passed());
  CHECK(mth.checks.size() == 2);
  CHECK(det(build_MP(s)) != 0);
  Report conj = verify_surface(s, Identity::Conj61, 2);
  REQUIRE(conj.checks.size() == 1);
  CHECK(conj.passed());
  CHECK(conj.checks[0].right != "0");
}
