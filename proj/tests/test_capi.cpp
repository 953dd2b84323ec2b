// C API: handles, status codes, error messages, serialization.
#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <string>

#include "movsurf/movsurf.h"

namespace {

const char* kBilinear =
    "case=tensor\nm=1\nn=1\n"
    "x1=s*t+u*v\nx2=s*v\nx3=u*t\nx4=s*v+u*t+u*v\n";

const char* kCubes =
    "case=triangular\nn=3\n"
    "x1=s^3\nx2=t^3\nx3=u^3\nx4=s^3+t^3+u^3\n";

std::string take(char* s) {
  std::string out = s ? s : "";
  ms_string_free(s);
  return out;
}

ms_surface* surface(const char* text) {
  ms_surface* s = nullptr;
  REQUIRE(ms_surface_from_text(text, &s) == MS_OK);
  return s;
}

ms_matrix* matrix(const ms_surface* s, ms_matrix_kind kind, int d, const int* pairs = nullptr, size_t count = 0) {
  ms_matrix* m = nullptr;
  REQUIRE(ms_build_matrix(s, kind, d, pairs, count, &m) == MS_OK);
  return m;
}

bool same_entries(const ms_matrix* a, const ms_matrix* b) {
  if (ms_matrix_rows(a) != ms_matrix_rows(b) || ms_matrix_cols(a) != ms_matrix_cols(b)) return false;
  for (size_t r = 0; r < ms_matrix_rows(a); ++r) {
    for (size_t c = 0; c < ms_matrix_cols(a); ++c) {
      char* x = nullptr;
      char* y = nullptr;
      ms_matrix_entry(a, r, c, &x);
      ms_matrix_entry(b, r, c, &y);
      if (take(x) != take(y)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("status names and error messages") {
  CHECK(std::string(ms_status_name(MS_OK)) == "ok");
  CHECK(std::string(ms_status_name(MS_ERR_BASE_POINTS)) == "base points");
  ms_surface* s = nullptr;
  CHECK(ms_surface_from_text("case=tensor\nm=1\nn=1\nx1=s*t+\n", &s) == MS_ERR_PARSE);
  CHECK(s == nullptr);
  CHECK(std::string(ms_last_error()).size() > 0);
  CHECK(ms_surface_from_text("case=tensor\nm=2\nn=1\nx1=s*t\nx2=s*v\nx3=u*t\nx4=u*v\n", &s) == MS_ERR_DEGREE);
  CHECK(ms_surface_from_text("case=tensor\nm=1\nn=1\nx1=s*t\nx2=s*v\nx3=u*t\n", &s) == MS_ERR_PARSE);
  CHECK(ms_surface_from_text(nullptr, &s) == MS_ERR_INVALID_ARGUMENT);
  ms_surface* ok = surface(kBilinear);
  CHECK(std::string(ms_last_error()).empty());
  ms_surface_free(ok);
}

TEST_CASE("surfaces from strings, text and seeds") {
  const char* x[4] = {"s*t+u*v", "s*v", "u*t", "s*v+u*t+u*v"};
  ms_surface* a = nullptr;
  REQUIRE(ms_surface_create(MS_PATCH_TENSOR, 1, 1, x, &a) == MS_OK);
  ms_surface* b = surface(kBilinear);
  char* da = nullptr;
  char* db = nullptr;
  ms_surface_describe(a, &da);
  ms_surface_describe(b, &db);
  CHECK(take(da) == take(db));

  ms_surface* r1 = nullptr;
  ms_surface* r2 = nullptr;
  REQUIRE(ms_surface_random(MS_PATCH_TRIANGULAR, 0, 2, 11, &r1) == MS_OK);
  REQUIRE(ms_surface_random(MS_PATCH_TRIANGULAR, 0, 2, 11, &r2) == MS_OK);
  char* t1 = nullptr;
  char* t2 = nullptr;
  ms_surface_describe(r1, &t1);
  ms_surface_describe(r2, &t2);
  CHECK(take(t1) == take(t2));
  CHECK(ms_surface_random(MS_PATCH_TENSOR, 0, 1, 1, &r1) == MS_ERR_DEGREE);
  for (auto* s : {a, b, r2}) ms_surface_free(s);
  ms_surface_free(r1);
}

TEST_CASE("matrix handles") {
  ms_surface* s = surface(kBilinear);
  ms_matrix* ms2 = matrix(s, MS_MATRIX_MS, 2);
  CHECK(ms_matrix_rows(ms2) == 9);
  CHECK(ms_matrix_cols(ms2) == 9);
  char* text = nullptr;
  REQUIRE(ms_matrix_to_text(ms2, &text) == MS_OK);
  std::string t = take(text);
  CHECK(t.rfind("9 x 9\ncolumns: x1^2 ", 0) == 0);

  char* js = nullptr;
  REQUIRE(ms_matrix_to_json(ms2, &js) == MS_OK);
  auto j = nlohmann::json::parse(take(js));
  CHECK(j["rows"] == 9);
  CHECK(j["entries"].size() == 9);
  CHECK(j["col_labels"][0] == "x1^2");

  char* e = nullptr;
  CHECK(ms_matrix_entry(ms2, 9, 0, &e) == MS_ERR_INVALID_ARGUMENT);
  size_t rank = 0;
  REQUIRE(ms_matrix_rank(ms2, &rank) == MS_OK);
  char* det = nullptr;
  REQUIRE(ms_matrix_det(ms2, &det) == MS_OK);
  CHECK((take(det) == "0") == (rank < 9));

  // MS^1 and MP coincide entrywise.
  ms_matrix* mp = matrix(s, MS_MATRIX_MP, 1);
  ms_matrix* ms1 = matrix(s, MS_MATRIX_MS, 1);
  CHECK(same_entries(mp, ms1));

  ms_matrix* bad = nullptr;
  int pairs[] = {0, 0};
  CHECK(ms_build_matrix(s, MS_MATRIX_MS, 2, pairs, 1, &bad) == MS_ERR_INVALID_ARGUMENT);
  CHECK(ms_build_matrix(s, MS_MATRIX_MQ, 0, nullptr, 0, &bad) == MS_ERR_INVALID_ARGUMENT);
  for (auto* m : {ms2, mp, ms1}) ms_matrix_free(m);
  ms_surface_free(s);
}

TEST_CASE("triangular matrices with an explicit index set") {
  ms_surface* s = nullptr;
  REQUIRE(ms_surface_random(MS_PATCH_TRIANGULAR, 0, 2, 5, &s) == MS_OK);
  int pairs[] = {0, 0, 0, 1};
  ms_matrix* mpi = matrix(s, MS_MATRIX_MP_I, 1, pairs, 2);
  CHECK(ms_matrix_rows(mpi) == ms_matrix_cols(mpi));
  ms_matrix* msi = matrix(s, MS_MATRIX_MS, 1, pairs, 2);
  CHECK(same_entries(mpi, msi));
  int outside[] = {0, 0, 2, 2};
  ms_matrix* bad = nullptr;
  CHECK(ms_build_matrix(s, MS_MATRIX_MP_I, 1, outside, 2, &bad) == MS_ERR_INVALID_ARGUMENT);
  ms_matrix_free(mpi);
  ms_matrix_free(msi);
  ms_surface_free(s);
}

TEST_CASE("moving spaces") {
  ms_surface* s = surface(kBilinear);
  size_t dim = 0;
  char* text = nullptr;
  REQUIRE(ms_moving_space(s, 2, 1, 1, 0, &dim, &text) == MS_OK);
  CHECK(dim == 24);
  CHECK(take(text).rfind("dimension 24\n[1] ", 0) == 0);
  REQUIRE(ms_moving_space(s, 2, 0, 0, 1, &dim, &text) == MS_OK);
  auto j = nlohmann::json::parse(take(text));
  CHECK(j["dimension"] == 1);
  CHECK(j["basis"].size() == 1);
  CHECK(ms_moving_space(s, 1, -1, 0, 0, &dim, nullptr) == MS_ERR_INVALID_ARGUMENT);
  ms_surface_free(s);

  ms_surface* c = surface(kCubes);
  REQUIRE(ms_moving_space(c, 1, 0, 0, 0, &dim, &text) == MS_OK);
  CHECK(dim == 1);
  CHECK(take(text) == "dimension 1\n[1] (-X1-X2-X3+X4)\n");
  ms_surface_free(c);
}

TEST_CASE("resultant engines through the API") {
  char* v = nullptr;
  const char* common = "case=tensor\nm=1\nn=1\nf1=s*t\nf2=s*v\nf3=u*t\n";
  for (ms_engine e : {MS_ENGINE_KOSZUL, MS_ENGINE_DIXON}) {
    REQUIRE(ms_resultant_from_text(common, e, &v) == MS_OK);
    CHECK(take(v) == "0");
  }
  CHECK(ms_resultant_from_text(common, MS_ENGINE_MACAULAY, &v) == MS_ERR_INVALID_ARGUMENT);

  const char* linear = "case=triangular\nn=1\nf1=s\nf2=t\nf3=u\n";
  REQUIRE(ms_resultant_from_text(linear, MS_ENGINE_MACAULAY, &v) == MS_OK);
  std::string mac = take(v);
  CHECK((mac == "1" || mac == "-1"));
  REQUIRE(ms_resultant_from_text(linear, MS_ENGINE_KOSZUL, &v) == MS_OK);
  std::string kos = take(v);
  CHECK((kos == "1" || kos == "-1"));

  // A surface document supplies x1..x3 as the triple.
  const char* triple = "case=tensor\nm=1\nn=2\nf1=3*s*t^2-s*v^2+2*u*t*v\nf2=s*t*v-4*u*v^2+u*t^2\nf3=-2*s*t^2+5*u*t*v+s*v^2-u*v^2\n";
  REQUIRE(ms_resultant_from_text(triple, MS_ENGINE_KOSZUL, &v) == MS_OK);
  std::string a = take(v);
  REQUIRE(ms_resultant_from_text(triple, MS_ENGINE_DIXON, &v) == MS_OK);
  std::string b = take(v);
  CHECK(a != "0");
  CHECK((a == b || "-" + a == b || a == "-" + b));
}

TEST_CASE("implicitization handles") {
  ms_surface* s = surface(kBilinear);
  ms_implicit* r = nullptr;
  REQUIRE(ms_implicitize(s, MS_METHOD_MOVING_QUADRICS, 1, &r) == MS_OK);
  CHECK(ms_implicit_identity(r) == 1);
  int zeros = 0;
  REQUIRE(ms_validate(r, s, 25, 3, &zeros) == MS_OK);
  CHECK(zeros == 25);
  char* text = nullptr;
  REQUIRE(ms_implicit_to_text(r, &text) == MS_OK);
  std::string t = take(text);
  CHECK(t.find("method: moving-quadrics\n") == 0);
  CHECK(t.find("identity Res*|M T| = +/-P^h: holds") != std::string::npos);
  char* js = nullptr;
  REQUIRE(ms_implicit_to_json(r, &js) == MS_OK);
  auto j = nlohmann::json::parse(take(js));
  CHECK(j["degree"] == 2);
  CHECK(j["identity"]["holds"] == true);
  ms_implicit_free(r);

  REQUIRE(ms_implicitize(s, MS_METHOD_MOVING_QUADRICS, 0, &r) == MS_OK);
  CHECK(ms_implicit_identity(r) == -1);
  ms_implicit_free(r);
  ms_surface_free(s);

  ms_surface* c = surface(kCubes);
  CHECK(ms_implicitize(c, MS_METHOD_MOVING_QUADRICS, 1, &r) == MS_ERR_SINGULAR);
  REQUIRE(ms_implicitize(c, MS_METHOD_RESULTANT, 1, &r) == MS_OK);
  char* root = nullptr;
  unsigned power = 0;
  REQUIRE(ms_implicit_root(r, &root, &power) == MS_OK);
  CHECK(take(root) == "X1+X2+X3-X4");
  CHECK(power == 9);
  ms_implicit_free(r);
  ms_surface_free(c);

  ms_surface* bp = surface("case=tensor\nm=1\nn=1\nx1=s*t\nx2=s*v\nx3=u*t\nx4=s*t\n");
  CHECK(ms_implicitize(bp, MS_METHOD_RESULTANT, 1, &r) == MS_ERR_BASE_POINTS);
  CHECK(std::string(ms_last_error()).find("base points detected") != std::string::npos);
  ms_surface_free(bp);
}

TEST_CASE("identity reports are deterministic") {
  ms_report* a = nullptr;
  ms_report* b = nullptr;
  REQUIRE(ms_verify_suite("conj-61", MS_PATCH_TENSOR, 1, 2, 2, 4, 99, &a) == MS_OK);
  REQUIRE(ms_verify_suite("conj-61", MS_PATCH_TENSOR, 1, 2, 2, 4, 99, &b) == MS_OK);
  CHECK(ms_report_passed(a) == 1);
  char* ta = nullptr;
  char* tb = nullptr;
  ms_report_to_text(a, &ta);
  ms_report_to_text(b, &tb);
  std::string sa = take(ta);
  CHECK(sa == take(tb));
  CHECK(sa.rfind("command: verify --identity conj-61 --case tensor --m 1 --n 2 --d 2 --trials 4 --seed 99\n", 0) == 0);

  char* js = nullptr;
  ms_report_to_json(a, &js);
  auto j = nlohmann::json::parse(take(js));
  CHECK(j["total"] == 4);
  CHECK(j["passed"] == 4);
  CHECK(j["result"] == "PASS");
  CHECK(j["checks"][0]["relation"] == "|MS^2| = +/-|MP|^3 Res");
  ms_report_free(a);
  ms_report_free(b);

  CHECK(ms_verify_suite("conj-62", MS_PATCH_TENSOR, 1, 1, 2, 1, 1, &a) == MS_ERR_INVALID_ARGUMENT);
  CHECK(ms_verify_suite("nope", MS_PATCH_TENSOR, 1, 1, 2, 1, 1, &a) == MS_ERR_INVALID_ARGUMENT);
  CHECK(ms_verify_suite("thm-mt", MS_PATCH_TENSOR, 1, 1, 2, 0, 1, &a) == MS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("identity checks on a given surface") {
  ms_surface* s = surface(kBilinear);
  ms_report* r = nullptr;
  REQUIRE(ms_verify_surface(s, "thm-mth", 2, nullptr, 0, &r) == MS_OK);
  CHECK(ms_report_passed(r) == 1);
  ms_report_free(r);
  ms_surface_free(s);

  ms_surface* t = nullptr;
  REQUIRE(ms_surface_random(MS_PATCH_TRIANGULAR, 0, 1, 3, &t) == MS_OK);
  int pairs[] = {0, 0};
  REQUIRE(ms_verify_surface(t, "conj-62", 2, pairs, 1, &r) == MS_OK);
  char* text = nullptr;
  ms_report_to_text(r, &text);
  CHECK(take(text).find("conj-62") != std::string::npos);
  ms_report_free(r);
  ms_surface_free(t);
}
