#include "movsurf/movsurf.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <new>
#include <optional>
#include <string>

#include "movsurf/errors.hpp"
#include "movsurf/implicitize.hpp"
#include "movsurf/linalg.hpp"
#include "movsurf/movmat.hpp"
#include "movsurf/random.hpp"
#include "movsurf/resultant.hpp"
#include "movsurf/specfile.hpp"
#include "movsurf/verify.hpp"

using namespace movsurf;

struct ms_surface {
  ParamSurface surface;
};

struct ms_matrix {
  ExactMatrix matrix;
};

struct ms_implicit {
  ImplicitResult result;
};

struct ms_report {
  Report report;
};

namespace {

thread_local std::string g_last_error;

ms_status fail(ms_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
ms_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return MS_OK;
  } catch (const Error& e) {
    return fail(static_cast<ms_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MS_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

Shape make_shape(ms_patch patch, int m, int n) {
  if (patch == MS_PATCH_TENSOR) return Shape::tensor(m, n);
  if (patch == MS_PATCH_TRIANGULAR) return Shape::triangular(n);
  throw Error(ErrorCode::InvalidArgument, "unknown patch type");
}

std::optional<IndexSetI> make_index_set(const ParamSurface& s, const int* pairs, size_t count) {
  if (count == 0) return std::nullopt;
  require(pairs, "pairs");
  if (s.patch() != Patch::Triangular) {
    throw Error(ErrorCode::InvalidArgument, "index sets apply to triangular surfaces only");
  }
  std::vector<std::pair<int, int>> members;
  for (size_t k = 0; k < count; ++k) members.emplace_back(pairs[2 * k], pairs[2 * k + 1]);
  return IndexSetI(s.n(), std::move(members));
}

std::string matrix_text(const ExactMatrix& m) {
  std::string out = std::to_string(m.rows()) + " x " + std::to_string(m.cols()) + "\n";
  auto label = [](const std::vector<Label>& labels, std::size_t i, const char* prefix) {
    return i < labels.size() ? labels[i].to_string() : prefix + std::to_string(i);
  };
  out += "columns:";
  for (std::size_t c = 0; c < m.cols(); ++c) out += " " + label(m.col_labels(), c, "c");
  out += "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += label(m.row_labels(), r, "r") + ":";
    for (std::size_t c = 0; c < m.cols(); ++c) out += " " + to_string(m(r, c));
    out += "\n";
  }
  return out;
}

std::string matrix_json(const ExactMatrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto labels = [](const std::vector<Label>& ls) {
    std::vector<std::string> out;
    for (const auto& l : ls) out.push_back(l.to_string());
    return out;
  };
  j["row_labels"] = labels(m.row_labels());
  j["col_labels"] = labels(m.col_labels());
  j["entries"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    j["entries"].push_back(row);
  }
  return j.dump(2) + "\n";
}

std::string identity_text(const ImplicitResult& r) {
  if (!r.identity) return "not checked";
  std::string sign = r.identity->sign > 0 ? "+1" : "-1";
  return r.identity->holds() ? "holds (sign " + sign + ")" : "FAILS";
}

std::string implicit_text(const ImplicitResult& r) {
  std::string out;
  out += std::string("method: ") + method_name(r.method) + "\n";
  out += "equation: " + r.f.to_string() + "\n";
  out += "degree: " + std::to_string(r.f.total_degree()) + "\n";
  out += "root: " + r.decomposition.root.to_string() + "\n";
  out += "power: " + std::to_string(r.decomposition.power) + "\n";
  if (r.index_set) out += "index set: " + r.index_set->to_string() + "\n";
  if (r.affine_degree >= 0) out += "affine degree: " + std::to_string(r.affine_degree) + "\n";
  if (r.method == ImplicitMethod::MovingQuadrics) out += "identity Res*|M T| = +/-P^h: " + identity_text(r) + "\n";
  return out;
}

std::string implicit_json(const ImplicitResult& r) {
  nlohmann::ordered_json j;
  j["method"] = method_name(r.method);
  j["equation"] = r.f.to_string();
  j["degree"] = r.f.total_degree();
  j["root"] = r.decomposition.root.to_string();
  j["power"] = r.decomposition.power;
  if (r.index_set) j["index_set"] = r.index_set->to_string();
  if (r.affine_degree >= 0) j["affine_degree"] = r.affine_degree;
  if (r.identity) {
    j["identity"] = {{"res", to_string(r.identity->res)},
                     {"lhs", r.identity->lhs.to_string()},
                     {"rhs", r.identity->rhs.to_string()},
                     {"sign", r.identity->sign},
                     {"holds", r.identity->holds()}};
  }
  return j.dump(2) + "\n";
}

}  // namespace

extern "C" {

const char* ms_last_error(void) { return g_last_error.c_str(); }

const char* ms_status_name(ms_status status) {
  switch (status) {
    case MS_OK: return "ok";
    case MS_ERR_PARSE: return "parse error";
    case MS_ERR_DEGREE: return "degree error";
    case MS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MS_ERR_SINGULAR: return "singular";
    case MS_ERR_BASE_POINTS: return "base points";
    case MS_ERR_RESULTANT_VANISHES: return "resultant vanishes";
    case MS_ERR_INTERPOLATION: return "interpolation failure";
    case MS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ms_version(void) { return "0.1.0"; }

void ms_string_free(char* s) { std::free(s); }

ms_status ms_surface_from_text(const char* text, ms_surface** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new ms_surface{parse_surface_spec(text)};
  });
}

ms_status ms_surface_create(ms_patch patch, int m, int n, const char* const x[4], ms_surface** out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    Shape shape = make_shape(patch, m, n);
    std::array<SparsePoly, 4> polys;
    for (std::size_t i = 0; i < 4; ++i) {
      require(x[i], "x[i]");
      polys[i] = parse_poly(x[i], shape.param_vars());
    }
    *out = new ms_surface{ParamSurface(shape, std::move(polys))};
  });
}

ms_status ms_surface_random(ms_patch patch, int m, int n, uint64_t seed, ms_surface** out) {
  return guarded([&] {
    require(out, "out");
    Shape shape = make_shape(patch, m, n);
    if (shape.m < 1 || shape.n < 1) throw Error(ErrorCode::Degree, "degrees must be positive");
    InstanceRng rng(seed);
    *out = new ms_surface{rng.surface(shape)};
  });
}

ms_status ms_surface_describe(const ms_surface* s, char** out) {
  return guarded([&] {
    require(s, "surface");
    require(out, "out");
    *out = dup_string(s->surface.describe());
  });
}

void ms_surface_free(ms_surface* s) { delete s; }

ms_status ms_build_matrix(const ms_surface* s, ms_matrix_kind kind, int d, const int* pairs, size_t pair_count,
                          ms_matrix** out) {
  return guarded([&] {
    require(s, "surface");
    require(out, "out");
    const ParamSurface& surf = s->surface;
    auto index_set = make_index_set(surf, pairs, pair_count);
    bool tri = surf.patch() == Patch::Triangular;
    auto default_i = [&] {
      if (!index_set && tri) index_set = choose_index_set_I(surf);
    };
    if (kind != MS_MATRIX_MP && d < 1) throw Error(ErrorCode::InvalidArgument, "d must be at least 1");
    ExactMatrix m;
    switch (kind) {
      case MS_MATRIX_MP:
        m = build_MP(surf);
        break;
      case MS_MATRIX_MP_I:
        if (!tri) throw Error(ErrorCode::InvalidArgument, "MP_I needs a triangular surface");
        default_i();
        m = build_MP_I(surf, *index_set);
        break;
      case MS_MATRIX_MQ:
        m = build_MQd(surf, d);
        break;
      case MS_MATRIX_MS:
        default_i();
        m = build_MSd(surf, d, index_set);
        break;
      case MS_MATRIX_MT:
        default_i();
        m = build_MTd(surf, d, index_set);
        break;
      default:
        throw Error(ErrorCode::InvalidArgument, "unknown matrix kind");
    }
    *out = new ms_matrix{std::move(m)};
  });
}

size_t ms_matrix_rows(const ms_matrix* m) { return m ? m->matrix.rows() : 0; }
size_t ms_matrix_cols(const ms_matrix* m) { return m ? m->matrix.cols() : 0; }

ms_status ms_matrix_entry(const ms_matrix* m, size_t row, size_t col, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    if (row >= m->matrix.rows() || col >= m->matrix.cols()) {
      throw Error(ErrorCode::InvalidArgument, "entry index out of range");
    }
    *out = dup_string(to_string(m->matrix(row, col)));
  });
}

ms_status ms_matrix_to_text(const ms_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = dup_string(matrix_text(m->matrix));
  });
}

ms_status ms_matrix_to_json(const ms_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = dup_string(matrix_json(m->matrix));
  });
}

ms_status ms_matrix_det(const ms_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = dup_string(to_string(det(m->matrix)));
  });
}

ms_status ms_matrix_rank(const ms_matrix* m, size_t* out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = rank(m->matrix);
  });
}

void ms_matrix_free(ms_matrix* m) { delete m; }

ms_status ms_moving_space(const ms_surface* s, int d, int sigma1, int sigma2, int json, size_t* dimension,
                          char** text) {
  return guarded([&] {
    require(s, "surface");
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be at least 1");
    if (sigma1 < 0 || sigma2 < 0) throw Error(ErrorCode::InvalidArgument, "sigma must be nonnegative");
    auto basis = moving_space_basis(s->surface, d, {sigma1, sigma2});
    if (dimension) *dimension = basis.size();
    if (!text) return;
    if (json) {
      nlohmann::ordered_json j;
      j["d"] = d;
      j["sigma"] = {sigma1, sigma2};
      j["dimension"] = basis.size();
      std::vector<std::string> items;
      for (const auto& b : basis) items.push_back(b.to_string());
      j["basis"] = items;
      *text = dup_string(j.dump(2) + "\n");
    } else {
      std::string out = "dimension " + std::to_string(basis.size()) + "\n";
      for (std::size_t k = 0; k < basis.size(); ++k) {
        out += "[" + std::to_string(k + 1) + "] " + basis[k].to_string() + "\n";
      }
      *text = dup_string(out);
    }
  });
}

ms_status ms_resultant_from_text(const char* text, ms_engine engine, char** value) {
  return guarded([&] {
    require(text, "text");
    require(value, "value");
    auto [shape, f] = parse_triple_spec(text);
    Rational r;
    switch (engine) {
      case MS_ENGINE_KOSZUL:
        r = resultant(f, shape);
        break;
      case MS_ENGINE_DIXON:
        if (shape.patch != Patch::Tensor) throw Error(ErrorCode::InvalidArgument, "dixon needs a tensor triple");
        r = dixon_res(f, shape.m, shape.n);
        break;
      case MS_ENGINE_MACAULAY:
        if (shape.patch != Patch::Triangular) {
          throw Error(ErrorCode::InvalidArgument, "macaulay needs a triangular triple");
        }
        r = macaulay_res(f, shape.n);
        break;
      default:
        throw Error(ErrorCode::InvalidArgument, "unknown engine");
    }
    *value = dup_string(to_string(r));
  });
}

ms_status ms_implicitize(const ms_surface* s, ms_method method, int check_identity, ms_implicit** out) {
  return guarded([&] {
    require(s, "surface");
    require(out, "out");
    ImplicitResult r;
    if (method == MS_METHOD_MOVING_QUADRICS) {
      r = implicit_moving_quadrics(s->surface, ImplicitOptions{check_identity != 0});
    } else if (method == MS_METHOD_RESULTANT) {
      r = implicit_direct_resultant(s->surface);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown method");
    }
    *out = new ms_implicit{std::move(r)};
  });
}

ms_status ms_implicit_equation(const ms_implicit* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = dup_string(r->result.f.to_string());
  });
}

ms_status ms_implicit_root(const ms_implicit* r, char** root, unsigned* power) {
  return guarded([&] {
    require(r, "result");
    if (root) *root = dup_string(r->result.decomposition.root.to_string());
    if (power) *power = r->result.decomposition.power;
  });
}

int ms_implicit_identity(const ms_implicit* r) {
  if (!r || !r->result.identity) return -1;
  return r->result.identity->holds() ? 1 : 0;
}

ms_status ms_implicit_to_text(const ms_implicit* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = dup_string(implicit_text(r->result));
  });
}

ms_status ms_implicit_to_json(const ms_implicit* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = dup_string(implicit_json(r->result));
  });
}

ms_status ms_validate(const ms_implicit* r, const ms_surface* s, int trials, uint64_t seed, int* zeros) {
  return guarded([&] {
    require(r, "result");
    require(s, "surface");
    require(zeros, "zeros");
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
    *zeros = validate_on_surface(r->result.f, s->surface, trials, seed).zeros;
  });
}

void ms_implicit_free(ms_implicit* r) { delete r; }

ms_status ms_verify_suite(const char* identity, ms_patch patch, int m, int n, int d, int trials, uint64_t seed,
                          ms_report** out) {
  return guarded([&] {
    require(identity, "identity");
    require(out, "out");
    SuiteParams p;
    p.identity = parse_identity(identity);
    p.shape = make_shape(patch, m, n);
    p.d = d;
    p.trials = trials;
    p.seed = seed;
    *out = new ms_report{run_suite(p)};
  });
}

ms_status ms_verify_surface(const ms_surface* s, const char* identity, int d, const int* pairs, size_t pair_count,
                            ms_report** out) {
  return guarded([&] {
    require(s, "surface");
    require(identity, "identity");
    require(out, "out");
    Identity id = parse_identity(identity);
    auto index_set = make_index_set(s->surface, pairs, pair_count);
    *out = new ms_report{verify_surface(s->surface, id, d, index_set)};
  });
}

int ms_report_passed(const ms_report* r) { return r && r->report.passed() ? 1 : 0; }

ms_status ms_report_to_text(const ms_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = dup_string(r->report.to_text());
  });
}

ms_status ms_report_to_json(const ms_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = dup_string(r->report.to_json());
  });
}

void ms_report_free(ms_report* r) { delete r; }

}  // extern "C"
