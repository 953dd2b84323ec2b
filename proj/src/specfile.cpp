#include "movsurf/specfile.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <string>

#include "movsurf/errors.hpp"

namespace movsurf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

Error line_error(int line, const std::string& what) {
  return Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

int parse_degree(std::string_view value, int line, const char* key) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw line_error(line, std::string(key) + " must be an integer");
  }
  if (out < 1) throw Error(ErrorCode::Degree, std::string(key) + " must be at least 1");
  return out;
}

}  // namespace

Patch parse_patch(std::string_view name) {
  if (name == "tensor") return Patch::Tensor;
  if (name == "triangular") return Patch::Triangular;
  throw Error(ErrorCode::Parse, "unknown case '" + std::string(name) + "' (expected tensor or triangular)");
}

SpecFile parse_spec(std::string_view text) {
  static const char* kKeys[] = {"case", "m", "n", "x1", "x2", "x3", "x4", "f1", "f2", "f3"};
  std::map<std::string, std::pair<std::string, int>> values;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw line_error(line_no, "expected key=value");
    std::string key(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw line_error(line_no, "unknown key '" + key + "'");
    }
    if (!values.emplace(key, std::pair{std::string(value), line_no}).second) {
      throw line_error(line_no, "duplicate key '" + key + "'");
    }
  }
  auto need = [&](const char* key) -> const std::pair<std::string, int>& {
    auto it = values.find(key);
    if (it == values.end()) throw Error(ErrorCode::Parse, std::string("missing key '") + key + "'");
    return it->second;
  };

  SpecFile out;
  Patch patch = parse_patch(need("case").first);
  const auto& [n_text, n_line] = need("n");
  int n = parse_degree(n_text, n_line, "n");
  if (patch == Patch::Tensor) {
    const auto& [m_text, m_line] = need("m");
    out.shape = Shape::tensor(parse_degree(m_text, m_line, "m"), n);
  } else {
    if (auto it = values.find("m"); it != values.end()) {
      if (parse_degree(it->second.first, it->second.second, "m") != n) {
        throw Error(ErrorCode::Degree, "triangular surfaces take a single degree n (m must equal n)");
      }
    }
    out.shape = Shape::triangular(n);
  }

  Vars vars = out.shape.param_vars();
  auto poly = [&](const char* key) {
    const auto& [text_value, line] = need(key);
    try {
      return parse_poly(text_value, vars);
    } catch (const ParseError& e) {
      throw line_error(line, std::string(key) + ": " + e.what());
    }
  };
  bool any_x = values.count("x1") || values.count("x2") || values.count("x3") || values.count("x4");
  bool any_f = values.count("f1") || values.count("f2") || values.count("f3");
  if (any_x && any_f) throw Error(ErrorCode::Parse, "a document holds either x1..x4 or f1..f3, not both");
  if (any_x) out.x = std::array<SparsePoly, 4>{poly("x1"), poly("x2"), poly("x3"), poly("x4")};
  if (any_f) {
    out.f = Triple{poly("f1"), poly("f2"), poly("f3")};
    static const char* names[] = {"f1", "f2", "f3"};
    for (std::size_t i = 0; i < 3; ++i) out.shape.check_form((*out.f)[i], names[i]);
  }
  return out;
}

ParamSurface parse_surface_spec(std::string_view text) {
  SpecFile spec = parse_spec(text);
  if (!spec.x) throw Error(ErrorCode::Parse, "missing key 'x1'");
  return ParamSurface(spec.shape, *spec.x);
}

std::pair<Shape, Triple> parse_triple_spec(std::string_view text) {
  SpecFile spec = parse_spec(text);
  if (spec.f) return {spec.shape, *spec.f};
  // A surface document also names a triple: x1, x2, x3.
  if (spec.x) return {spec.shape, Triple{(*spec.x)[0], (*spec.x)[1], (*spec.x)[2]}};
  throw Error(ErrorCode::Parse, "missing key 'f1'");
}

}  // namespace movsurf
