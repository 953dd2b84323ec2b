// movsurf: command-line front end over the C API.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "movsurf/movsurf.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string input;
  std::string patch = "tensor";
  int m = 1;
  int n = 1;
  int d = 2;
  std::string sigma = "1,1";
  std::string which = "MS";
  std::string index;
  std::string engine = "koszul";
  std::string method = "mq";
  std::string identity;
  int trials = 10;
  std::uint64_t seed = 1;
  int validate = 0;
  bool json = false;
  bool no_check = false;
  bool det = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_for(ms_status status) {
  switch (status) {
    case MS_OK: return kExitOk;
    case MS_ERR_PARSE:
    case MS_ERR_DEGREE:
    case MS_ERR_INVALID_ARGUMENT: return kExitInput;
    default: return kExitFailure;
  }
}

// Prints the library error and maps it to an exit code.
int report_error(ms_status status) {
  std::cerr << "error: " << ms_status_name(status) << ": " << ms_last_error() << "\n";
  return exit_for(status);
}

// Owns a library string.
class LibString {
 public:
  LibString() = default;
  ~LibString() { ms_string_free(p_); }
  LibString(const LibString&) = delete;
  LibString& operator=(const LibString&) = delete;
  char** out() { return &p_; }
  const char* c_str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

std::string read_input(const std::string& path) {
  if (path.empty()) throw InputError("--input is required");
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> integers_in(const std::string& text) {
  std::vector<int> out;
  std::string digits;
  auto flush = [&] {
    if (digits.size() > 6) throw InputError("entry too large in '" + text + "'");
    if (!digits.empty()) out.push_back(std::stoi(digits));
    digits.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      digits += c;
    } else if (c == '-') {
      throw InputError("negative entry in '" + text + "'");
    } else {
      flush();
    }
  }
  flush();
  return out;
}

std::pair<int, int> parse_sigma(const std::string& text) {
  auto v = integers_in(text);
  if (v.size() == 1) return {v[0], v[0]};
  if (v.size() == 2) return {v[0], v[1]};
  throw InputError("--sigma expects 'k' or 'k,l'");
}

std::vector<int> parse_index(const std::string& text) {
  auto v = integers_in(text);
  if (v.size() % 2 != 0) throw InputError("--index expects pairs 'i,j;i,j;...'");
  return v;
}

ms_patch parse_patch(const std::string& name) {
  if (name == "tensor") return MS_PATCH_TENSOR;
  if (name == "triangular") return MS_PATCH_TRIANGULAR;
  throw InputError("--case must be tensor or triangular");
}

struct Surface {
  ms_surface* p = nullptr;
  ~Surface() { ms_surface_free(p); }
};

ms_status load_surface(const Options& o, Surface& s) {
  std::string text = read_input(o.input);
  return ms_surface_from_text(text.c_str(), &s.p);
}

int cmd_matrices(const Options& o) {
  Surface s;
  if (ms_status st = load_surface(o, s)) return report_error(st);
  ms_matrix_kind kind;
  if (o.which == "MP") kind = MS_MATRIX_MP;
  else if (o.which == "MP_I") kind = MS_MATRIX_MP_I;
  else if (o.which == "MQ") kind = MS_MATRIX_MQ;
  else if (o.which == "MS") kind = MS_MATRIX_MS;
  else if (o.which == "MT") kind = MS_MATRIX_MT;
  else throw InputError("--which must be MP, MP_I, MQ, MS or MT");
  auto pairs = parse_index(o.index);
  ms_matrix* m = nullptr;
  if (ms_status st = ms_build_matrix(s.p, kind, o.d, pairs.data(), pairs.size() / 2, &m)) return report_error(st);
  LibString text;
  ms_status st = o.json ? ms_matrix_to_json(m, text.out()) : ms_matrix_to_text(m, text.out());
  if (st == MS_OK) std::cout << text.c_str();
  if (st == MS_OK && o.det && !o.json) {
    LibString value;
    st = ms_matrix_det(m, value.out());
    if (st == MS_OK) std::cout << "det: " << value.c_str() << "\n";
  }
  ms_matrix_free(m);
  return st ? report_error(st) : kExitOk;
}

int cmd_spaces(const Options& o) {
  Surface s;
  if (ms_status st = load_surface(o, s)) return report_error(st);
  auto [a, b] = parse_sigma(o.sigma);
  size_t dim = 0;
  LibString text;
  if (ms_status st = ms_moving_space(s.p, o.d, a, b, o.json ? 1 : 0, &dim, text.out())) return report_error(st);
  std::cout << text.c_str();
  return kExitOk;
}

int cmd_resultant(const Options& o) {
  ms_engine engine;
  if (o.engine == "koszul") engine = MS_ENGINE_KOSZUL;
  else if (o.engine == "dixon") engine = MS_ENGINE_DIXON;
  else if (o.engine == "macaulay") engine = MS_ENGINE_MACAULAY;
  else throw InputError("--engine must be koszul, dixon or macaulay");
  std::string text = read_input(o.input);
  LibString value;
  if (ms_status st = ms_resultant_from_text(text.c_str(), engine, value.out())) return report_error(st);
  if (o.json) {
    std::cout << "{\n  \"engine\": \"" << o.engine << "\",\n  \"value\": \"" << value.c_str() << "\"\n}\n";
  } else {
    std::cout << "engine: " << o.engine << "\nvalue: " << value.c_str() << "\n";
  }
  return kExitOk;
}

int cmd_implicitize(const Options& o) {
  ms_method method;
  if (o.method == "mq") method = MS_METHOD_MOVING_QUADRICS;
  else if (o.method == "res") method = MS_METHOD_RESULTANT;
  else throw InputError("--method must be mq or res");
  Surface s;
  if (ms_status st = load_surface(o, s)) return report_error(st);
  ms_implicit* r = nullptr;
  if (ms_status st = ms_implicitize(s.p, method, o.no_check ? 0 : 1, &r)) return report_error(st);
  LibString text;
  ms_status st = o.json ? ms_implicit_to_json(r, text.out()) : ms_implicit_to_text(r, text.out());
  int code = kExitOk;
  if (st == MS_OK) {
    std::cout << text.c_str();
    if (ms_implicit_identity(r) == 0) code = kExitFailure;
  }
  if (st == MS_OK && o.validate > 0) {
    int zeros = 0;
    st = ms_validate(r, s.p, o.validate, o.seed, &zeros);
    if (st == MS_OK) {
      std::cerr << "validation: " << zeros << "/" << o.validate << " image points on the surface\n";
      if (zeros != o.validate) code = kExitFailure;
    }
  }
  ms_implicit_free(r);
  return st ? report_error(st) : code;
}

int cmd_verify(const Options& o) {
  if (o.identity.empty()) throw InputError("--identity is required");
  auto start = std::chrono::steady_clock::now();
  ms_report* r = nullptr;
  ms_status st;
  if (!o.input.empty()) {
    Surface s;
    if ((st = load_surface(o, s))) return report_error(st);
    auto pairs = parse_index(o.index);
    st = ms_verify_surface(s.p, o.identity.c_str(), o.d, pairs.data(), pairs.size() / 2, &r);
  } else {
    st = ms_verify_suite(o.identity.c_str(), parse_patch(o.patch), o.m, o.n, o.d, o.trials, o.seed, &r);
  }
  if (st) return report_error(st);
  LibString text;
  st = o.json ? ms_report_to_json(r, text.out()) : ms_report_to_text(r, text.out());
  bool passed = ms_report_passed(r) != 0;
  ms_report_free(r);
  if (st) return report_error(st);
  std::cout << text.c_str();
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::cerr << "elapsed: " << elapsed.count() << " s\n";
  return passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moving planes, moving quadrics, resultants and implicitization"};
  app.require_subcommand(1);
  Options o;

  auto surface_flags = [&](CLI::App* c) {
    c->add_option("--input", o.input, "surface document (key=value lines, '-' for stdin)");
    c->add_flag("--json", o.json, "machine-readable output");
  };
  auto d_flag = [&](CLI::App* c) { c->add_option("--d", o.d, "degree of the moving surfaces")->capture_default_str(); };

  auto* matrices = app.add_subcommand("matrices", "dump MP, MP_I, MQ^d, MS^d or MT^d");
  surface_flags(matrices);
  d_flag(matrices);
  matrices->add_option("--which", o.which, "MP | MP_I | MQ | MS | MT")->capture_default_str();
  matrices->add_option("--index", o.index, "triangular index set I as 'i,j;i,j;...'");
  matrices->add_flag("--det", o.det, "also print the determinant");

  auto* spaces = app.add_subcommand("spaces", "basis of the moving d-surfaces of a given (bi)degree");
  surface_flags(spaces);
  d_flag(spaces);
  spaces->add_option("--sigma", o.sigma, "parameter (bi)degree 'k' or 'k,l'")->capture_default_str();

  auto* res = app.add_subcommand("resultant", "resultant of f1, f2, f3");
  surface_flags(res);
  res->add_option("--engine", o.engine, "koszul | dixon | macaulay")->capture_default_str();

  auto* impl = app.add_subcommand("implicitize", "implicit equation of the surface");
  surface_flags(impl);
  impl->add_option("--method", o.method, "mq | res")->capture_default_str();
  impl->add_flag("--no-identity-check", o.no_check, "skip the determinant identity check");
  impl->add_option("--validate", o.validate, "evaluate at this many random image points");
  impl->add_option("--seed", o.seed, "seed for --validate")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "check an identity on a random suite or on --input");
  surface_flags(ver);
  d_flag(ver);
  ver->add_option("--identity", o.identity, "thm-mt | lemma-mt | conj-61 | conj-62 | thm-mth | remark-pm | dim-formula");
  ver->add_option("--case", o.patch, "tensor | triangular")->capture_default_str();
  ver->add_option("--m", o.m, "first degree (tensor)")->capture_default_str();
  ver->add_option("--n", o.n, "second degree, or the degree of a triangular surface")->capture_default_str();
  ver->add_option("--trials", o.trials, "number of random instances")->capture_default_str();
  ver->add_option("--seed", o.seed, "seed of the instance stream")->capture_default_str();
  ver->add_option("--index", o.index, "triangular index set I for --input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*matrices) return cmd_matrices(o);
    if (*spaces) return cmd_spaces(o);
    if (*res) return cmd_resultant(o);
    if (*impl) return cmd_implicitize(o);
    if (*ver) return cmd_verify(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitInput;
}
