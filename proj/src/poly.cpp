#include "movsurf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "movsurf/errors.hpp"

namespace movsurf {

namespace {

constexpr std::array<std::string_view, 4> kTensorNames{"s", "u", "t", "v"};
constexpr std::array<std::string_view, 3> kTriangularNames{"s", "t", "u"};
constexpr std::array<std::string_view, 4> kImplicitNames{"X1", "X2", "X3", "X4"};
constexpr std::array<std::string_view, 3> kAffineNames{"X1", "X2", "X3"};
constexpr std::array<std::string_view, 4> kDixonNames{"s", "t", "a", "b"};

std::span<const std::string_view> names_of(Vars vars) {
  switch (vars) {
    case Vars::Tensor: return kTensorNames;
    case Vars::Triangular: return kTriangularNames;
    case Vars::Implicit: return kImplicitNames;
    case Vars::Affine: return kAffineNames;
    case Vars::Dixon: return kDixonNames;
  }
  throw Error(ErrorCode::Internal, "unknown variable set");
}

}  // namespace

std::size_t var_count(Vars vars) noexcept { return names_of(vars).size(); }

std::string_view var_name(Vars vars, std::size_t index) { return names_of(vars)[index]; }

std::optional<std::size_t> var_index(Vars vars, std::string_view name) {
  auto names = names_of(vars);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

Exponents::Exponents(std::initializer_list<int> values) {
  if (values.size() > kMaxVars) throw Error(ErrorCode::Internal, "too many exponents");
  std::size_t i = 0;
  for (int v : values) {
    if (v < 0) throw Error(ErrorCode::Internal, "negative exponent");
    e[i++] = static_cast<std::uint16_t>(v);
  }
}

int Exponents::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

bool Exponents::divides(const Exponents& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e[i] > other.e[i]) return false;
  }
  return true;
}

Exponents operator+(Exponents a, const Exponents& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) a.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  return a;
}

Exponents operator-(Exponents a, const Exponents& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (b.e[i] > a.e[i]) throw Error(ErrorCode::Internal, "monomial does not divide");
    a.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  }
  return a;
}

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da > db;
  return a.e > b.e;
}

std::string monomial_to_string(Vars vars, const Exponents& exps) {
  std::string out;
  for (std::size_t i = 0; i < var_count(vars); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(vars, i);
    if (exps[i] > 1) {
      out += '^';
      out += std::to_string(exps[i]);
    }
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// SparsePoly

SparsePoly SparsePoly::constant(Vars vars, const Rational& c) {
  SparsePoly p(vars);
  p.add_term(Exponents{}, c);
  return p;
}

SparsePoly SparsePoly::monomial(Vars vars, const Exponents& exps, const Rational& c) {
  SparsePoly p(vars);
  p.add_term(exps, c);
  return p;
}

SparsePoly SparsePoly::variable(Vars vars, std::size_t index) {
  if (index >= var_count(vars)) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Exponents e;
  e[index] = 1;
  return monomial(vars, e);
}

Rational SparsePoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

const SparsePoly::Terms::value_type& SparsePoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading term");
  return *terms_.begin();
}

int SparsePoly::total_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

int SparsePoly::degree_in(std::size_t var) const {
  int best = -1;
  for (const auto& [exps, c] : terms_) best = std::max(best, static_cast<int>(exps[var]));
  return best;
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

std::optional<std::pair<int, int>> SparsePoly::bidegree() const {
  if (vars_ != Vars::Tensor || terms_.empty()) return std::nullopt;
  const auto& first = terms_.begin()->first;
  std::pair<int, int> bd{first[0] + first[1], first[2] + first[3]};
  for (const auto& [exps, c] : terms_) {
    if (exps[0] + exps[1] != bd.first || exps[2] + exps[3] != bd.second) return std::nullopt;
  }
  return bd;
}

void SparsePoly::add_term(const Exponents& exps, const Rational& c) {
  if (c == 0) return;
  for (std::size_t i = var_count(vars_); i < kMaxVars; ++i) {
    if (exps[i] != 0) throw Error(ErrorCode::Internal, "exponent outside the variable set");
  }
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePoly::check_compatible(const SparsePoly& other) const {
  if (vars_ != other.vars_) throw Error(ErrorCode::Internal, "mixing polynomials of different variable sets");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  check_compatible(other);
  for (const auto& [exps, c] : other.terms_) add_term(exps, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  check_compatible(other);
  for (const auto& [exps, c] : other.terms_) add_term(exps, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [exps, coeff] : out.terms_) coeff = -coeff;
  return out;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_compatible(b);
  SparsePoly out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

SparsePoly SparsePoly::pow(unsigned exponent) const {
  SparsePoly result = constant(vars_, 1);
  SparsePoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::shifted(const Exponents& exps) const {
  SparsePoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + exps, c);
  return out;
}

Rational SparsePoly::eval(std::span<const Rational> point) const {
  std::size_t n = var_count(vars_);
  if (point.size() != n) throw Error(ErrorCode::InvalidArgument, "evaluation point has wrong length");
  // Power tables per variable.
  std::vector<std::vector<Rational>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    int deg = std::max(degree_in(i), 0);
    powers[i].resize(static_cast<std::size_t>(deg) + 1);
    powers[i][0] = 1;
    for (int k = 1; k <= deg; ++k) powers[i][k] = powers[i][k - 1] * point[i];
  }
  Rational sum = 0;
  for (const auto& [exps, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < n; ++i) {
      if (exps[i] != 0) term *= powers[i][exps[i]];
    }
    sum += term;
  }
  return sum;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exps, c] : terms_) {
    std::string term;
    bool constant_term = exps.degree() == 0;
    if (constant_term) {
      term = movsurf::to_string(c);
    } else if (c == 1) {
      term = monomial_to_string(vars_, exps);
    } else if (c == -1) {
      term = "-" + monomial_to_string(vars_, exps);
    } else {
      term = movsurf::to_string(c) + "*" + monomial_to_string(vars_, exps);
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      // "p/q" is a rational literal; '/' is not an operator otherwise.
      if (i < src.size() && src[i] == '/') {
        ++i;
        if (i >= src.size() || !std::isdigit(static_cast<unsigned char>(src[i]))) {
          throw ParseError(i, "expected denominator");
        }
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      }
      out.push_back({Tok::Number, start, std::string(src.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::Ident, start, std::string(src.substr(start, i - start))});
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw ParseError(i, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({kind, start, std::string(1, ch)});
    ++i;
  }
  out.push_back({Tok::End, src.size(), ""});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, Vars vars) : tokens_(tokenize(src)), vars_(vars) {}

  SparsePoly parse() {
    SparsePoly p = expr();
    const Token& t = peek();
    if (t.kind == Tok::RParen) throw ParseError(t.pos, "unbalanced ')'");
    if (t.kind != Tok::End) throw ParseError(t.pos, "expected operator");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  SparsePoly expr() {
    SparsePoly acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      SparsePoly rhs = term();
      if (minus) acc -= rhs; else acc += rhs;
    }
    return acc;
  }

  SparsePoly term() {
    SparsePoly acc = unary();
    while (peek().kind == Tok::Star) {
      next();
      acc = acc * unary();
    }
    return acc;
  }

  SparsePoly unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  SparsePoly power() {
    SparsePoly base = primary();
    if (peek().kind != Tok::Caret) return base;
    next();
    const Token& t = next();
    if (t.kind == Tok::Minus) throw ParseError(t.pos, "negative exponent");
    if (t.kind != Tok::Number || t.text.find('/') != std::string::npos) {
      throw ParseError(t.pos, "expected non-negative integer exponent");
    }
    if (t.text.size() > 6) throw ParseError(t.pos, "exponent too large");
    return base.pow(static_cast<unsigned>(std::stoul(t.text)));
  }

  SparsePoly primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number:
        return SparsePoly::constant(vars_, parse_rational(t.text));
      case Tok::Ident: {
        auto idx = var_index(vars_, t.text);
        if (!idx) throw ParseError(t.pos, "unknown variable '" + t.text + "'");
        return SparsePoly::variable(vars_, *idx);
      }
      case Tok::LParen: {
        SparsePoly inner = expr();
        const Token& close = next();
        if (close.kind != Tok::RParen) throw ParseError(close.pos, "expected ')'");
        return inner;
      }
      case Tok::End:
        throw ParseError(t.pos, "unexpected end of input");
      default:
        throw ParseError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Vars vars_;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, Vars vars) { return Parser(text, vars).parse(); }

// ---------------------------------------------------------------------------
// Bases

MonomialBasis::MonomialBasis(Vars vars, std::vector<Exponents> monomials)
    : vars_(vars), monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (!index_.emplace(monomials_[i], i).second) {
      throw Error(ErrorCode::Internal, "duplicate monomial in basis");
    }
  }
}

std::optional<std::size_t> MonomialBasis::index_of(const Exponents& exps) const {
  auto it = index_.find(exps);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MonomialBasis bidegree_basis(int k, int l) {
  std::vector<Exponents> out;
  if (k >= 0 && l >= 0) {
    for (int i = k; i >= 0; --i) {
      for (int j = l; j >= 0; --j) out.push_back(Exponents{i, k - i, j, l - j});
    }
  }
  return MonomialBasis(Vars::Tensor, std::move(out));
}

MonomialBasis ternary_basis(int l) {
  std::vector<Exponents> out;
  if (l >= 0) {
    for (int i = l; i >= 0; --i) {
      for (int j = l - i; j >= 0; --j) out.push_back(Exponents{i, j, l - i - j});
    }
  }
  return MonomialBasis(Vars::Triangular, std::move(out));
}

MonomialBasis homogeneous_basis(Vars vars, int degree) {
  std::vector<Exponents> out;
  std::size_t n = var_count(vars);
  if (degree >= 0) {
    Exponents cur;
    // Lexicographic descending: first variable takes the largest share first.
    auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
      if (var + 1 == n) {
        cur[var] = static_cast<std::uint16_t>(remaining);
        out.push_back(cur);
        return;
      }
      for (int k = remaining; k >= 0; --k) {
        cur[var] = static_cast<std::uint16_t>(k);
        self(self, var + 1, remaining - k);
      }
      cur[var] = 0;
    };
    rec(rec, 0, degree);
  }
  return MonomialBasis(vars, std::move(out));
}

// ---------------------------------------------------------------------------

SparsePoly homogenize(const SparsePoly& p, int target_degree) {
  if (p.vars() != Vars::Affine && p.vars() != Vars::Implicit) {
    throw Error(ErrorCode::InvalidArgument, "homogenize expects a polynomial in X1..X3");
  }
  if (p.vars() == Vars::Implicit && p.degree_in(3) > 0) {
    throw Error(ErrorCode::InvalidArgument, "polynomial already involves X4");
  }
  if (target_degree < p.total_degree()) {
    throw Error(ErrorCode::Degree, "target degree " + std::to_string(target_degree) +
                                       " below polynomial degree " +
                                       std::to_string(p.total_degree()));
  }
  SparsePoly out(Vars::Implicit);
  for (const auto& [exps, c] : p.terms()) {
    Exponents e = exps;
    e[3] = static_cast<std::uint16_t>(target_degree - exps.degree());
    out.add_term(e, c);
  }
  return out;
}

SparsePoly dehomogenize(const SparsePoly& p) {
  if (p.vars() != Vars::Implicit) throw Error(ErrorCode::InvalidArgument, "dehomogenize expects X1..X4");
  SparsePoly out(Vars::Affine);
  for (const auto& [exps, c] : p.terms()) {
    Exponents e = exps;
    e[3] = 0;
    out.add_term(e, c);
  }
  return out;
}

SparsePoly primitive_normal_form(const SparsePoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "primitive normal form of zero");
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [exps, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  // p * den_lcm / num_gcd has coprime integer coefficients.
  Rational scale = make_rational(den_lcm, num_gcd);
  if (p.leading_term().second < 0) scale = -scale;
  return p * scale;
}

SparsePoly change_vars(const SparsePoly& p, Vars target) {
  SparsePoly out(target);
  std::size_t n = var_count(target);
  for (const auto& [exps, c] : p.terms()) {
    for (std::size_t i = n; i < kMaxVars; ++i) {
      if (exps[i] != 0) throw Error(ErrorCode::InvalidArgument, "variable not present in target set");
    }
    out.add_term(exps, c);
  }
  return out;
}

}  // namespace movsurf
