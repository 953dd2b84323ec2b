#include "movsurf/rational.hpp"

#include <cctype>

#include "movsurf/errors.hpp"

namespace movsurf {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Degree: return "degree error";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Singular: return "singular matrix";
    case ErrorCode::BasePoints: return "base points detected";
    case ErrorCode::ResultantVanishes: return "resultant vanishes";
    case ErrorCode::Interpolation: return "interpolation failure";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown error";
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t slash = text.find('/');
  auto check_digits = [&](std::string_view part, std::size_t offset, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) ++i;
    if (i == part.size()) throw ParseError(offset + i, "expected digits");
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        throw ParseError(offset + i, "unexpected character in number");
      }
    }
  };
  std::string_view num = text.substr(0, slash);
  check_digits(num, 0, true);
  std::string num_str(num[0] == '+' ? num.substr(1) : num);
  Integer n(num_str, 10);
  if (slash == std::string_view::npos) return Rational(n);
  std::string_view den = text.substr(slash + 1);
  check_digits(den, slash + 1, false);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError(slash + 1, "zero denominator");
  return make_rational(n, d);
}

Rational pow(const Rational& base, unsigned exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return make_rational(num, den);
}

}  // namespace movsurf
