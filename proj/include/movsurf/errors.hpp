#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace movsurf {

// Numeric values are mirrored by ms_status in movsurf.h.
enum class ErrorCode {
  Parse = 1,
  Degree = 2,
  InvalidArgument = 3,
  Singular = 4,
  BasePoints = 5,
  ResultantVanishes = 6,
  Interpolation = 7,
  Internal = 99,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace movsurf
