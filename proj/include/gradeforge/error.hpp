#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gradeforge {

enum class ErrorCode {
  index_out_of_range,
  not_absorbing,
  size_overflow,
  missing_zero,
  bad_composition,
  not_associative,
  bad_identity,
  not_a_group,
  not_a_category,
  basis_mismatch,
  parse_error,
};

char const* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        _code(code) {}

  ErrorCode code() const noexcept { return _code; }

 private:
  ErrorCode _code;
};

// Lines and columns are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& what)
      : Error(ErrorCode::parse_error, "line " + std::to_string(line) +
                                          ", column " + std::to_string(column) +
                                          ": " + what),
        _line(line),
        _column(column) {}

  std::size_t line() const noexcept { return _line; }
  std::size_t column() const noexcept { return _column; }

 private:
  std::size_t _line;
  std::size_t _column;
};

}  // namespace gradeforge
