#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hln {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Syntax error with 1-based source position.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(format_message(line, column, msg)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  static std::string format_message(std::size_t line, std::size_t column,
                                    const std::string& msg) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Molecule count. 64-bit: populations of order 1e6 and pair products of
/// order 1e10 fit without overflow.
using Count = std::int64_t;

/// Copy-number vector, one entry per species in declaration order.
using State = std::vector<Count>;

/// Species identifiers are [A-Za-z][A-Za-z0-9_]*, case-sensitive.
bool is_valid_species_name(std::string_view name);

/// Uniform sampling grid: n points from 0 to t_end inclusive.
std::vector<double> make_grid(double t_end, std::size_t n);

/// Shortest round-trip decimal form of x, with exponent written without
/// a plus sign or leading zeros ("4e-4", not "4e-04").
std::string format_double(double x);

}  // namespace hln
