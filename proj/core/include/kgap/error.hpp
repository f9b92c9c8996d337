#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kgap {

enum class Errc {
  parse_error,
  label_out_of_range,
  non_monotone_label_map,
  unmapped_label,
  not_weakly_decreasing,
  wrong_dilator,
  size_limit_exceeded,
  not_perfect,
  not_prefix_closed,
  invalid_argument,
  capacity_exceeded,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Positions are 1-based columns into the parsed text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(Errc::parse_error,
              "parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace kgap
