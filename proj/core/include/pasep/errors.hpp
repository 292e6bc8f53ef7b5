#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pasep {

/// Raised for arguments outside an operation's domain: zero alpha/beta,
/// out-of-range chain parameters, mismatched shapes or arities.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text parsers; carries the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pasep
