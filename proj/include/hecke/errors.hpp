#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

struct IdentityInputError : std::invalid_argument {
  explicit IdentityInputError(const std::string& what) : std::invalid_argument(what) {}
};

struct ParityMismatchError : std::invalid_argument {
  explicit ParityMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct TorsionInputError : std::invalid_argument {
  explicit TorsionInputError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotReciprocalError : std::invalid_argument {
  explicit NotReciprocalError(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyCountError : std::invalid_argument {
  explicit EmptyCountError(const std::string& what) : std::invalid_argument(what) {}
};

/// Word-grammar syntax error; `position` is the byte offset of the offending token.
struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

}  // namespace hecke
