#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antiforce {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by caller-supplied data (bad ids, loops, sets that
/// are not what the operation requires).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NoPerfectMatching : public Error {
 public:
  using Error::Error;
};

/// The matching handed in is a perfect matching but fails the pairwise
/// cross-adjacency test.
class NotNice : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Carries the 1-based line number of the offending line
/// (0 when the problem is end-of-file).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace antiforce
