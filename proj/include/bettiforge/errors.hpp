#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bettiforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (variable sets or coefficient fields).
class IncompatibleOperands : public Error {
 public:
  using Error::Error;
};

/// A precondition on degrees, grades or variables was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class MalformedResolution : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace bettiforge
