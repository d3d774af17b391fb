#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lagpath {

enum class ErrorKind { kParse, kDomain, kShape, kResource, kArithmetic };

/// Base of every exception thrown by the core library. The C API maps
/// `kind()` onto its status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t index, const std::string& what)
      : Error(ErrorKind::kParse, what), index_(index) {}

  /// Zero-based offset of the offending character.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::kDomain, what) {}
};

/// A rewrite or decomposition was requested at a position where the word
/// does not have the required block pattern.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what)
      : Error(ErrorKind::kShape, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorKind::kResource, what) {}
};

class ArithmeticError : public Error {
 public:
  explicit ArithmeticError(const std::string& what)
      : Error(ErrorKind::kArithmetic, what) {}
};

}  // namespace lagpath
