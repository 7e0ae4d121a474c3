#ifndef STURMIAN_ERROR_HPP
#define STURMIAN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sturmian {

/// Base of every error raised by the library. `kind()` is the stable
/// machine-readable tag surfaced by the CLI as `error_kind`.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Input text that is not a word, list, spec, or number of the expected form.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse", what) {}
};

/// A precondition on the arguments of an operation does not hold.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

/// The result would exceed the materialization limit.
class SizeError : public Error {
 public:
  explicit SizeError(const std::string& what) : Error("size", what) {}
};

/// An enumeration order above the configured bound was requested.
class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(const std::string& what) : Error("bound", what) {}
};

class NotCentral : public Error {
 public:
  explicit NotCentral(const std::string& what) : Error("not_central", what) {}
};

class NotStandard : public Error {
 public:
  explicit NotStandard(const std::string& what) : Error("not_standard", what) {}
};

class NotChristoffel : public Error {
 public:
  explicit NotChristoffel(const std::string& what)
      : Error("not_christoffel", what) {}
};

}  // namespace sturmian

#endif  // STURMIAN_ERROR_HPP
