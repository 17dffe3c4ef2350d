#pragma once

#include <stdexcept>
#include <string>

namespace qsg {

/// Failure categories; the CLI maps them onto exit codes 1 and 2.
enum class ErrorKind { validation, numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Bad input: violated precondition, malformed configuration.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

/// The numerics could not deliver: singular geometry, unconverged quadrature,
/// unstable time step.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what)
      : Error(ErrorKind::numerical, what) {}
};

}  // namespace qsg
