#pragma once

#include <stdexcept>
#include <string>

namespace padebary {

/// Base of every exception thrown by the library.
///
/// Two families exist: numerical failures (a degenerate configuration was
/// detected while computing) and invalid input (a precondition on the
/// arguments was violated before any computation started). The CLI maps the
/// first to exit code 2 and the second to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual bool is_numerical() const noexcept = 0;
};

class NumericalError : public Error {
 public:
  using Error::Error;
  bool is_numerical() const noexcept override { return true; }
};

class InvalidInput : public Error {
 public:
  using Error::Error;
  bool is_numerical() const noexcept override { return false; }
};

// Numerical failures.

class SingularMatrix : public NumericalError {
 public:
  explicit SingularMatrix(const std::string& what)
      : NumericalError("singular matrix: " + what) {}
};

class NoConvergence : public NumericalError {
 public:
  explicit NoConvergence(const std::string& what)
      : NumericalError("no convergence: " + what) {}
};

class NonDistinctNodes : public NumericalError {
 public:
  explicit NonDistinctNodes(const std::string& what)
      : NumericalError("non-distinct nodes: " + what) {}
};

class DegenerateDenominator : public NumericalError {
 public:
  explicit DegenerateDenominator(const std::string& what)
      : NumericalError("degenerate denominator: " + what) {}
};

class DegenerateDeterminant : public NumericalError {
 public:
  explicit DegenerateDeterminant(const std::string& what)
      : NumericalError("degenerate determinant: " + what) {}
};

class ZeroAtOrigin : public NumericalError {
 public:
  explicit ZeroAtOrigin(const std::string& what)
      : NumericalError("denominator vanishes at the origin: " + what) {}
};

class ZeroDerivative : public NumericalError {
 public:
  explicit ZeroDerivative(const std::string& what)
      : NumericalError("zero derivative: " + what) {}
};

// Invalid input.

class InvalidArgument : public InvalidInput {
 public:
  explicit InvalidArgument(const std::string& what)
      : InvalidInput("invalid argument: " + what) {}
};

class InsufficientOrder : public InvalidInput {
 public:
  explicit InsufficientOrder(const std::string& what)
      : InvalidInput("insufficient series order: " + what) {}
};

class InvalidDenominator : public InvalidInput {
 public:
  explicit InvalidDenominator(const std::string& what)
      : InvalidInput("invalid denominator: " + what) {}
};

class InvalidNodes : public InvalidInput {
 public:
  explicit InvalidNodes(const std::string& what)
      : InvalidInput("invalid nodes: " + what) {}
};

class ZeroNode : public InvalidInput {
 public:
  explicit ZeroNode(const std::string& what)
      : InvalidInput("zero node: " + what) {}
};

}  // namespace padebary
