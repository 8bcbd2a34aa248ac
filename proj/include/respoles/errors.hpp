#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace respoles {

// Base class for every typed failure in the library. kind() returns the
// class name so front ends can print a stable error identifier.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Invalid user-supplied parameters or configuration (CLI exit code 2).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error("ValidationError", what) {}
};

// Numerical failures (CLI exit code 3).
class BranchDomain : public Error {
 public:
  explicit BranchDomain(const std::string& what) : Error("BranchDomain", what) {}
};

class NoConvergence : public Error {
 public:
  explicit NoConvergence(const std::string& what) : Error("NoConvergence", what) {}
};

class Overflow : public Error {
 public:
  Overflow(const std::string& what, double exponent)
      : Error("Overflow", what), exponent_(exponent) {}
  // The base-e exponent that left the representable range.
  double exponent() const noexcept { return exponent_; }

 private:
  double exponent_;
};

class OnAxis : public Error {
 public:
  explicit OnAxis(const std::string& what) : Error("OnAxis", what) {}
};

class QuadratureFailure : public Error {
 public:
  explicit QuadratureFailure(const std::string& what)
      : Error("QuadratureFailure", what) {}
};

class ZeroOnBoundary : public Error {
 public:
  explicit ZeroOnBoundary(const std::string& what)
      : Error("ZeroOnBoundary", what) {}
};

class NonIntegerWinding : public Error {
 public:
  explicit NonIntegerWinding(const std::string& what)
      : Error("NonIntegerWinding", what) {}
};

class DerivativeVanishes : public Error {
 public:
  explicit DerivativeVanishes(const std::string& what)
      : Error("DerivativeVanishes", what) {}
};

class SubdivisionLimit : public Error {
 public:
  explicit SubdivisionLimit(const std::string& what)
      : Error("SubdivisionLimit", what) {}
};

class BetaZero : public Error {
 public:
  explicit BetaZero(const std::string& what) : Error("BetaZero", what) {}
};

class StepMismatch : public Error {
 public:
  explicit StepMismatch(const std::string& what) : Error("StepMismatch", what) {}
};

class Instability : public Error {
 public:
  explicit Instability(const std::string& what) : Error("Instability", what) {}
};

class WindowEmpty : public Error {
 public:
  explicit WindowEmpty(const std::string& what) : Error("WindowEmpty", what) {}
};

class SignalUnderflow : public Error {
 public:
  explicit SignalUnderflow(const std::string& what)
      : Error("SignalUnderflow", what) {}
};

}  // namespace respoles
