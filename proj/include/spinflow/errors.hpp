#pragma once

#include <stdexcept>
#include <string>

namespace spinflow {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand sizes disagree (rep dimension, spinor length, matrix shape).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the supported domain (index range, zero spinor, bad J).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Structure constants violate the Jacobi identity.
class JacobiViolation : public Error {
 public:
  JacobiViolation(const std::string& what, int i, int j, int k, double residual)
      : Error(what), i_(i), j_(j), k_(k), residual_(residual) {}

  /// Worst triple, 0-based.
  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }
  double residual() const { return residual_; }

 private:
  int i_, j_, k_;
  double residual_;
};

/// The spinor is not an eigenvector of the squared Dirac operator.
class NotAnEigenspinor : public Error {
 public:
  NotAnEigenspinor(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// An operation requiring a Riemannian flow received a non-Riemannian one.
class NonRiemannianFlow : public Error {
 public:
  using Error::Error;
};

/// The Ricci tensor does not fit beta*g + gamma*xi(x)xi.
class NotEtaEinstein : public Error {
 public:
  NotEtaEinstein(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Malformed manifold description. Carries the category used by the CLI.
class SpecError : public Error {
 public:
  enum class Kind { Parse, Schema, Semantic };

  SpecError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace spinflow
