#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace krein {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default absolute tolerance for identities that hold exactly in coordinates.
inline constexpr double kExactTol = 1e-12;
/// Default tolerance for span, closure and residual tests on matrix algebras.
inline constexpr double kSpanTol = 1e-9;
/// Default tolerance for character residuals.
inline constexpr double kCharacterTol = 1e-8;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an algebra fails validation at construction.
class InvalidAlgebraError : public Error {
 public:
  using Error::Error;
};

/// An ambient matrix or coordinate vector does not lie in the algebra's span.
class OutsideSpanError : public Error {
 public:
  using Error::Error;
};

class NotOddError : public Error {
 public:
  using Error::Error;
};

class NotIdealError : public Error {
 public:
  using Error::Error;
};

class NotAlphaInvariantError : public Error {
 public:
  using Error::Error;
};

class NotCommutativeError : public Error {
 public:
  using Error::Error;
};

class ClusteringError : public Error {
 public:
  using Error::Error;
};

class MissingOddGeneratorError : public Error {
 public:
  using Error::Error;
};

/// Hypotheses of the spectral theorem, in the order they are tested.
enum class Hypothesis { Commutative, Full, OddSymmetry };

class PreconditionError : public Error {
 public:
  PreconditionError(Hypothesis which, const std::string& what)
      : Error(what), which_(which) {}
  Hypothesis hypothesis() const noexcept { return which_; }

 private:
  Hypothesis which_;
};

/// Instance file does not match the schema. `field` is a JSON-pointer-like path.
class SchemaError : public Error {
 public:
  SchemaError(std::string field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace krein
