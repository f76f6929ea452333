#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieform {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class AmbientMismatch : public Error {
 public:
  AmbientMismatch() : Error("subspaces live in different ambient spaces") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class JacobiViolation : public Error {
 public:
  // 1-based basis indices, matching the file format.
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k)
      : Error("Jacobi identity fails on basis triple (" + std::to_string(i) + ", " +
              std::to_string(j) + ", " + std::to_string(k) + ")"),
        i_(i),
        j_(j),
        k_(k) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }

 private:
  std::size_t i_, j_, k_;
};

class NotSoluble : public Error {
 public:
  NotSoluble() : Error("Lie algebra is not soluble") {}
};

class NotNested : public Error {
 public:
  NotNested() : Error("lower ideal is not contained in upper ideal") {}
};

class NotAnIdeal : public Error {
 public:
  NotAnIdeal() : Error("subspace is not an ideal") {}
};

class NotASubalgebra : public Error {
 public:
  NotASubalgebra() : Error("subspace is not closed under the bracket") {}
};

class ZeroAlgebra : public Error {
 public:
  ZeroAlgebra() : Error("operation requires a nonzero algebra") {}
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class InvalidModule : public Error {
 public:
  using Error::Error;
};

class NotADerivation : public Error {
 public:
  NotADerivation() : Error("matrix does not satisfy the Leibniz rule") {}
};

/// The two equivalent normality criteria for a maximal subalgebra disagreed.
/// Always an implementation bug.
class CriteriaDisagree : public Error {
 public:
  using Error::Error;
};

/// L is outside the formation but has no critical maximal subalgebra.
class NoCriticalDescent : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace lieform
