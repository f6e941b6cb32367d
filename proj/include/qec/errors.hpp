#pragma once

#include <stdexcept>
#include <string>

namespace qec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-supplied parameters (sizes, family names, file contents).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its stated domain (disconnected graph,
/// |V| too small, non-regular H where regularity is required).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed to meet its residual or convergence bound.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Shifted solve requested at (or within tolerance of) a singular shift.
class SingularShiftError : public Error {
 public:
  using Error::Error;
};

/// Rational function evaluated at a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Root search found no admissible real root.
class FormulaInapplicableError : public Error {
 public:
  using Error::Error;
};

/// Query value not in the computed spectrum.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace qec
