#pragma once

#include <stdexcept>
#include <string>

namespace lagfe {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDenominatorError : public Error {
 public:
  ZeroDenominatorError() : Error("zero denominator") {}
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class NonSquareError : public Error {
 public:
  using Error::Error;
};

/// Raised by exact solves and affine inversions on a singular matrix.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class BoundsError : public Error {
 public:
  using Error::Error;
};

/// A multi-index whose length exceeds the degree bound of the target set.
class LengthExceedsError : public Error {
 public:
  using Error::Error;
};

/// Repeated node passed to the univariate Lagrange product formula.
class DuplicateNodeError : public Error {
 public:
  using Error::Error;
};

/// Vertex family is not affinely independent.
class DegenerateSimplexError : public Error {
 public:
  using Error::Error;
};

/// A polynomial that was required to vanish on a face hyperplane does not.
class NotVanishingError : public Error {
 public:
  using Error::Error;
};

class NonUnisolventError : public Error {
 public:
  using Error::Error;
};

/// Something the mathematics guarantees did not hold; indicates a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class UnknownLemmaError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace lagfe
