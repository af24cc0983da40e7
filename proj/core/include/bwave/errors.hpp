#pragma once

#include <stdexcept>
#include <string>

namespace bwave {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a special function (non-finite input,
/// logarithmic singularity at the origin, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The exact result is finite but not representable in double precision.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, double threshold)
      : Error(what), threshold_(threshold) {}

  /// Largest argument for which the value is still representable.
  double threshold() const noexcept { return threshold_; }

 private:
  double threshold_;
};

/// Mode indices out of range, e.g. |m| > n for spherical harmonics.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold (coincident points, interior
/// evaluation point, |x| <= |y| for a multipole sum, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Invalid physical or construction parameter.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A normalising integral vanished numerically.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Source support is not contained where it must be.
class SupportError : public Error {
 public:
  using Error::Error;
};

/// Independent characterisations disagree; usually the truncation is too
/// low.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace bwave
