#pragma once

#include <stdexcept>
#include <string>

namespace confbound {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A map was evaluated at (or numerically at) a pole, or produced a
/// non-finite value.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two successive quadrature refinements disagree by more than 50%.
class QuadratureDivergence : public Error {
 public:
  using Error::Error;
};

class RasterError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class InfiniteNorm : public Error {
 public:
  using Error::Error;
};

/// Gap bounds require an image of area pi.
class AreaMismatch : public Error {
 public:
  using Error::Error;
};

class NoValidBound : public Error {
 public:
  using Error::Error;
};

/// Malformed domain-spec input.
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace confbound
