#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

namespace minkhelix {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error("parse error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset),
        detail_(message) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

/// A κ/τ model that fails its domain validation (κ ≤ 0, τ = 0, bad bounds).
class InvalidModel : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

/// |τ/κ| ≤ 1: no time-like general helix has these intrinsic equations.
class NonTimelikeHelix : public Error {
 public:
  explicit NonTimelikeHelix(double ratio)
      : Error(describe(ratio)), ratio_(ratio) {}

  double ratio() const noexcept { return ratio_; }

 private:
  static std::string describe(double ratio) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "not a time-like general helix: |tau/kappa| = " << (ratio < 0 ? -ratio : ratio) << " <= 1";
    return msg.str();
  }

  double ratio_;
};

class NotGeneralHelix : public Error {
 public:
  using Error::Error;
};

class DegenerateFrame : public Error {
 public:
  using Error::Error;
};

class FrameDrift : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class InsufficientSamples : public Error {
 public:
  using Error::Error;
};

class NonTimelikeAxis : public Error {
 public:
  using Error::Error;
};

}  // namespace minkhelix
