#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace camflow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument or a domain-type invariant was violated.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class InvalidDepthError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A point landed on or behind the camera plane (z <= kMinDepth) after the
/// rigid transform.
class BehindCameraError : public Error {
 public:
  BehindCameraError(const std::string& what, const Eigen::Vector3d& camera_point)
      : Error(what), camera_point_(camera_point) {}

  const Eigen::Vector3d& camera_point() const noexcept { return camera_point_; }

 private:
  Eigen::Vector3d camera_point_;
};

/// Malformed text input. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Malformed binary input (bad magic, truncated payload, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace camflow
