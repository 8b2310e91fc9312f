#pragma once

#include <stdexcept>
#include <string>

namespace hallmhd {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A field was handed to an operation expecting the other representation.
class RepresentationMismatch : public Error {
 public:
  using Error::Error;
};

/// The density perturbation left the validated band 1/2 <= rho+1 <= 3/2
/// (or rho+1 <= 0 for the raw coefficient functions).
class RegimeViolation : public Error {
 public:
  RegimeViolation(std::string field, double extremum, std::string detail)
      : Error("regime violation in " + field + " (extremum " + std::to_string(extremum) +
              "): " + detail),
        field_(std::move(field)),
        extremum_(extremum) {}

  const std::string& field() const { return field_; }
  double extremum() const { return extremum_; }

 private:
  std::string field_;
  double extremum_;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double error_estimate)
      : Error(what + " (achieved error estimate " + std::to_string(error_estimate) + ")"),
        error_estimate_(error_estimate) {}

  double error_estimate() const { return error_estimate_; }

 private:
  double error_estimate_;
};

class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class SnapshotError : public Error {
 public:
  using Error::Error;
};

class BadMagic : public SnapshotError {
 public:
  using SnapshotError::SnapshotError;
};

class VersionMismatch : public SnapshotError {
 public:
  using SnapshotError::SnapshotError;
};

class TruncatedPayload : public SnapshotError {
 public:
  using SnapshotError::SnapshotError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hallmhd
