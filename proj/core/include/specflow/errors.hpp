#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace specflow {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-supplied configuration. `key()` names the offending setting
/// when one is known (e.g. "grid.n"), otherwise it is empty.
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& message, std::string key = {});
  const std::string& key() const noexcept { return key_; }

private:
  std::string key_;
};

/// Non-finite values where finite ones are required.
class NumericError : public Error {
public:
  using Error::Error;
};

/// Requested operation is outside what the grid/model supports.
class UnsupportedOperation : public Error {
public:
  using Error::Error;
};

/// Two fields that must share a grid do not.
class ShapeError : public Error {
public:
  using Error::Error;
};

/// IMEX table would divide by zero (h * L = 1 at some mode).
class SingularTableError : public Error {
public:
  using Error::Error;
};

/// Solution blew up during time stepping.
class DivergenceError : public Error {
public:
  DivergenceError(std::int64_t step_index, double max_abs);
  std::int64_t step_index() const noexcept { return step_index_; }
  double max_abs() const noexcept { return max_abs_; }

private:
  std::int64_t step_index_;
  double max_abs_;
};

/// Reading or writing run artifacts failed.
class IoError : public Error {
public:
  using Error::Error;
};

/// An input file (config, manifest, frame) does not exist.
class MissingFileError : public IoError {
public:
  using IoError::IoError;
};

}  // namespace specflow
