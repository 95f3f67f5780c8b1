#pragma once

#include <stdexcept>
#include <string>

namespace glfem {

/// Bad argument to a library entry point (sizes, indices, grid mismatches).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation requires data or structure the caller did not supply.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mesh cannot be used for the requested operation (odd m for macro patches).
class UnsupportedMesh : public Unsupported {
 public:
  using Unsupported::Unsupported;
};

/// Linear solve did not reach the requested residual.
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Malformed study configuration (config file or command-line flags).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, std::string path)
      : std::runtime_error(what + ": " + path), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace glfem
