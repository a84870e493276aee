// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace altgraph {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed arguments, out-of-range values, mismatched sizes.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ParityError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class RangeError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Computational failures: solver did not converge, size cap exceeded.
class ComputationError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class ConvergenceError : public ComputationError {
 public:
  ConvergenceError(const std::string& what, double last_residual)
      : ComputationError(what), last_residual_(last_residual) {}

  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

}  // namespace altgraph
