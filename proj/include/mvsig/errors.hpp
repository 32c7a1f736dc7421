#pragma once

#include <stdexcept>
#include <string>

namespace mvsig {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

/// A Hermitian matrix has an eigenvalue below -psd_tol * ||P||_F.
class IndefiniteMatrix : public Error {
 public:
  using Error::Error;
};

/// An inverse (square root) was requested for a numerically singular matrix.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Gram-Schmidt hit a degenerate intermediate signal. The input family is
/// therefore not linearly independent.
class DegenerateStep : public Error {
 public:
  DegenerateStep(std::size_t step, const std::string& what);
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class NotOrthonormal : public Error {
 public:
  using Error::Error;
};

class NotReal : public Error {
 public:
  using Error::Error;
};

class NonIntegerCoefficient : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InfeasibleParameters : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; path() names the offending JSON location.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what);
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace mvsig
