// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace berlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid grid descriptor or model/grid mismatch.
struct GridError : Error {
  using Error::Error;
};

/// Operator/space dimension mismatch or index out of range.
struct DimensionError : Error {
  using Error::Error;
};

/// Eigensolver or decomposition failure, non-finite data.
struct NumericError : Error {
  using Error::Error;
};

/// A function pair (f, g) violated f(t)g(t) = t at an evaluation point.
struct PairViolation : Error {
  using Error::Error;
};

/// Bad run configuration (unknown suite, parameter out of a certifier's domain).
struct ConfigError : Error {
  using Error::Error;
};

inline void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols())
    throw DimensionError(std::string(what) + ": matrix is not square");
}

inline void require_same_dim(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(what) + ": dimension mismatch");
}

inline void require_finite(const Matrix& a, const char* what) {
  if (!a.allFinite()) throw NumericError(std::string(what) + ": non-finite entries");
}

}  // namespace berlab
