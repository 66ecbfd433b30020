// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "berlab/types.hpp"

namespace berlab {

/// Conjugate transpose.
Matrix adjoint(const Matrix& a);

bool is_hermitian(const Matrix& a, double tol_scale = 1e-12);

/// |A| = (A*A)^{1/2}. Eigenvalues of A*A are clamped at zero before the root.
Matrix modulus(const Matrix& a);

/// A = U P with P = |A|; U is unitary (the deterministic completion of the
/// singular-vector correspondence, from a full SVD).
std::pair<Matrix, Matrix> polar_decompose(const Matrix& a);

enum class ClampPolicy { None, ToZero };

/// Apply a scalar map to a Hermitian matrix through its eigendecomposition.
/// With ClampPolicy::ToZero, eigenvalues in [-1e-10, 0) are clamped to 0 and
/// anything below -1e-10 is an error (non-PSD input where PSD was required).
Matrix herm_fun(const std::function<double(double)>& f, const Matrix& h,
                ClampPolicy clamp = ClampPolicy::None);

/// Eigenvalues of a Hermitian matrix, ascending, with the same clamping rule.
RealVector herm_eigenvalues(const Matrix& h, ClampPolicy clamp = ClampPolicy::None);

double spectral_radius(const Matrix& a);
double op_norm(const Matrix& a);

/// l(A): smallest singular value.
double min_modulus(const Matrix& a);

/// A = B + iC with both parts Hermitian.
std::pair<Matrix, Matrix> cartesian_parts(const Matrix& a);

/// [[0, B], [C, 0]] acting on the direct sum; B maps right into left.
Matrix block_offdiag(const Matrix& b, const Matrix& c);

/// Re(e^{i theta} A) = (e^{i theta} A + e^{-i theta} A*)/2.
Matrix rotated_real_part(const Matrix& a, double theta);

/// A pair (f, g) of nonnegative maps on [0, inf) with f(t) g(t) = t,
/// enforced at every eigenvalue where the pair is applied.
class FunctionPair {
 public:
  static FunctionPair power(double alpha);

  /// Tabulated pair, linearly interpolated in t. Samples are (t, f(t), g(t))
  /// with t ascending; the product check runs at construction on the samples
  /// and again at application points.
  static FunctionPair tabulated(std::vector<std::array<double, 3>> samples);

  double f(double t) const;
  double g(double t) const;

  bool is_power() const { return is_power_; }
  double alpha() const { return alpha_; }
  std::string describe() const;

  /// Throws PairViolation if f(t) g(t) deviates from t beyond 1e-10 relative.
  void check_product(const RealVector& spectrum) const;

  /// f(|H|ermitian PSD) etc. via functional calculus.
  Matrix apply_f(const Matrix& psd) const;
  Matrix apply_g(const Matrix& psd) const;
  /// f(t)^s applied to a PSD matrix, with the product invariant checked first.
  Matrix apply_f_pow(double s, const Matrix& psd) const;
  Matrix apply_g_pow(double s, const Matrix& psd) const;

 private:
  FunctionPair() = default;
  bool is_power_ = false;
  double alpha_ = 0.0;
  std::vector<std::array<double, 3>> samples_;
  double interp(int column, double t) const;
};

/// t^s with pow(0, 0) := 1, so power-0 maps send PSD matrices to the identity.
double real_pow(double t, double s);

}  // namespace berlab
