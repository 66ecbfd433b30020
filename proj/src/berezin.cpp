// SPDX-License-Identifier: Apache-2.0
#include "berlab/berezin.hpp"

#include <cmath>
#include <numbers>

namespace berlab {

namespace {

void require_dim(const Matrix& a, int dim, const char* what) {
  require_square(a, what);
  if (a.rows() != dim)
    throw DimensionError(std::string(what) + ": operator dim does not match space");
}

}  // namespace

BerezinEvaluation berezin_set_kernels(const Matrix& a, const Matrix& kernels) {
  BerezinEvaluation out;
  int n = static_cast<int>(kernels.cols());
  out.values.resize(n);
  Matrix ak = a * kernels;  // one GEMM, then per-column quadratic forms
  for (int i = 0; i < n; ++i)
    out.values[i] = kernels.col(i).dot(ak.col(i));
  out.argmax_index = 0;
  out.ber_value = 0.0;
  for (int i = 0; i < n; ++i) {
    double m = std::abs(out.values[i]);
    if (m > out.ber_value) {
      out.ber_value = m;
      out.argmax_index = i;
    }
  }
  return out;
}

Complex berezin_symbol(const Matrix& a, const SampledSpace& space, int index) {
  require_dim(a, space.dim(), "berezin_symbol");
  Vector k = space.normalized_kernel(index);
  return k.dot(a * k);
}

Complex berezin_symbol(const Matrix& a, const DirectSumSpace& space, int index) {
  require_dim(a, space.dim(), "berezin_symbol");
  Vector k = space.normalized_kernel(index);
  return k.dot(a * k);
}

BerezinEvaluation berezin_set(const Matrix& a, const SampledSpace& space) {
  require_dim(a, space.dim(), "berezin_set");
  return berezin_set_kernels(a, space.kernels());
}

BerezinEvaluation berezin_set(const Matrix& a, const DirectSumSpace& space) {
  require_dim(a, space.dim(), "berezin_set");
  return berezin_set_kernels(a, space.kernels());
}

double berezin_number(const Matrix& a, const SampledSpace& space) {
  return berezin_set(a, space).ber_value;
}

double berezin_number(const Matrix& a, const DirectSumSpace& space) {
  return berezin_set(a, space).ber_value;
}

namespace {

template <class Space>
double rotation_scan_impl(const Matrix& a, const Space& space, int angle_count) {
  if (angle_count < 4) throw ConfigError("rotation scan needs angleCount >= 4");
  double best = 0.0;
  for (int m = 0; m < angle_count; ++m) {
    double theta = 2.0 * std::numbers::pi * m / angle_count;
    best = std::max(best, berezin_number(rotated_real_part(a, theta), space));
  }
  return best;
}

}  // namespace

double rotation_scan_ber(const Matrix& a, const SampledSpace& space, int angle_count) {
  require_dim(a, space.dim(), "rotation_scan_ber");
  return rotation_scan_impl(a, space, angle_count);
}

double rotation_scan_ber(const Matrix& a, const DirectSumSpace& space,
                         int angle_count) {
  require_dim(a, space.dim(), "rotation_scan_ber");
  return rotation_scan_impl(a, space, angle_count);
}

}  // namespace berlab
