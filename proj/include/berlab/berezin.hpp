// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "berlab/calculus.hpp"
#include "berlab/rkhs.hpp"
#include "berlab/types.hpp"

namespace berlab {

/// The Berezin symbol sampled over a grid, with its maximizing point.
struct BerezinEvaluation {
  std::vector<Complex> values;  // A~(lambda) per grid point
  int argmax_index = 0;         // first index attaining the max modulus
  double ber_value = 0.0;       // max |A~(lambda)|
};

/// A~(lambda) = <A k_hat, k_hat> at one grid point.
Complex berezin_symbol(const Matrix& a, const SampledSpace& space, int index);
Complex berezin_symbol(const Matrix& a, const DirectSumSpace& space, int index);

BerezinEvaluation berezin_set(const Matrix& a, const SampledSpace& space);
BerezinEvaluation berezin_set(const Matrix& a, const DirectSumSpace& space);

double berezin_number(const Matrix& a, const SampledSpace& space);
double berezin_number(const Matrix& a, const DirectSumSpace& space);

/// max over a uniform grid of angles of ber(Re(e^{i theta} A)); sandwiched in
/// [cos(pi/angleCount) ber(A), ber(A)].
double rotation_scan_ber(const Matrix& a, const SampledSpace& space, int angle_count);
double rotation_scan_ber(const Matrix& a, const DirectSumSpace& space, int angle_count);

/// Symbol values against an explicit unit-column kernel matrix.
BerezinEvaluation berezin_set_kernels(const Matrix& a, const Matrix& kernels);

}  // namespace berlab
