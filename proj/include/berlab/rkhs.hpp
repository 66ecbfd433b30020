// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "berlab/types.hpp"

namespace berlab {

enum class GridKind { DiscPolar, RealInterval, IndexSet };

/// Finite sampling Omega of the domain of a function space.
struct GridSpec {
  GridKind kind = GridKind::IndexSet;
  // disc-polar
  int radial = 0;
  int angular = 0;
  double rmax = 0.95;
  // real-interval
  double a = 0.0;
  double b = 0.0;
  int count = 0;
  // index-set
  int size = 0;
};

struct DomainGrid {
  std::vector<Complex> points;
  GridSpec spec;

  int size() const { return static_cast<int>(points.size()); }
};

enum class ModelKind { Diagonal, Hardy, Bergman, CustomGram };

std::string to_string(ModelKind m);
std::string to_string(GridKind g);

/// A finite-dimensional model of an RKHS: an orthonormal-basis truncation of
/// size `dim` together with the normalized reproducing kernel at each grid
/// point, stored column-wise.
class SampledSpace {
 public:
  SampledSpace(ModelKind model, int dim, DomainGrid grid, Matrix normalized_kernels,
               RealVector kernel_norms);

  ModelKind model() const { return model_; }
  int dim() const { return dim_; }
  const DomainGrid& grid() const { return grid_; }
  int num_points() const { return grid_.size(); }

  /// Unit-norm kernel coordinate vector at a grid point (stored, never recomputed).
  Vector normalized_kernel(int index) const;

  /// All normalized kernels as a dim x num_points matrix.
  const Matrix& kernels() const { return kernels_; }

  /// Norm of the unnormalized kernel k_lambda at a grid point.
  double kernel_norm(int index) const;

 private:
  ModelKind model_;
  int dim_;
  DomainGrid grid_;
  Matrix kernels_;       // dim x num_points, unit columns
  RealVector norms_;     // ||k_lambda|| per point
};

DomainGrid make_grid(const GridSpec& spec);

SampledSpace build_space(ModelKind model, int dim, const GridSpec& grid);

/// Custom-gram model: caller supplies unnormalized kernel coordinate columns.
SampledSpace build_custom_space(int dim, DomainGrid grid, const Matrix& raw_kernels);

/// H(Omega1) (+) H(Omega2) with the product grid; each pair kernel is the
/// stack of the two unnormalized kernels, renormalized to unit norm.
class DirectSumSpace {
 public:
  DirectSumSpace(const SampledSpace& left, const SampledSpace& right);

  const SampledSpace& left() const { return left_; }
  const SampledSpace& right() const { return right_; }
  int dim() const { return left_.dim() + right_.dim(); }
  int num_points() const { return static_cast<int>(pair_grid_.size()); }

  std::pair<int, int> pair_point(int index) const;
  Vector normalized_kernel(int index) const;
  const Matrix& kernels() const { return kernels_; }

 private:
  SampledSpace left_;
  SampledSpace right_;
  std::vector<std::pair<int, int>> pair_grid_;  // (left index, right index)
  Matrix kernels_;                              // (dim1+dim2) x (n1*n2), unit columns
};

DirectSumSpace direct_sum(const SampledSpace& left, const SampledSpace& right);

}  // namespace berlab
