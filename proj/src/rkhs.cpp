// SPDX-License-Identifier: Apache-2.0
#include "berlab/rkhs.hpp"

#include <cmath>
#include <numbers>

namespace berlab {

std::string to_string(ModelKind m) {
  switch (m) {
    case ModelKind::Diagonal: return "diagonal";
    case ModelKind::Hardy: return "hardy";
    case ModelKind::Bergman: return "bergman";
    case ModelKind::CustomGram: return "custom";
  }
  return "?";
}

std::string to_string(GridKind g) {
  switch (g) {
    case GridKind::DiscPolar: return "disc";
    case GridKind::RealInterval: return "interval";
    case GridKind::IndexSet: return "index";
  }
  return "?";
}

DomainGrid make_grid(const GridSpec& spec) {
  DomainGrid grid;
  grid.spec = spec;
  switch (spec.kind) {
    case GridKind::DiscPolar: {
      if (spec.radial < 1 || spec.angular < 1)
        throw GridError("disc grid needs radial >= 1 and angular >= 1");
      if (!(spec.rmax > 0.0 && spec.rmax < 1.0))
        throw GridError("disc grid needs 0 < rmax < 1");
      grid.points.reserve(static_cast<size_t>(spec.radial) * spec.angular);
      for (int i = 0; i < spec.radial; ++i) {
        // radii start at rmax/radial so r = 0 is never duplicated across angles
        double r = spec.rmax * (i + 1) / spec.radial;
        for (int j = 0; j < spec.angular; ++j) {
          double theta = 2.0 * std::numbers::pi * j / spec.angular;
          grid.points.push_back(std::polar(r, theta));
        }
      }
      break;
    }
    case GridKind::RealInterval: {
      if (spec.count < 1) throw GridError("interval grid needs count >= 1");
      if (!(spec.a < spec.b) && spec.count > 1)
        throw GridError("interval grid needs a < b");
      for (int i = 0; i < spec.count; ++i) {
        double t = spec.count == 1 ? spec.a
                                   : spec.a + (spec.b - spec.a) * i / (spec.count - 1);
        grid.points.emplace_back(t, 0.0);
      }
      break;
    }
    case GridKind::IndexSet: {
      if (spec.size < 1) throw GridError("index grid needs size >= 1");
      for (int i = 0; i < spec.size; ++i) grid.points.emplace_back(i + 1, 0.0);
      break;
    }
  }
  if (grid.points.empty()) throw GridError("empty grid");
  return grid;
}

SampledSpace::SampledSpace(ModelKind model, int dim, DomainGrid grid,
                           Matrix normalized_kernels, RealVector kernel_norms)
    : model_(model),
      dim_(dim),
      grid_(std::move(grid)),
      kernels_(std::move(normalized_kernels)),
      norms_(std::move(kernel_norms)) {
  if (dim_ < 1) throw GridError("space dim must be >= 1");
  if (kernels_.rows() != dim_ || kernels_.cols() != grid_.size())
    throw DimensionError("kernel matrix shape does not match dim/grid");
}

Vector SampledSpace::normalized_kernel(int index) const {
  if (index < 0 || index >= num_points())
    throw DimensionError("grid point index out of range");
  return kernels_.col(index);
}

double SampledSpace::kernel_norm(int index) const {
  if (index < 0 || index >= num_points())
    throw DimensionError("grid point index out of range");
  return norms_(index);
}

namespace {

// Kernel coordinates at lambda in the orthonormal basis: conj(e_j(lambda)).
Vector raw_kernel(ModelKind model, int dim, Complex lambda) {
  Vector k(dim);
  Complex lb = std::conj(lambda);
  Complex pw = 1.0;
  for (int j = 0; j < dim; ++j) {
    switch (model) {
      case ModelKind::Hardy: k(j) = pw; break;
      case ModelKind::Bergman: k(j) = std::sqrt(double(j + 1)) * pw; break;
      default: throw GridError("raw_kernel: unsupported model");
    }
    pw *= lb;
  }
  return k;
}

}  // namespace

SampledSpace build_space(ModelKind model, int dim, const GridSpec& spec) {
  if (dim < 1) throw GridError("build_space: dim must be >= 1");
  switch (model) {
    case ModelKind::Diagonal: {
      if (spec.kind != GridKind::IndexSet)
        throw GridError("diagonal model requires an index-set grid");
      GridSpec s = spec;
      s.size = dim;
      DomainGrid grid = make_grid(s);
      Matrix kernels = Matrix::Identity(dim, dim);
      RealVector norms = RealVector::Ones(dim);
      return SampledSpace(model, dim, std::move(grid), std::move(kernels),
                          std::move(norms));
    }
    case ModelKind::Hardy:
    case ModelKind::Bergman: {
      if (spec.kind == GridKind::IndexSet)
        throw GridError("hardy/bergman models need a disc or interval grid");
      if (spec.kind == GridKind::DiscPolar && !(spec.rmax < 1.0))
        throw GridError("disc grid rmax must be < 1");
      if (spec.kind == GridKind::RealInterval &&
          (std::abs(spec.a) >= 1.0 || std::abs(spec.b) >= 1.0))
        throw GridError("interval grid must lie inside (-1, 1) for disc models");
      DomainGrid grid = make_grid(spec);
      int n = grid.size();
      Matrix kernels(dim, n);
      RealVector norms(n);
      for (int i = 0; i < n; ++i) {
        Vector k = raw_kernel(model, dim, grid.points[i]);
        double nk = k.norm();
        norms(i) = nk;
        kernels.col(i) = k / nk;
      }
      return SampledSpace(model, dim, std::move(grid), std::move(kernels),
                          std::move(norms));
    }
    case ModelKind::CustomGram:
      throw GridError("custom model requires explicit kernels; use build_custom_space");
  }
  throw GridError("unknown model");
}

SampledSpace build_custom_space(int dim, DomainGrid grid, const Matrix& raw_kernels) {
  if (raw_kernels.rows() != dim || raw_kernels.cols() != grid.size())
    throw DimensionError("custom kernels shape does not match dim/grid");
  require_finite(raw_kernels, "custom kernels");
  int n = grid.size();
  Matrix kernels(dim, n);
  RealVector norms(n);
  for (int i = 0; i < n; ++i) {
    double nk = raw_kernels.col(i).norm();
    if (!(nk > 0.0)) throw NumericError("custom kernel has zero norm");
    norms(i) = nk;
    kernels.col(i) = raw_kernels.col(i) / nk;
  }
  return SampledSpace(ModelKind::CustomGram, dim, std::move(grid), std::move(kernels),
                      std::move(norms));
}

DirectSumSpace::DirectSumSpace(const SampledSpace& left, const SampledSpace& right)
    : left_(left), right_(right) {
  int n1 = left_.num_points(), n2 = right_.num_points();
  int d1 = left_.dim(), d2 = right_.dim();
  pair_grid_.reserve(static_cast<size_t>(n1) * n2);
  kernels_.resize(d1 + d2, n1 * n2);
  int c = 0;
  for (int i = 0; i < n1; ++i) {
    Vector ki = left_.normalized_kernel(i) * left_.kernel_norm(i);
    for (int j = 0; j < n2; ++j, ++c) {
      Vector kj = right_.normalized_kernel(j) * right_.kernel_norm(j);
      pair_grid_.emplace_back(i, j);
      kernels_.col(c).head(d1) = ki;
      kernels_.col(c).tail(d2) = kj;
      kernels_.col(c) /= kernels_.col(c).norm();
    }
  }
}

std::pair<int, int> DirectSumSpace::pair_point(int index) const {
  if (index < 0 || index >= num_points())
    throw DimensionError("pair grid index out of range");
  return pair_grid_[index];
}

Vector DirectSumSpace::normalized_kernel(int index) const {
  if (index < 0 || index >= num_points())
    throw DimensionError("pair grid index out of range");
  return kernels_.col(index);
}

DirectSumSpace direct_sum(const SampledSpace& left, const SampledSpace& right) {
  return DirectSumSpace(left, right);
}

}  // namespace berlab
