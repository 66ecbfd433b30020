// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "berlab/rkhs.hpp"

using namespace berlab;

namespace {

GridSpec disc(int radial, int angular, double rmax = 0.95) {
  GridSpec g;
  g.kind = GridKind::DiscPolar;
  g.radial = radial;
  g.angular = angular;
  g.rmax = rmax;
  return g;
}

GridSpec index_grid() {
  GridSpec g;
  g.kind = GridKind::IndexSet;
  return g;
}

GridSpec interval(double a, double b, int count) {
  GridSpec g;
  g.kind = GridKind::RealInterval;
  g.a = a;
  g.b = b;
  g.count = count;
  return g;
}

}  // namespace

TEST_CASE("diagonal model kernels are standard basis vectors, exactly") {
  auto space = build_space(ModelKind::Diagonal, 3, index_grid());
  CHECK(space.num_points() == 3);
  for (int j = 0; j < 3; ++j) {
    Vector k = space.normalized_kernel(j);
    for (int i = 0; i < 3; ++i)
      CHECK(k(i) == (i == j ? Complex(1, 0) : Complex(0, 0)));
  }
}

TEST_CASE("hardy kernel at the origin is e_0") {
  auto space = build_space(ModelKind::Hardy, 3, interval(0.0, 0.5, 2));
  Vector k0 = space.normalized_kernel(0);
  CHECK(k0(0) == Complex(1, 0));
  CHECK(k0(1) == Complex(0, 0));
  CHECK(k0(2) == Complex(0, 0));
}

TEST_CASE("hardy kernel at lambda = 0.5, dim 3") {
  // oracle: raw kernel (1, 0.5, 0.25), squared norm 1 + 0.25 + 0.0625 = 1.3125
  auto space = build_space(ModelKind::Hardy, 3, interval(0.0, 0.5, 2));
  Vector k = space.normalized_kernel(1);
  double s = std::sqrt(1.3125);
  CHECK(std::abs(k(0) - Complex(1.0 / s)) < 1e-15);
  CHECK(std::abs(k(1) - Complex(0.5 / s)) < 1e-15);
  CHECK(std::abs(k(2) - Complex(0.25 / s)) < 1e-15);
  CHECK(space.kernel_norm(1) == doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("kernel norms match the closed-form sums on a 20x64 disc grid") {
  int dim = 8;
  auto hardy = build_space(ModelKind::Hardy, dim, disc(20, 64));
  auto bergman = build_space(ModelKind::Bergman, dim, disc(20, 64));
  for (int i = 0; i < hardy.num_points(); ++i) {
    double r2 = std::norm(hardy.grid().points[i]);
    double geo = 0.0, wgt = 0.0, pw = 1.0;
    for (int j = 0; j < dim; ++j) {
      geo += pw;
      wgt += (j + 1) * pw;
      pw *= r2;
    }
    double nh = hardy.kernel_norm(i);
    double nb = bergman.kernel_norm(i);
    CHECK(std::abs(nh * nh - geo) < 1e-12 * std::max(1.0, geo));
    CHECK(std::abs(nb * nb - wgt) < 1e-12 * std::max(1.0, wgt));
    CHECK(std::abs(hardy.normalized_kernel(i).norm() - 1.0) < 1e-12);
    CHECK(std::abs(bergman.normalized_kernel(i).norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("rebuilding a space gives bit-identical kernels") {
  auto a = build_space(ModelKind::Bergman, 5, disc(6, 12, 0.8));
  auto b = build_space(ModelKind::Bergman, 5, disc(6, 12, 0.8));
  REQUIRE(a.kernels().size() == b.kernels().size());
  CHECK(std::memcmp(a.kernels().data(), b.kernels().data(),
                    sizeof(Complex) * a.kernels().size()) == 0);
}

TEST_CASE("grid and model validation") {
  CHECK_THROWS_AS(build_space(ModelKind::Hardy, 3, disc(4, 8, 1.0)), GridError);
  CHECK_THROWS_AS(build_space(ModelKind::Hardy, 3, disc(0, 8, 0.5)), GridError);
  CHECK_THROWS_AS(build_space(ModelKind::Diagonal, 3, disc(4, 8, 0.5)), GridError);
  CHECK_THROWS_AS(build_space(ModelKind::Hardy, 3, index_grid()), GridError);
  auto space = build_space(ModelKind::Diagonal, 2, index_grid());
  CHECK_THROWS_AS(space.normalized_kernel(2), DimensionError);
  CHECK_THROWS_AS(space.normalized_kernel(-1), DimensionError);
}

TEST_CASE("disc grid points are distinct and inside rmax") {
  auto grid = make_grid(disc(5, 9, 0.7));
  CHECK(grid.size() == 45);
  for (int i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(grid.points[i]) <= 0.7 + 1e-15);
    for (int j = i + 1; j < grid.size(); ++j)
      CHECK(grid.points[i] != grid.points[j]);
  }
}

TEST_CASE("direct sum of two 1-dim diagonal spaces") {
  auto left = build_space(ModelKind::Diagonal, 1, index_grid());
  auto sum = direct_sum(left, left);
  REQUIRE(sum.num_points() == 1);
  Vector k = sum.normalized_kernel(0);
  double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(k(0) - Complex(s)) < 1e-15);
  CHECK(std::abs(k(1) - Complex(s)) < 1e-15);
}

TEST_CASE("direct sum of 2-dim diagonal spaces has four pair points") {
  auto d2 = build_space(ModelKind::Diagonal, 2, index_grid());
  auto sum = direct_sum(d2, d2);
  REQUIRE(sum.num_points() == 4);
  double s = 1.0 / std::sqrt(2.0);
  for (int c = 0; c < 4; ++c) {
    auto [i, j] = sum.pair_point(c);
    Vector k = sum.normalized_kernel(c);
    CHECK(std::abs(k(i) - Complex(s)) < 1e-15);
    CHECK(std::abs(k(2 + j) - Complex(s)) < 1e-15);
    CHECK(std::abs(k.norm() - 1.0) < 1e-14);
  }
}

TEST_CASE("direct sum stacks unnormalized kernels, then renormalizes") {
  // hardy dim 2 at lambda = 0.5: raw kernel (1, 0.5); diagonal dim 1: (1)
  auto hardy = build_space(ModelKind::Hardy, 2, interval(0.5, 0.6, 2));
  auto diag = build_space(ModelKind::Diagonal, 1, index_grid());
  auto sum = direct_sum(hardy, diag);
  Vector k = sum.normalized_kernel(0);
  Eigen::Vector3cd expect(1.0, 0.5, 1.0);
  expect /= expect.norm();
  CHECK((k - Vector(expect)).norm() < 1e-14);
}

TEST_CASE("custom-gram model normalizes supplied kernels and validates") {
  DomainGrid grid = make_grid(interval(0.0, 1.0, 2));
  Matrix raw(2, 2);
  raw << Complex(3, 0), Complex(0, 0), Complex(4, 0), Complex(0, 2);
  auto space = build_custom_space(2, grid, raw);
  CHECK(std::abs(space.normalized_kernel(0)(0) - Complex(0.6)) < 1e-15);
  CHECK(std::abs(space.normalized_kernel(0)(1) - Complex(0.8)) < 1e-15);
  Matrix bad(2, 2);
  bad << Complex(1, 0), Complex(0, 0), Complex(std::nan(""), 0), Complex(1, 0);
  CHECK_THROWS_AS(build_custom_space(2, grid, bad), NumericError);
}
