// SPDX-License-Identifier: Apache-2.0
#include "berlab/generators.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace berlab {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return double(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

Complex Rng::complex_normal() {
  double re = normal();
  double im = normal();
  return Complex(re, im) * 0.7071067811865476;  // unit total variance
}

namespace {

Matrix gaussian_matrix(Rng& rng, int dim) {
  if (dim < 1) throw DimensionError("instance dim must be >= 1");
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      double re = rng.normal();
      double im = rng.normal();
      m(i, j) = Complex(re, im) * 0.7071067811865476;  // unit-variance complex
    }
  return m;
}

}  // namespace

Matrix random_general(const InstanceSpec& spec) {
  Rng rng(mix64(spec.seed ^ 0x67656e6572616cULL));
  return gaussian_matrix(rng, spec.dim);
}

Matrix random_hermitian(const InstanceSpec& spec) {
  Rng rng(mix64(spec.seed ^ 0x6865726d4a5aULL));
  Matrix g = gaussian_matrix(rng, spec.dim);
  return 0.5 * (g + Matrix(g.adjoint()));
}

Matrix random_unitary(const InstanceSpec& spec) {
  Rng rng(mix64(spec.seed ^ 0x756e697461ULL));
  Matrix g = gaussian_matrix(rng, spec.dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase ambiguity so the output is a pure function of the seed
  for (int j = 0; j < spec.dim; ++j) {
    Complex d = r(j, j);
    double m = std::abs(d);
    q.col(j) *= (m > 0.0) ? d / m : Complex(1.0, 0.0);
  }
  return q;
}

Matrix random_psd(const InstanceSpec& spec) {
  if (spec.condition_cap < 1.0)
    throw ConfigError("conditionCap must be >= 1");
  if (spec.dim < 1) throw DimensionError("instance dim must be >= 1");
  Rng rng(mix64(spec.seed ^ 0x707364505344ULL));
  double lo = 1.0 / spec.condition_cap;
  RealVector eigs(spec.dim);
  eigs(0) = 1.0;
  if (spec.dim > 1) eigs(1) = lo;
  for (int i = 2; i < spec.dim; ++i) eigs(i) = lo + (1.0 - lo) * rng.uniform();
  InstanceSpec uspec = spec;
  uspec.seed = mix64(spec.seed ^ 0x70736455ULL);
  Matrix u = random_unitary(uspec);
  return u * eigs.asDiagonal() * u.adjoint();
}

IntertwinedPair gen_intertwined_pair(const InstanceSpec& spec) {
  IntertwinedPair out;
  InstanceSpec s = spec;
  s.seed = mix64(spec.seed ^ 0x70616972e1ULL);
  out.p = random_psd(s);
  s.seed = mix64(spec.seed ^ 0x70616972e2ULL);
  out.c = random_hermitian(s);
  s.seed = mix64(spec.seed ^ 0x70616972e3ULL);
  out.u = random_unitary(s);
  Eigen::FullPivLU<Matrix> lu(out.p);
  if (!lu.isInvertible())
    throw NumericError("gen_intertwined_pair: P not invertible under conditionCap");
  out.b = lu.solve(out.c);
  out.a = out.u * out.p;
  return out;
}

std::vector<Matrix> gen_cartesian_family(const InstanceSpec& spec, int k) {
  if (k < 1) throw ConfigError("family size must be >= 1");
  std::vector<Matrix> family;
  family.reserve(k);
  for (int n = 0; n < k; ++n) {
    InstanceSpec s = spec;
    s.seed = mix64(spec.seed ^ mix64(std::uint64_t(n) + 1));
    family.push_back(random_general(s));
  }
  return family;
}

Vector random_unit_vector(Rng& rng, int dim) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) {
    double re = rng.normal();
    double im = rng.normal();
    v(i) = Complex(re, im);
  }
  double n = v.norm();
  if (n == 0.0) v(0) = 1.0, n = 1.0;
  return v / n;
}

}  // namespace berlab
