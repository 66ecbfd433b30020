// SPDX-License-Identifier: Apache-2.0
#include "berlab/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace berlab {

Matrix adjoint(const Matrix& a) { return a.adjoint(); }

bool is_hermitian(const Matrix& a, double tol_scale) {
  if (a.rows() != a.cols()) return false;
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff() * double(a.rows()));
  return (a - Matrix(a.adjoint())).cwiseAbs().maxCoeff() <= tol_scale * scale;
}

namespace {

Eigen::SelfAdjointEigenSolver<Matrix> herm_eig(const Matrix& h) {
  require_square(h, "herm_eig");
  require_finite(h, "herm_eig");
  if (!is_hermitian(h, 1e-11))
    throw NumericError("herm_fun: input is not Hermitian within tolerance");
  // symmetrize so the solver sees an exactly Hermitian matrix
  Matrix hs = 0.5 * (h + Matrix(h.adjoint()));
  Eigen::SelfAdjointEigenSolver<Matrix> es(hs);
  if (es.info() != Eigen::Success)
    throw NumericError("Hermitian eigensolver failed to converge");
  return es;
}

RealVector clamp_eigs(RealVector ev, ClampPolicy clamp) {
  if (clamp == ClampPolicy::ToZero) {
    for (int i = 0; i < ev.size(); ++i) {
      if (ev(i) < 0.0) {
        if (ev(i) < -1e-10)
          throw NumericError("negative eigenvalue below clamping threshold: " +
                             std::to_string(ev(i)));
        ev(i) = 0.0;
      }
    }
  }
  return ev;
}

}  // namespace

RealVector herm_eigenvalues(const Matrix& h, ClampPolicy clamp) {
  return clamp_eigs(herm_eig(h).eigenvalues(), clamp);
}

Matrix herm_fun(const std::function<double(double)>& f, const Matrix& h,
                ClampPolicy clamp) {
  auto es = herm_eig(h);
  RealVector ev = clamp_eigs(es.eigenvalues(), clamp);
  RealVector mapped(ev.size());
  for (int i = 0; i < ev.size(); ++i) {
    mapped(i) = f(ev(i));
    if (!std::isfinite(mapped(i)))
      throw NumericError("herm_fun: non-finite mapped eigenvalue");
  }
  const Matrix& v = es.eigenvectors();
  return v * mapped.asDiagonal() * v.adjoint();
}

Matrix modulus(const Matrix& a) {
  // rectangular inputs are fine: |A| = (A*A)^{1/2} lives on the domain side
  require_finite(a, "modulus");
  Matrix gram = a.adjoint() * a;
  return herm_fun([](double t) { return std::sqrt(t); }, gram, ClampPolicy::ToZero);
}

std::pair<Matrix, Matrix> polar_decompose(const Matrix& a) {
  require_square(a, "polar_decompose");
  require_finite(a, "polar_decompose");
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix u = svd.matrixU() * svd.matrixV().adjoint();
  Matrix p = svd.matrixV() * svd.singularValues().asDiagonal() *
             svd.matrixV().adjoint();
  return {u, p};
}

double spectral_radius(const Matrix& a) {
  require_square(a, "spectral_radius");
  require_finite(a, "spectral_radius");
  Eigen::ComplexEigenSolver<Matrix> es(a, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw NumericError("general eigensolver failed to converge");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double op_norm(const Matrix& a) {
  require_finite(a, "op_norm");
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

double min_modulus(const Matrix& a) {
  require_finite(a, "min_modulus");
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

std::pair<Matrix, Matrix> cartesian_parts(const Matrix& a) {
  require_square(a, "cartesian_parts");
  Matrix ah = a.adjoint();
  Matrix b = 0.5 * (a + ah);
  Matrix c = (a - ah) / Complex(0.0, 2.0);
  return {b, c};
}

Matrix block_offdiag(const Matrix& b, const Matrix& c) {
  // B: right -> left, C: left -> right
  Eigen::Index d1 = b.rows(), d2 = b.cols();
  if (c.rows() != d2 || c.cols() != d1)
    throw DimensionError("block_offdiag: incompatible block shapes");
  Matrix t = Matrix::Zero(d1 + d2, d1 + d2);
  t.topRightCorner(d1, d2) = b;
  t.bottomLeftCorner(d2, d1) = c;
  return t;
}

Matrix rotated_real_part(const Matrix& a, double theta) {
  Complex phase = std::polar(1.0, theta);
  Matrix rotated = phase * a;
  return 0.5 * (rotated + Matrix(rotated.adjoint()));
}

double real_pow(double t, double s) {
  if (t == 0.0 && s == 0.0) return 1.0;
  return std::pow(t, s);
}

FunctionPair FunctionPair::power(double alpha) {
  if (alpha < 0.0 || alpha > 1.0)
    throw ConfigError("power pair needs alpha in [0, 1]");
  FunctionPair fp;
  fp.is_power_ = true;
  fp.alpha_ = alpha;
  return fp;
}

FunctionPair FunctionPair::tabulated(std::vector<std::array<double, 3>> samples) {
  if (samples.size() < 2) throw ConfigError("tabulated pair needs >= 2 samples");
  for (size_t i = 0; i < samples.size(); ++i) {
    auto [t, ft, gt] = samples[i];
    if (!(t >= 0.0) || ft < 0.0 || gt < 0.0)
      throw PairViolation("tabulated pair: negative sample");
    if (i > 0 && !(t > samples[i - 1][0]))
      throw PairViolation("tabulated pair: t samples must be strictly ascending");
    if (std::abs(ft * gt - t) > 1e-10 * std::max(1.0, std::abs(t)))
      throw PairViolation("tabulated pair: f(t) g(t) != t at a sample");
  }
  FunctionPair fp;
  fp.samples_ = std::move(samples);
  return fp;
}

double FunctionPair::interp(int column, double t) const {
  const auto& s = samples_;
  if (t <= s.front()[0]) return s.front()[column];
  if (t >= s.back()[0]) return s.back()[column];
  auto it = std::lower_bound(s.begin(), s.end(), t,
                             [](const auto& row, double v) { return row[0] < v; });
  auto hi = *it;
  auto lo = *(it - 1);
  double w = (t - lo[0]) / (hi[0] - lo[0]);
  return lo[column] + w * (hi[column] - lo[column]);
}

double FunctionPair::f(double t) const {
  return is_power_ ? real_pow(t, alpha_) : interp(1, t);
}

double FunctionPair::g(double t) const {
  return is_power_ ? real_pow(t, 1.0 - alpha_) : interp(2, t);
}

std::string FunctionPair::describe() const {
  if (is_power_) {
    std::ostringstream os;
    os << "power(" << alpha_ << ")";
    return os.str();
  }
  return "tabulated(" + std::to_string(samples_.size()) + ")";
}

void FunctionPair::check_product(const RealVector& spectrum) const {
  if (is_power_) return;  // exact by construction
  for (int i = 0; i < spectrum.size(); ++i) {
    double t = std::max(0.0, spectrum(i));
    if (std::abs(f(t) * g(t) - t) > 1e-10 * std::max(1.0, t))
      throw PairViolation("function pair violates f(t) g(t) = t at t = " +
                          std::to_string(t));
  }
}

Matrix FunctionPair::apply_f(const Matrix& psd) const { return apply_f_pow(1.0, psd); }
Matrix FunctionPair::apply_g(const Matrix& psd) const { return apply_g_pow(1.0, psd); }

Matrix FunctionPair::apply_f_pow(double s, const Matrix& psd) const {
  check_product(herm_eigenvalues(psd, ClampPolicy::ToZero));
  return herm_fun([&](double t) { return real_pow(f(t), s); }, psd,
                  ClampPolicy::ToZero);
}

Matrix FunctionPair::apply_g_pow(double s, const Matrix& psd) const {
  check_product(herm_eigenvalues(psd, ClampPolicy::ToZero));
  return herm_fun([&](double t) { return real_pow(g(t), s); }, psd,
                  ClampPolicy::ToZero);
}

}  // namespace berlab
