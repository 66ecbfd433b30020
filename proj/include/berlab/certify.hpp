// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "berlab/berezin.hpp"
#include "berlab/calculus.hpp"
#include "berlab/generators.hpp"
#include "berlab/rkhs.hpp"

namespace berlab {

enum class CertMode { Pointwise, Sup };

std::string to_string(CertMode m);

struct Tolerance {
  double rel = 1e-9;
  double abs_scale = 1e-12;  // absolute slack is abs_scale * max(1, rhs)

  bool leq(double lhs, double rhs) const {
    return lhs <= rhs * (1.0 + rel) + abs_scale * std::max(1.0, rhs);
  }
};

/// One numerically evaluated inequality instance.
struct Certificate {
  std::string theorem_id;
  std::map<std::string, double> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // rhs - lhs
  bool holds = false;
  int witness_index = -1;  // grid index of the LHS maximizer, -1 if not grid-based
  CertMode mode = CertMode::Sup;
};

/// Nonnegative, nondecreasing, convex map on [0, inf) with h(0) = 0.
/// Only whitelisted shapes are constructible: t^p (p >= 1) and exp(t) - 1.
struct ConvexFun {
  std::string name;
  std::function<double(double)> fn;

  static ConvexFun power(double p);
  static ConvexFun expm1();
};

// --- Schwarz-type lemmas and their Berezin-number consequences -------------

/// |<ABx, y>| <= r(B) ||f(|A|)x|| ||g(|A*|)y|| for unit x, y.
Certificate cert_lemma_schwarz(const IntertwinedPair& pair, const FunctionPair& fp,
                               const Vector& x, const Vector& y, Tolerance tol = {});

/// Refined Cauchy-Schwarz chain for a positive operator, p >= 2:
/// (<Ax,x><Ay,y>)^p <= [<A^p x,x> - <|A - <Ax,x>I|^p x,x>] [x -> y] <= <A^p x,x><A^p y,y>,
/// plus the equal-vector scalar forms used downstream. The single-vector lhs
/// variant <Ax,x>^{2p} is recorded in params without being asserted.
Certificate cert_lemma_refined_cs(const Matrix& h_psd, double p, const Vector& x,
                                  const Vector& y, Tolerance tol = {});

/// ber(AB) <= (1/2) r(B) ber(f^2(|A|) + g^2(|A*|)), sup and pointwise modes.
Certificate cert_thm_half_rB(const IntertwinedPair& pair, const FunctionPair& fp,
                             const SampledSpace& space, Tolerance tol = {});

/// The two-link chain ending in (1/8)(||B|| + ||B^2||^{1/2}) [...].
Certificate cert_remark_chain(const IntertwinedPair& pair, const FunctionPair& fp,
                              const SampledSpace& space, Tolerance tol = {});

/// ber^p(AB) <= r^p(B) ber((1/alpha) f^{alpha p}(|A|) + (1/beta) g^{beta p}(|A*|)).
Certificate cert_thm_power_young(const IntertwinedPair& pair, const FunctionPair& fp,
                                 const SampledSpace& space, double p, double alpha,
                                 Tolerance tol = {});

/// Two-link refined Cauchy-Schwarz chain at grid points (lambda, mu), p >= 2.
Certificate cert_prop_refined(const IntertwinedPair& pair, const FunctionPair& fp,
                              const SampledSpace& space, double p, int lambda_index,
                              int mu_index, Tolerance tol = {});

/// Power-alpha specialization of cert_prop_refined; must coincide with it.
Certificate cert_cor_alpha(const IntertwinedPair& pair, const SampledSpace& space,
                           double p, double alpha, int lambda_index, int mu_index,
                           Tolerance tol = {});

/// ber(AB) bound with the minimum-modulus correction, exponent 1/(2p); the
/// printed-exponent 1/2^p variant's status is recorded in params.
Certificate cert_thm_minmod(const IntertwinedPair& pair, const FunctionPair& fp,
                            const SampledSpace& space, double p, Tolerance tol = {});

/// Scalar Young refinement: a^alpha b^{1-alpha} <= alpha a + (1-alpha) b
/// - r0 (sqrt a - sqrt b)^2 with r0 = min(alpha, 1-alpha).
Certificate cert_young_scalar(double a, double b, double alpha, Tolerance tol = {});

/// Young-refined half-r(B) bound; pointwise mode is normative, sup mode uses
/// the minimum correction over the grid. Also asserts per-lambda dominance of
/// the refined RHS over the cert_thm_half_rB RHS.
Certificate cert_thm_young_refined(const IntertwinedPair& pair,
                                   const FunctionPair& fp, const SampledSpace& space,
                                   Tolerance tol = {});

/// r0-refined power-Young bound, r0 = min(1/alpha, 1/beta); same mode policy.
Certificate cert_thm_power_young_refined(const IntertwinedPair& pair,
                                         const FunctionPair& fp,
                                         const SampledSpace& space, double p,
                                         double alpha, Tolerance tol = {});

// --- Off-diagonal block operators on direct sums ----------------------------

/// h(ber(T)) <= (1/4)||h(f^2(|C|)) + h(g^2(|C|))|| + (1/4)||h(f^2(|B|)) + h(g^2(|B|))||
/// for T = [[0, B], [C, 0]] over the direct-sum kernels.
Certificate cert_offdiag_convex(const Matrix& b, const Matrix& c,
                                const FunctionPair& fp, const ConvexFun& h,
                                const DirectSumSpace& sum_space, int angle_count,
                                Tolerance tol = {});

/// Power corollary; must coincide with cert_offdiag_convex(t^p, power alpha).
Certificate cert_offdiag_power(const Matrix& b, const Matrix& c, double alpha,
                               double p, const DirectSumSpace& sum_space,
                               Tolerance tol = {});

/// Complex polarization identity, reconstructing <x, y> from four norms.
Certificate cert_polarization(const Vector& x, const Vector& y, Tolerance tol = {});

// --- Cartesian decomposition -------------------------------------------------

/// McCarthy: <A^p x, x> vs ||x||^{2(1-p)} <Ax, x>^p, branch chosen by p.
Certificate cert_mccarthy(const Matrix& h_psd, double p, const Vector& x,
                          Tolerance tol = {});

/// |<Ax, y>|^2 <= <|A|^{2p} x, x> <|A*|^{2(1-p)} y, y>, 0 <= p <= 1.
Certificate cert_mixed_schwarz(const Matrix& a, double p, const Vector& x,
                               const Vector& y, Tolerance tol = {});

/// (sum x_n)^p <= k^{p-1} sum x_n^p for positive x_n, p >= 1.
Certificate cert_power_sum(const std::vector<double>& xs, double p,
                           Tolerance tol = {});

/// ber^p(sum A_n) <= (sqrt(2) k)^{p-1} max_lambda sum_n (|B_n|^{2p}~ + |C_n|^{2p}~)^{1/2}.
Certificate cert_cartesian_1(const std::vector<Matrix>& family,
                             const SampledSpace& space, double p, Tolerance tol = {});

/// ber^p(sum A_n) <= k^{p-1} 2^{p/2-1} max_lambda sum_n (|B_n+C_n|^{2p}~ + |B_n-C_n|^{2p}~)^{1/2}.
Certificate cert_cartesian_2(const std::vector<Matrix>& family,
                             const SampledSpace& space, double p, Tolerance tol = {});

// --- Section-1 norm/spectral-radius inequalities -----------------------------

/// r(AB) <= (1/4)(||AB|| + ||BA|| + sqrt((||AB|| - ||BA||)^2 + 4 m(A,B))).
Certificate cert_ki1(const Matrix& a, const Matrix& b, Tolerance tol = {});

/// ||A^{1/2} B^{1/2}|| <= ||AB||^{1/2} for PSD A, B.
Certificate cert_ki3(const Matrix& a_psd, const Matrix& b_psd, Tolerance tol = {});

/// ||A+B|| <= (1/2)(||A|| + ||B|| + sqrt((||A||-||B||)^2 + 4 min(||AB||, ||BA||)))
/// for PSD A, B.
Certificate cert_ber1(const Matrix& a_psd, const Matrix& b_psd, Tolerance tol = {});

}  // namespace berlab
