// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "berlab/certify.hpp"

using namespace berlab;

namespace {

SampledSpace diag_space(int dim) {
  GridSpec g;
  g.kind = GridKind::IndexSet;
  return build_space(ModelKind::Diagonal, dim, g);
}

SampledSpace hardy_space(int dim) {
  GridSpec g;
  g.kind = GridKind::DiscPolar;
  g.radial = 4;
  g.angular = 12;
  g.rmax = 0.9;
  return build_space(ModelKind::Hardy, dim, g);
}

IntertwinedPair identity_pair(int dim) {
  IntertwinedPair pair;
  pair.a = Matrix::Identity(dim, dim);
  pair.b = Matrix::Identity(dim, dim);
  pair.p = Matrix::Identity(dim, dim);
  pair.u = Matrix::Identity(dim, dim);
  pair.c = Matrix::Identity(dim, dim);
  return pair;
}

IntertwinedPair seeded_pair(int dim, std::uint64_t seed) {
  InstanceSpec spec;
  spec.dim = dim;
  spec.seed = seed;
  return gen_intertwined_pair(spec);
}

}  // namespace

TEST_CASE("tolerance comparison accepts boundary noise and rejects real slack") {
  Tolerance tol;
  CHECK(tol.leq(1.0, 1.0));
  CHECK(tol.leq(1.0 + 1e-13, 1.0));
  CHECK(!tol.leq(1.0 + 1e-6, 1.0));
  CHECK(tol.leq(0.0, 0.0));
  CHECK(!tol.leq(1e-6, 0.0));
}

TEST_CASE("scalar Young refinement, exact equality witness at (1, 4, 1/2)") {
  // oracle: lhs = 2; rhs = 0.5 + 2 - 0.5 (1 - 2)^2 = 2
  auto c = cert_young_scalar(1.0, 4.0, 0.5);
  CHECK(c.lhs == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(c.rhs == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(c.gap) <= 1e-12);
  CHECK(c.holds);
  CHECK(cert_young_scalar(3.0, 5.0, 0.25).holds);
  CHECK_THROWS_AS(cert_young_scalar(-1.0, 2.0, 0.5), ConfigError);
  CHECK_THROWS_AS(cert_young_scalar(1.0, 2.0, 1.5), ConfigError);
}

TEST_CASE("half-r(B) theorem on a frozen 2x2 instance") {
  // oracle: P = diag(1, 2), C = [[0,1],[1,0]], U = I, so A = P, B = P^{-1} C,
  // AB = C, ber over the diagonal model = max |C_ii| = 0;
  // r(B) = sqrt(det |B|) = sqrt(0.5); f = g = sqrt(t):
  // rhs = 0.5 r(B) ber(P + P) = sqrt(0.5) * 2
  IntertwinedPair pair;
  pair.p = Matrix::Zero(2, 2);
  pair.p(0, 0) = 1.0;
  pair.p(1, 1) = 2.0;
  pair.c = Matrix::Zero(2, 2);
  pair.c(0, 1) = 1.0;
  pair.c(1, 0) = 1.0;
  pair.u = Matrix::Identity(2, 2);
  pair.a = pair.p;
  pair.b = pair.p.inverse() * pair.c;
  auto space = diag_space(2);
  auto c = cert_thm_half_rB(pair, FunctionPair::power(0.5), space);
  CHECK(c.lhs == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(c.rhs == doctest::Approx(2.0 * std::sqrt(0.5)).epsilon(1e-12));
  CHECK(c.holds);
}

TEST_CASE("identity pair is an equality witness across the Schwarz family") {
  auto pair = identity_pair(3);
  auto space = diag_space(3);
  auto fp = FunctionPair::power(0.5);
  auto c1 = cert_thm_half_rB(pair, fp, space);
  CHECK(std::abs(c1.gap) <= 1e-12);
  CHECK(c1.holds);
  auto c2 = cert_thm_power_young(pair, fp, space, 1.0, 2.0);
  CHECK(std::abs(c2.gap) <= 1e-12);
  CHECK(c2.holds);
  auto c3 = cert_thm_young_refined(pair, fp, space);
  CHECK(std::abs(c3.gap) <= 1e-12);
  CHECK(c3.holds);
}

TEST_CASE("Schwarz lemma holds on random intertwined pairs") {
  auto fp = FunctionPair::power(0.4);
  Rng rng(2024);
  for (std::uint64_t seed : {10ULL, 11ULL, 12ULL}) {
    auto pair = seeded_pair(4, seed);
    Vector x = random_unit_vector(rng, 4);
    Vector y = random_unit_vector(rng, 4);
    auto c = cert_lemma_schwarz(pair, fp, x, y);
    CHECK(c.holds);
    CHECK(c.params.at("r_B") > 0.0);
  }
  Vector bad = Vector::Zero(4);
  CHECK_THROWS_AS(cert_lemma_schwarz(seeded_pair(4, 1), fp, bad, bad), ConfigError);
}

TEST_CASE("refined Cauchy-Schwarz chain holds for positive operators") {
  Rng rng(7);
  for (std::uint64_t seed : {3ULL, 4ULL}) {
    InstanceSpec spec;
    spec.dim = 5;
    spec.seed = seed;
    Matrix h = random_psd(spec);
    Vector x = random_unit_vector(rng, 5);
    Vector y = random_unit_vector(rng, 5);
    for (double p : {2.0, 3.0}) {
      auto c = cert_lemma_refined_cs(h, p, x, y);
      CHECK(c.holds);
      CHECK(c.params.at("mid") <= c.rhs * (1.0 + 1e-9) + 1e-12);
    }
  }
  Rng r2(8);
  Vector u = random_unit_vector(r2, 3);
  CHECK_THROWS_AS(cert_lemma_refined_cs(Matrix::Identity(3, 3), 1.5, u, u),
                  ConfigError);
}

TEST_CASE("remark chain and power-Young theorems hold on random pairs") {
  auto space = hardy_space(4);
  auto fp = FunctionPair::power(0.5);
  for (std::uint64_t seed : {21ULL, 22ULL}) {
    auto pair = seeded_pair(4, seed);
    CHECK(cert_remark_chain(pair, fp, space).holds);
    CHECK(cert_thm_power_young(pair, fp, space, 1.5, 2.0).holds);
    CHECK(cert_thm_power_young(pair, fp, space, 2.0, 3.0).holds);
  }
  CHECK_THROWS_AS(cert_thm_power_young(seeded_pair(4, 1), fp, space, 0.5, 2.0),
                  ConfigError);
  CHECK_THROWS_AS(cert_thm_power_young(seeded_pair(4, 1), fp, space, 2.0, 1.0),
                  ConfigError);
}

TEST_CASE("pointwise refined chain and its power specialization agree") {
  auto space = hardy_space(4);
  for (std::uint64_t seed : {31ULL, 32ULL}) {
    auto pair = seeded_pair(4, seed);
    auto generic = cert_prop_refined(pair, FunctionPair::power(0.3), space, 2.0, 0, 5);
    CHECK(generic.holds);
    auto special = cert_cor_alpha(pair, space, 2.0, 0.3, 0, 5);
    CHECK(special.holds);
    CHECK(special.params.at("crosscheck_dev") <= 1e-10 * std::max(1.0, special.rhs));
  }
}

TEST_CASE("minimum-modulus refinement holds with the proof exponent") {
  auto space = hardy_space(4);
  auto fp = FunctionPair::power(0.5);
  for (std::uint64_t seed : {41ULL, 42ULL, 43ULL}) {
    auto pair = seeded_pair(4, seed);
    auto c = cert_thm_minmod(pair, fp, space, 2.0);
    CHECK(c.holds);
    CHECK(c.params.count("rhs_variant") == 1);
  }
}

TEST_CASE("Young-refined bounds hold and never exceed the unrefined ones") {
  auto space = hardy_space(4);
  auto fp = FunctionPair::power(0.5);
  for (std::uint64_t seed : {51ULL, 52ULL, 53ULL}) {
    auto pair = seeded_pair(4, seed);
    auto base = cert_thm_half_rB(pair, fp, space);
    auto refined = cert_thm_young_refined(pair, fp, space);
    CHECK(base.holds);
    CHECK(refined.holds);
    CHECK(refined.rhs <= base.rhs + 1e-12);
    CHECK(refined.params.at("dominance_ok") == 1.0);

    auto base_p = cert_thm_power_young(pair, fp, space, 2.0, 2.0);
    auto refined_p = cert_thm_power_young_refined(pair, fp, space, 2.0, 2.0);
    CHECK(base_p.holds);
    CHECK(refined_p.holds);
    CHECK(refined_p.rhs <= base_p.rhs + 1e-12);
  }
}

TEST_CASE("off-diagonal convex bound over a direct sum") {
  auto left = diag_space(2);
  auto right = diag_space(3);
  auto sum = direct_sum(left, right);
  InstanceSpec spec;
  spec.seed = 77;
  spec.dim = 3;
  Matrix g = random_general(spec);
  Matrix b = g.topRows(2);       // 2x3: right -> left
  Matrix c_op = adjoint(g).topRows(3).leftCols(2);  // 3x2
  for (const auto& h : {ConvexFun::power(2.0), ConvexFun::expm1()}) {
    auto cert = cert_offdiag_convex(b, c_op, FunctionPair::power(0.5), h, sum, 8);
    CHECK(cert.holds);
    CHECK(cert.params.at("rotation_scan_ber") <=
          cert.params.at("ber_T") * (1.0 + 1e-9) + 1e-12);
  }
  CHECK_THROWS_AS(cert_offdiag_convex(b, c_op, FunctionPair::power(0.5),
                                      ConvexFun::power(2.0), sum, 3),
                  ConfigError);
}

TEST_CASE("off-diagonal power corollary matches the generic convex route") {
  auto sum = direct_sum(diag_space(2), diag_space(2));
  InstanceSpec spec;
  spec.seed = 78;
  spec.dim = 2;
  Matrix b = random_general(spec);
  spec.seed = 79;
  Matrix c_op = random_general(spec);
  auto cert = cert_offdiag_power(b, c_op, 0.5, 2.0, sum);
  CHECK(cert.holds);
  CHECK(cert.params.at("crosscheck_dev") <= 1e-10 * std::max(1.0, cert.rhs));
}

TEST_CASE("polarization identity reconstructs the inner product") {
  Rng rng(99);
  for (int rep = 0; rep < 5; ++rep) {
    Vector x = random_unit_vector(rng, 6) * (1.0 + rep);
    Vector y = random_unit_vector(rng, 6);
    auto c = cert_polarization(x, y);
    CHECK(c.holds);
    CHECK(c.lhs <= 1e-12 * (1.0 + x.norm()));
  }
}

TEST_CASE("McCarthy inequality in both exponent branches") {
  InstanceSpec spec;
  spec.dim = 5;
  spec.seed = 13;
  Matrix h = random_psd(spec);
  Rng rng(5);
  Vector x = random_unit_vector(rng, 5) * 2.0;  // non-unit on purpose
  for (double p : {0.5, 1.0, 2.5}) CHECK(cert_mccarthy(h, p, x).holds);
  CHECK_THROWS_AS(cert_mccarthy(h, 0.0, x), ConfigError);
}

TEST_CASE("mixed Schwarz inequality across the p range, edges included") {
  InstanceSpec spec;
  spec.dim = 4;
  spec.seed = 14;
  Matrix a = random_general(spec);
  Rng rng(6);
  Vector x = random_unit_vector(rng, 4);
  Vector y = random_unit_vector(rng, 4);
  for (double p : {0.0, 0.3, 0.5, 1.0}) CHECK(cert_mixed_schwarz(a, p, x, y).holds);
  CHECK_THROWS_AS(cert_mixed_schwarz(a, 1.5, x, y), ConfigError);
}

TEST_CASE("power-sum inequality with a hand-checked instance") {
  // oracle: (1+2+3)^2 = 36 <= 3 (1+4+9) = 42
  auto c = cert_power_sum({1.0, 2.0, 3.0}, 2.0);
  CHECK(c.lhs == doctest::Approx(36.0).epsilon(1e-15));
  CHECK(c.rhs == doctest::Approx(42.0).epsilon(1e-15));
  CHECK(c.holds);
  CHECK_THROWS_AS(cert_power_sum({}, 2.0), ConfigError);
  CHECK_THROWS_AS(cert_power_sum({1.0, -1.0}, 2.0), ConfigError);
}

TEST_CASE("first Cartesian bound on a frozen nilpotent instance") {
  // oracle: A = [[0,1],[0,0]], p = 1, diagonal model. ber(A) = 0;
  // B, C have B^2 = C^2 = I/4, so the bound is sqrt(1/4 + 1/4) = sqrt(1/2)
  Matrix a = Matrix::Zero(2, 2);
  a(0, 1) = 1.0;
  auto space = diag_space(2);
  auto c = cert_cartesian_1({a}, space, 1.0);
  CHECK(c.lhs == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(c.rhs == doctest::Approx(0.7071067811865476).epsilon(1e-12));
  CHECK(c.holds);
}

TEST_CASE("Cartesian bounds hold for random families") {
  auto space = hardy_space(3);
  InstanceSpec spec;
  spec.dim = 3;
  spec.seed = 15;
  auto family = gen_cartesian_family(spec, 3);
  for (double p : {1.0, 2.0, 2.7}) {
    CHECK(cert_cartesian_1(family, space, p).holds);
    CHECK(cert_cartesian_2(family, space, p).holds);
  }
}

TEST_CASE("norm and spectral-radius inequalities") {
  InstanceSpec spec;
  spec.dim = 4;
  for (std::uint64_t seed : {61ULL, 62ULL, 63ULL}) {
    spec.seed = seed;
    Matrix a = random_general(spec);
    spec.seed = seed + 100;
    Matrix b = random_general(spec);
    CHECK(cert_ki1(a, b).holds);
    spec.seed = seed + 200;
    Matrix pa = random_psd(spec);
    spec.seed = seed + 300;
    Matrix pb = random_psd(spec);
    CHECK(cert_ki3(pa, pb).holds);
    CHECK(cert_ber1(pa, pb).holds);
  }
  // commuting diagonal PSD matrices make ki3 an equality
  Matrix d1 = Matrix::Zero(2, 2), d2 = Matrix::Zero(2, 2);
  d1(0, 0) = 4.0;
  d1(1, 1) = 1.0;
  d2(0, 0) = 9.0;
  d2(1, 1) = 1.0;
  auto c = cert_ki3(d1, d2);
  CHECK(c.lhs == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(c.rhs == doctest::Approx(6.0).epsilon(1e-12));
}
