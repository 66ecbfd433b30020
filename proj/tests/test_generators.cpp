// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "berlab/generators.hpp"

using namespace berlab;

TEST_CASE("mix64 is deterministic and spreads nearby inputs") {
  CHECK(mix64(1) == mix64(1));
  CHECK(mix64(1) != mix64(2));
  CHECK(mix64(0) != 0);
}

TEST_CASE("rng streams are reproducible and seed-sensitive") {
  Rng a(123), b(123), c(124);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
  bool differs = false;
  Rng a2(123);
  for (int i = 0; i < 10; ++i)
    if (a2.next_u64() != c.next_u64()) differs = true;
  CHECK(differs);
}

TEST_CASE("uniform values live in [0, 1) and normals have sane moments") {
  Rng rng(7);
  double sum = 0.0, sumsq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  for (int i = 0; i < n; ++i) {
    double z = rng.normal();
    sum += z;
    sumsq += z * z;
  }
  CHECK(std::abs(sum / n) < 0.05);
  CHECK(std::abs(sumsq / n - 1.0) < 0.05);
}

TEST_CASE("complex normals have unit expected squared modulus") {
  Rng rng(9);
  double sumsq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) sumsq += std::norm(rng.complex_normal());
  CHECK(std::abs(sumsq / n - 1.0) < 0.05);
}

TEST_CASE("generators are pure functions of the instance spec") {
  InstanceSpec spec;
  spec.dim = 6;
  spec.seed = 42;
  CHECK(random_general(spec) == random_general(spec));
  CHECK(random_hermitian(spec) == random_hermitian(spec));
  CHECK(random_unitary(spec) == random_unitary(spec));
  CHECK(random_psd(spec) == random_psd(spec));
  spec.seed = 43;
  CHECK(random_general(spec) != random_general(InstanceSpec{6, 42, 1e3}));
}

TEST_CASE("random_hermitian is Hermitian; random_unitary is unitary") {
  InstanceSpec spec;
  spec.dim = 7;
  spec.seed = 3;
  CHECK(is_hermitian(random_hermitian(spec)));
  Matrix u = random_unitary(spec);
  CHECK((adjoint(u) * u - Matrix::Identity(7, 7)).norm() < 1e-12);
}

TEST_CASE("random_psd hits both spectral endpoints of the condition cap") {
  InstanceSpec spec;
  spec.dim = 5;
  spec.seed = 17;
  spec.condition_cap = 100.0;
  Matrix p = random_psd(spec);
  RealVector ev = herm_eigenvalues(p);
  CHECK(ev(ev.size() - 1) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ev(0) == doctest::Approx(0.01).epsilon(1e-8));
  CHECK(is_hermitian(p));
}

TEST_CASE("intertwined pair satisfies |A| B = B* |A| exactly in structure") {
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    InstanceSpec spec;
    spec.dim = 6;
    spec.seed = seed;
    auto pair = gen_intertwined_pair(spec);
    double scale = std::max(1.0, pair.a.norm() * pair.b.norm());
    // defining relations of the construction
    CHECK((pair.a - pair.u * pair.p).norm() < 1e-12 * scale);
    CHECK((pair.p * pair.b - pair.c).norm() < 1e-10 * scale);
    CHECK(is_hermitian(pair.c, 1e-10));
    // the hypothesis itself, with |A| recomputed independently
    Matrix mod_a = modulus(pair.a);
    CHECK((mod_a - pair.p).norm() < 1e-9 * std::max(1.0, pair.p.norm()));
    CHECK((mod_a * pair.b - adjoint(pair.b) * mod_a).norm() < 1e-9 * scale);
  }
}

TEST_CASE("cartesian family has the requested size and distinct members") {
  InstanceSpec spec;
  spec.dim = 4;
  spec.seed = 8;
  auto family = gen_cartesian_family(spec, 3);
  REQUIRE(family.size() == 3);
  CHECK(family[0] != family[1]);
  CHECK(family[1] != family[2]);
  auto again = gen_cartesian_family(spec, 3);
  for (int i = 0; i < 3; ++i) CHECK(family[i] == again[i]);
}

TEST_CASE("random unit vectors are unit and reproducible") {
  Rng r1(55), r2(55);
  Vector v1 = random_unit_vector(r1, 9);
  Vector v2 = random_unit_vector(r2, 9);
  CHECK(v1 == v2);
  CHECK(std::abs(v1.norm() - 1.0) < 1e-14);
}

TEST_CASE("invalid instance specs are rejected") {
  InstanceSpec spec;
  spec.dim = 0;
  CHECK_THROWS_AS(random_general(spec), DimensionError);
  spec.dim = 3;
  spec.condition_cap = 0.5;
  CHECK_THROWS_AS(random_psd(spec), ConfigError);
}
