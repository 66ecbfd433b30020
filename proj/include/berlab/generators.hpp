// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "berlab/calculus.hpp"
#include "berlab/types.hpp"

namespace berlab {

/// splitmix64 step; also the documented per-trial seed mixing function:
/// trial_seed = mix64(master_seed ^ mix64(trial_index + 1)).
std::uint64_t mix64(std::uint64_t x);

/// Small deterministic generator (splitmix64 stream + Box-Muller normals).
/// Bit-identical across platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  /// Standard normal.
  double normal();
  Complex complex_normal();

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

struct InstanceSpec {
  int dim = 2;
  std::uint64_t seed = 0;
  double condition_cap = 1e3;
};

struct IntertwinedPair {
  Matrix a;  // A = U P
  Matrix b;  // B = P^{-1} C
  Matrix p;  // |A|, positive definite
  Matrix u;  // unitary
  Matrix c;  // P B, Hermitian
};

/// Independent complex-Gaussian entries.
Matrix random_general(const InstanceSpec& spec);
Matrix random_hermitian(const InstanceSpec& spec);
/// Haar-like unitary: QR of a Gaussian matrix with the R diagonal phase fixed.
Matrix random_unitary(const InstanceSpec& spec);
/// Eigenvalues in [1/conditionCap, 1] with both endpoints attained (dim >= 2),
/// so the condition number equals the cap.
Matrix random_psd(const InstanceSpec& spec);

/// A pair with |A| B = B* |A|: P positive definite, C Hermitian, B = P^{-1} C,
/// A = U P with U unitary. Then P B = C = C* = B* P and |A| = P.
IntertwinedPair gen_intertwined_pair(const InstanceSpec& spec);

/// k independent general matrices for the Cartesian-decomposition suites.
std::vector<Matrix> gen_cartesian_family(const InstanceSpec& spec, int k);

/// Random unit vector.
Vector random_unit_vector(Rng& rng, int dim);

}  // namespace berlab
