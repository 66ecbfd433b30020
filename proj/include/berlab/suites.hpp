// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berlab/certify.hpp"
#include "berlab/rkhs.hpp"

namespace berlab {

struct SpaceSpec {
  ModelKind model = ModelKind::Diagonal;
  int dim = 4;
  GridSpec grid;
  Matrix custom_kernels;  // only for the custom model

  std::string describe() const;
};

/// Per-suite parameter grids; empty lists fall back to suite defaults.
struct SuiteParams {
  std::vector<double> p;
  std::vector<double> alpha;     // Young conjugate / power-map alpha
  std::vector<double> fp_alpha;  // function-pair exponent
  int family = 3;                // Cartesian family size
  int angle_count = 8;
  bool include_expm1 = true;     // offdiag-convex: also run h = exp(t) - 1
};

struct SuiteSelection {
  std::string id;
  SuiteParams params;
};

enum class RunMode { Certify, Tighten };

struct RunConfig {
  std::vector<SpaceSpec> spaces;
  std::vector<SuiteSelection> suites;
  int trials = 100;
  std::uint64_t master_seed = 1;
  double condition_cap = 1e3;
  Tolerance tol;
  RunMode mode = RunMode::Certify;
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  Certificate cert;
};

struct SuiteSummary {
  double min_gap = 0.0;
  double mean_gap = 0.0;
  double worst_rel_margin = 0.0;  // min over certs of (rhs - lhs)/max(1, rhs)
  double min_rel_gap = 0.0;       // same quantity, reported with its seed
  std::uint64_t min_rel_gap_seed = 0;
};

struct SuiteReport {
  std::string suite_id;
  std::string space;
  int trials = 0;
  std::vector<TrialRecord> certificates;  // all, in (trial, cert) order
  std::vector<TrialRecord> violations;    // the certificates with holds == false
  SuiteSummary summary;
};

/// All known suite ids, in the order "all" expands to.
const std::vector<std::string>& known_suites();

/// Replace any {"all"} selection with the full desk-scale bundle and validate
/// suite ids and parameter grids. Throws ConfigError on anything unknown.
RunConfig expand_and_validate(RunConfig config);

/// Trial seed for (master, index): mix64(master ^ mix64(index + 1)).
std::uint64_t trial_seed(std::uint64_t master_seed, int trial_index);

/// Run one trial of a suite; several certificates when a parameter grid fans out.
std::vector<Certificate> run_suite_trial(const std::string& suite_id,
                                         const SampledSpace& space,
                                         const DirectSumSpace* sum_space,
                                         std::uint64_t seed, const SuiteParams& params,
                                         double condition_cap, Tolerance tol);

std::vector<SuiteReport> run_certify(const RunConfig& config);
std::vector<SuiteReport> run_tighten(const RunConfig& config);

/// True if a suite needs a direct-sum space (the off-diagonal block suites).
bool suite_needs_sum_space(const std::string& suite_id);

SampledSpace build_space(const SpaceSpec& spec);

}  // namespace berlab
