// SPDX-License-Identifier: Apache-2.0
#include "berlab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace berlab {

std::string SpaceSpec::describe() const {
  std::ostringstream os;
  os << to_string(model) << "(dim=" << dim;
  switch (grid.kind) {
    case GridKind::DiscPolar:
      os << ",disc " << grid.radial << "x" << grid.angular << ",rmax=" << grid.rmax;
      break;
    case GridKind::RealInterval:
      os << ",interval[" << grid.a << "," << grid.b << "]x" << grid.count;
      break;
    case GridKind::IndexSet:
      os << ",index";
      break;
  }
  os << ")";
  return os.str();
}

SampledSpace build_space(const SpaceSpec& spec) {
  if (spec.model == ModelKind::CustomGram) {
    return build_custom_space(spec.dim, make_grid(spec.grid), spec.custom_kernels);
  }
  return build_space(spec.model, spec.dim, spec.grid);
}

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> ids = {
      "lemma-schwarz",   "lemma-refined-cs",
      "thm-half-rB",     "remark-chain",
      "thm-power-young", "prop-refined",
      "cor-alpha",       "thm-minmod",
      "young-scalar",    "thm-young-refined",
      "thm-power-young-refined",
      "offdiag-convex",  "offdiag-power",
      "polarization",    "mccarthy",
      "mixed-schwarz",   "power-sum",
      "cartesian-1",     "cartesian-2",
      "ki1",             "ki3",
      "ber1"};
  return ids;
}

bool suite_needs_sum_space(const std::string& suite_id) {
  return suite_id == "offdiag-convex" || suite_id == "offdiag-power";
}

std::uint64_t trial_seed(std::uint64_t master_seed, int trial_index) {
  return mix64(master_seed ^ mix64(std::uint64_t(trial_index) + 1));
}

namespace {

std::vector<double> or_default(const std::vector<double>& v,
                               std::initializer_list<double> dflt) {
  return v.empty() ? std::vector<double>(dflt) : v;
}

void validate_suite(const SuiteSelection& s) {
  const auto& ids = known_suites();
  if (std::find(ids.begin(), ids.end(), s.id) == ids.end())
    throw ConfigError("unknown suite id: " + s.id);
  for (double p : s.params.p)
    if (!(p > 0.0)) throw ConfigError(s.id + ": p values must be positive");
  if (s.id == "lemma-refined-cs" || s.id == "prop-refined" || s.id == "cor-alpha" ||
      s.id == "thm-minmod")
    for (double p : s.params.p)
      if (p < 2.0) throw ConfigError(s.id + " needs p >= 2");
  if (s.id == "thm-power-young" || s.id == "thm-power-young-refined")
    for (double a : s.params.alpha)
      if (!(a > 1.0)) throw ConfigError(s.id + " needs alpha > 1");
  if (s.id == "cor-alpha" || s.id == "offdiag-power" || s.id == "mixed-schwarz")
    for (double a : s.params.alpha)
      if (a < 0.0 || a > 1.0) throw ConfigError(s.id + " needs alpha in [0,1]");
  if (s.params.family < 1) throw ConfigError(s.id + ": family must be >= 1");
  if (s.params.angle_count < 4) throw ConfigError(s.id + ": angleCount >= 4");
}

}  // namespace

RunConfig expand_and_validate(RunConfig config) {
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  if (config.suites.empty()) throw ConfigError("no suites selected");
  if (config.condition_cap < 1.0) throw ConfigError("conditionCap must be >= 1");

  bool has_all = std::any_of(config.suites.begin(), config.suites.end(),
                             [](const SuiteSelection& s) { return s.id == "all"; });
  if (has_all) {
    SuiteParams base;
    for (const auto& s : config.suites)
      if (s.id == "all") base = s.params;
    config.suites.clear();
    for (const auto& id : known_suites()) config.suites.push_back({id, base});
    if (config.spaces.empty()) {
      for (int d = 2; d <= 8; ++d) {
        SpaceSpec s;
        s.model = ModelKind::Diagonal;
        s.dim = d;
        s.grid.kind = GridKind::IndexSet;
        config.spaces.push_back(s);
      }
      SpaceSpec hardy;
      hardy.model = ModelKind::Hardy;
      hardy.dim = 8;
      hardy.grid.kind = GridKind::DiscPolar;
      hardy.grid.radial = 20;
      hardy.grid.angular = 64;
      hardy.grid.rmax = 0.95;
      config.spaces.push_back(hardy);
    }
  }
  if (config.spaces.empty()) throw ConfigError("no spaces configured");
  for (const auto& s : config.suites) validate_suite(s);
  for (const auto& sp : config.spaces) {
    if (sp.dim < 1) throw ConfigError("space dim must be >= 1");
    if (sp.grid.kind == GridKind::DiscPolar && !(sp.grid.rmax < 1.0))
      throw ConfigError("disc grid rmax must be < 1");
  }
  return config;
}

namespace {

struct TrialEnv {
  const SampledSpace& space;
  const DirectSumSpace* sum_space;
  std::uint64_t seed;
  double condition_cap;
  Tolerance tol;
};

InstanceSpec ispec(const TrialEnv& env, std::uint64_t salt) {
  return {env.space.dim(), mix64(env.seed ^ salt), env.condition_cap};
}

Rng vec_rng(const TrialEnv& env) { return Rng(mix64(env.seed ^ 0x766563ULL)); }

std::vector<Certificate> one(Certificate c) {
  std::vector<Certificate> v;
  v.push_back(std::move(c));
  return v;
}

}  // namespace

std::vector<Certificate> run_suite_trial(const std::string& id,
                                         const SampledSpace& space,
                                         const DirectSumSpace* sum_space,
                                         std::uint64_t seed, const SuiteParams& sp,
                                         double condition_cap, Tolerance tol) {
  TrialEnv env{space, sum_space, seed, condition_cap, tol};
  std::vector<Certificate> out;
  auto rng = vec_rng(env);
  int dim = space.dim();

  auto fp_alphas = or_default(sp.fp_alpha, {0.5, 0.3});
  auto pair = [&] { return gen_intertwined_pair(ispec(env, 0x70ULL)); };

  if (id == "lemma-schwarz") {
    auto pr = pair();
    Vector x = random_unit_vector(rng, dim);
    Vector y = random_unit_vector(rng, dim);
    for (double fa : fp_alphas)
      out.push_back(cert_lemma_schwarz(pr, FunctionPair::power(fa), x, y, tol));
  } else if (id == "lemma-refined-cs") {
    Matrix h = random_psd(ispec(env, 0x68ULL));
    Vector x = random_unit_vector(rng, dim);
    Vector y = random_unit_vector(rng, dim);
    for (double p : or_default(sp.p, {2.0, 2.5}))
      out.push_back(cert_lemma_refined_cs(h, p, x, y, tol));
  } else if (id == "thm-half-rB") {
    auto pr = pair();
    for (double fa : fp_alphas)
      out.push_back(cert_thm_half_rB(pr, FunctionPair::power(fa), space, tol));
  } else if (id == "remark-chain") {
    auto pr = pair();
    for (double fa : fp_alphas)
      out.push_back(cert_remark_chain(pr, FunctionPair::power(fa), space, tol));
  } else if (id == "thm-power-young" || id == "thm-power-young-refined") {
    auto pr = pair();
    bool refined = id == "thm-power-young-refined";
    for (double p : or_default(sp.p, {1.5, 2.0}))
      for (double alpha : or_default(sp.alpha, {2.0, 3.0}))
        for (double fa : fp_alphas) {
          auto fp = FunctionPair::power(fa);
          out.push_back(refined ? cert_thm_power_young_refined(pr, fp, space, p,
                                                               alpha, tol)
                                : cert_thm_power_young(pr, fp, space, p, alpha, tol));
        }
  } else if (id == "prop-refined") {
    auto pr = pair();
    int li = int(rng.next_u64() % std::uint64_t(space.num_points()));
    int mi = int(rng.next_u64() % std::uint64_t(space.num_points()));
    for (double p : or_default(sp.p, {2.0, 2.5}))
      for (double fa : fp_alphas)
        out.push_back(
            cert_prop_refined(pr, FunctionPair::power(fa), space, p, li, mi, tol));
  } else if (id == "cor-alpha") {
    auto pr = pair();
    int li = int(rng.next_u64() % std::uint64_t(space.num_points()));
    int mi = int(rng.next_u64() % std::uint64_t(space.num_points()));
    for (double p : or_default(sp.p, {2.0}))
      for (double alpha : or_default(sp.alpha, {0.5, 0.3}))
        out.push_back(cert_cor_alpha(pr, space, p, alpha, li, mi, tol));
  } else if (id == "thm-minmod") {
    auto pr = pair();
    for (double p : or_default(sp.p, {2.0, 3.0}))
      for (double fa : fp_alphas)
        out.push_back(cert_thm_minmod(pr, FunctionPair::power(fa), space, p, tol));
  } else if (id == "young-scalar") {
    double a = 10.0 * rng.uniform() + 1e-6;
    double b = 10.0 * rng.uniform() + 1e-6;
    double alpha = rng.uniform();
    out.push_back(cert_young_scalar(a, b, alpha, tol));
  } else if (id == "thm-young-refined") {
    auto pr = pair();
    for (double fa : fp_alphas)
      out.push_back(cert_thm_young_refined(pr, FunctionPair::power(fa), space, tol));
  } else if (id == "offdiag-convex") {
    if (!sum_space) throw ConfigError("offdiag-convex needs a direct-sum space");
    Matrix b = random_general(ispec(env, 0x62ULL));
    Matrix c = random_general(ispec(env, 0x63ULL));
    double fa = fp_alphas.front();
    for (double p : or_default(sp.p, {1.0, 2.0}))
      out.push_back(cert_offdiag_convex(b, c, FunctionPair::power(fa),
                                        ConvexFun::power(p), *sum_space,
                                        sp.angle_count, tol));
    if (sp.include_expm1)
      out.push_back(cert_offdiag_convex(b, c, FunctionPair::power(fa),
                                        ConvexFun::expm1(), *sum_space,
                                        sp.angle_count, tol));
  } else if (id == "offdiag-power") {
    if (!sum_space) throw ConfigError("offdiag-power needs a direct-sum space");
    Matrix b = random_general(ispec(env, 0x62ULL));
    Matrix c = random_general(ispec(env, 0x63ULL));
    for (double p : or_default(sp.p, {1.0, 2.0}))
      for (double alpha : or_default(sp.alpha, {0.5, 0.3}))
        out.push_back(cert_offdiag_power(b, c, alpha, p, *sum_space, tol));
  } else if (id == "polarization") {
    Vector x = random_unit_vector(rng, dim) * (1.0 + 3.0 * rng.uniform());
    Vector y = random_unit_vector(rng, dim) * (1.0 + 3.0 * rng.uniform());
    out.push_back(cert_polarization(x, y, tol));
  } else if (id == "mccarthy") {
    Matrix h = random_psd(ispec(env, 0x68ULL));
    Vector x = random_unit_vector(rng, dim) * (0.5 + 2.0 * rng.uniform());
    for (double p : or_default(sp.p, {0.5, 1.0, 2.5}))
      out.push_back(cert_mccarthy(h, p, x, tol));
  } else if (id == "mixed-schwarz") {
    Matrix a = random_general(ispec(env, 0x61ULL));
    Vector x = random_unit_vector(rng, dim);
    Vector y = random_unit_vector(rng, dim);
    for (double p : or_default(sp.alpha, {0.0, 0.3, 0.5, 1.0}))
      out.push_back(cert_mixed_schwarz(a, p, x, y, tol));
  } else if (id == "power-sum") {
    std::vector<double> xs(std::max(2, dim));
    for (auto& x : xs) x = 5.0 * rng.uniform() + 1e-6;
    for (double p : or_default(sp.p, {1.0, 2.7}))
      out.push_back(cert_power_sum(xs, p, tol));
  } else if (id == "cartesian-1" || id == "cartesian-2") {
    auto family = gen_cartesian_family(ispec(env, 0x66ULL), sp.family);
    bool two = id == "cartesian-2";
    for (double p : or_default(sp.p, {1.0, 2.0}))
      out.push_back(two ? cert_cartesian_2(family, space, p, tol)
                        : cert_cartesian_1(family, space, p, tol));
  } else if (id == "ki1") {
    Matrix a = random_general(ispec(env, 0x61ULL));
    Matrix b = random_general(ispec(env, 0x62ULL));
    out.push_back(cert_ki1(a, b, tol));
  } else if (id == "ki3") {
    Matrix a = random_psd(ispec(env, 0x61ULL));
    Matrix b = random_psd(ispec(env, 0x62ULL));
    out.push_back(cert_ki3(a, b, tol));
  } else if (id == "ber1") {
    Matrix a = random_psd(ispec(env, 0x61ULL));
    Matrix b = random_psd(ispec(env, 0x62ULL));
    out.push_back(cert_ber1(a, b, tol));
  } else {
    throw ConfigError("unknown suite id: " + id);
  }
  return out;
}

namespace {

// Off-diagonal suites pair a space with itself; large grids are coarsened so
// the product grid stays tractable.
SpaceSpec coarsen_for_pairing(const SpaceSpec& spec) {
  SpaceSpec s = spec;
  if (s.grid.kind == GridKind::DiscPolar) {
    s.grid.radial = std::min(s.grid.radial, 6);
    s.grid.angular = std::min(s.grid.angular, 20);
  } else if (s.grid.kind == GridKind::RealInterval) {
    s.grid.count = std::min(s.grid.count, 64);
  }
  return s;
}

double rel_margin(const Certificate& c) {
  return (c.rhs - c.lhs) / std::max(1.0, c.rhs);
}

std::vector<SuiteReport> run_impl(const RunConfig& raw) {
  RunConfig config = expand_and_validate(raw);
  std::vector<SuiteReport> reports;
  for (const auto& space_spec : config.spaces) {
    SampledSpace space = build_space(space_spec);
    std::optional<DirectSumSpace> sum_space;
    bool any_sum = std::any_of(config.suites.begin(), config.suites.end(),
                               [](const auto& s) { return suite_needs_sum_space(s.id); });
    if (any_sum) {
      SpaceSpec paired = coarsen_for_pairing(space_spec);
      if (paired.model == ModelKind::CustomGram) {
        sum_space.emplace(direct_sum(space, space));
      } else {
        SampledSpace half = build_space(paired);
        sum_space.emplace(direct_sum(half, half));
      }
    }
    for (const auto& suite : config.suites) {
      SuiteReport report;
      report.suite_id = suite.id;
      report.space = space_spec.describe();
      report.trials = config.trials;
      double min_gap = std::numeric_limits<double>::infinity();
      double sum_gap = 0.0;
      double worst_rel = std::numeric_limits<double>::infinity();
      std::uint64_t worst_rel_seed = 0;
      long count = 0;
      for (int t = 0; t < config.trials; ++t) {
        std::uint64_t seed = trial_seed(config.master_seed, t);
        auto certs =
            run_suite_trial(suite.id, space, sum_space ? &*sum_space : nullptr,
                            seed, suite.params, config.condition_cap, config.tol);
        for (auto& c : certs) {
          TrialRecord rec{t, seed, std::move(c)};
          min_gap = std::min(min_gap, rec.cert.gap);
          sum_gap += rec.cert.gap;
          double rm = rel_margin(rec.cert);
          if (rm < worst_rel) {
            worst_rel = rm;
            worst_rel_seed = seed;
          }
          ++count;
          if (!rec.cert.holds) report.violations.push_back(rec);
          report.certificates.push_back(std::move(rec));
        }
      }
      report.summary.min_gap = min_gap;
      report.summary.mean_gap = count ? sum_gap / double(count) : 0.0;
      report.summary.worst_rel_margin = worst_rel;
      report.summary.min_rel_gap = worst_rel;
      report.summary.min_rel_gap_seed = worst_rel_seed;
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

}  // namespace

std::vector<SuiteReport> run_certify(const RunConfig& config) {
  return run_impl(config);
}

std::vector<SuiteReport> run_tighten(const RunConfig& config) {
  RunConfig c = config;
  c.mode = RunMode::Tighten;
  return run_impl(c);
}

}  // namespace berlab
