// SPDX-License-Identifier: Apache-2.0
//
// berlab: certify Berezin-number inequalities on sampled RKHS models.
//
//   berlab certify --config cfg.json [--out dir] [--format json|csv]
//                  [--seed N] [--trials N] [--suite id ...]
//   berlab tighten ... (same flags; reports minimum relative gaps)
//
// Exit codes: 0 all certificates hold, 1 at least one violation,
// 2 configuration error before any suite ran.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "berlab/report.hpp"
#include "berlab/suites.hpp"

namespace {

std::string now_iso8601() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::ostringstream os;
  os << std::put_time(std::gmtime(&t), "%FT%TZ");
  return os.str();
}

struct CliOptions {
  std::string config_path;
  std::string out_dir;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int trials = 0;
  std::vector<std::string> suite_ids;
};

int run(const CliOptions& opt, berlab::RunMode mode) {
  berlab::RunConfig config;
  try {
    config = berlab::load_config_file(opt.config_path);
    config.mode = mode;
    if (opt.seed_set) config.master_seed = opt.seed;
    if (opt.trials > 0) config.trials = opt.trials;
    if (!opt.suite_ids.empty()) {
      config.suites.clear();
      for (const auto& id : opt.suite_ids) config.suites.push_back({id, {}});
    }
    config = berlab::expand_and_validate(config);
  } catch (const berlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const berlab::GridError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  std::vector<berlab::SuiteReport> reports;
  try {
    reports = mode == berlab::RunMode::Tighten ? berlab::run_tighten(config)
                                               : berlab::run_certify(config);
  } catch (const berlab::Error& e) {
    std::cerr << "run failed: " << e.what() << "\n";
    return 2;
  }

  size_t total_violations = 0;
  for (const auto& r : reports) {
    total_violations += r.violations.size();
    std::cout << r.suite_id << " @ " << r.space << ": "
              << r.certificates.size() << " certificates, "
              << r.violations.size() << " violations";
    if (mode == berlab::RunMode::Tighten)
      std::cout << ", min rel gap " << r.summary.min_rel_gap << " (seed "
                << r.summary.min_rel_gap_seed << ")";
    std::cout << "\n";
  }

  if (!opt.out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(opt.out_dir);
    std::string stem =
        mode == berlab::RunMode::Tighten ? "tighten_report" : "certify_report";
    try {
      if (opt.format == "csv") {
        std::ofstream out(fs::path(opt.out_dir) / (stem + ".csv"));
        out << berlab::reports_to_csv(reports);
      } else {
        std::ofstream out(fs::path(opt.out_dir) / (stem + ".json"));
        out << berlab::reports_to_json(reports, now_iso8601()).dump(2) << "\n";
      }
    } catch (const std::exception& e) {
      std::cerr << "io error: " << e.what() << "\n";
      return 2;
    }
  }
  return total_violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berezin-number inequality certification lab"};
  app.require_subcommand(1);

  CliOptions opt;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opt.config_path, "run configuration JSON")
        ->required();
    cmd->add_option("--out", opt.out_dir, "output directory for reports");
    cmd->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", opt.seed, "override master seed")
        ->each([&](const std::string&) { opt.seed_set = true; });
    cmd->add_option("--trials", opt.trials, "override trial count");
    cmd->add_option("--suite", opt.suite_ids, "restrict to these suite ids");
  };
  auto* certify = app.add_subcommand("certify", "run certification suites");
  auto* tighten = app.add_subcommand("tighten", "report minimum relative gaps");
  add_common(certify);
  add_common(tighten);

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(certify)) return run(opt, berlab::RunMode::Certify);
  return run(opt, berlab::RunMode::Tighten);
}
