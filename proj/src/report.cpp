// SPDX-License-Identifier: Apache-2.0
#include "berlab/report.hpp"

#include <fstream>
#include <sstream>

namespace berlab {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ConfigError("complex numbers must be encoded as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("matrix must be an array of rows");
  Eigen::Index rows = Eigen::Index(j.size());
  Eigen::Index cols = Eigen::Index(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (Eigen::Index(j[r].size()) != cols)
      throw ConfigError("matrix rows have inconsistent lengths");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

json berezin_eval_to_json(const BerezinEvaluation& e) {
  json values = json::array();
  for (const auto& v : e.values) values.push_back(complex_to_json(v));
  return {{"values", std::move(values)},
          {"berValue", e.ber_value},
          {"argmaxIndex", e.argmax_index}};
}

json certificate_to_json(const Certificate& c) {
  json j;
  j["theoremId"] = c.theorem_id;
  j["mode"] = to_string(c.mode);
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["gap"] = c.gap;
  j["holds"] = c.holds;
  j["witnessIndex"] = c.witness_index;
  json params = json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  j["params"] = std::move(params);
  return j;
}

namespace {

json trial_to_json(const TrialRecord& t) {
  json j;
  j["trial"] = t.trial;
  j["seed"] = t.seed;
  j["certificate"] = certificate_to_json(t.cert);
  return j;
}

}  // namespace

json report_to_json(const SuiteReport& r) {
  json j;
  j["suiteId"] = r.suite_id;
  j["space"] = r.space;
  j["trials"] = r.trials;
  j["certificateCount"] = r.certificates.size();
  json viol = json::array();
  for (const auto& v : r.violations) viol.push_back(trial_to_json(v));
  j["violations"] = std::move(viol);
  j["summary"] = {{"minGap", r.summary.min_gap},
                  {"meanGap", r.summary.mean_gap},
                  {"worstRelMargin", r.summary.worst_rel_margin},
                  {"minRelGap", r.summary.min_rel_gap},
                  {"minRelGapSeed", r.summary.min_rel_gap_seed}};
  return j;
}

json reports_to_json(const std::vector<SuiteReport>& reports,
                     const std::string& timestamp) {
  json j;
  j["meta"] = {{"tool", "berlab"}, {"timestamp", timestamp}};
  json suites = json::array();
  for (const auto& r : reports) suites.push_back(report_to_json(r));
  j["suites"] = std::move(suites);
  return j;
}

std::string reports_to_csv(const std::vector<SuiteReport>& reports) {
  std::ostringstream os;
  os << "suiteId,trial,theoremId,mode,lhs,rhs,gap,holds,witnessIndex,params\n";
  os.precision(17);
  for (const auto& r : reports) {
    for (const auto& t : r.certificates) {
      os << r.suite_id << ',' << t.trial << ',' << t.cert.theorem_id << ','
         << to_string(t.cert.mode) << ',' << t.cert.lhs << ',' << t.cert.rhs << ','
         << t.cert.gap << ',' << (t.cert.holds ? 1 : 0) << ','
         << t.cert.witness_index << ',';
      bool first = true;
      for (const auto& [k, v] : t.cert.params) {
        if (!first) os << '|';
        os << k << '=' << v;
        first = false;
      }
      os << '\n';
    }
  }
  return os.str();
}

namespace {

GridSpec parse_grid(const json& j) {
  GridSpec g;
  std::string type = j.value("type", "index");
  if (type == "disc") {
    g.kind = GridKind::DiscPolar;
    g.radial = j.value("radial", 10);
    g.angular = j.value("angular", 32);
    g.rmax = j.value("rmax", 0.95);
  } else if (type == "interval") {
    g.kind = GridKind::RealInterval;
    g.a = j.at("a").get<double>();
    g.b = j.at("b").get<double>();
    g.count = j.at("count").get<int>();
  } else if (type == "index") {
    g.kind = GridKind::IndexSet;
    g.size = j.value("size", 0);
  } else {
    throw ConfigError("unknown grid type: " + type);
  }
  return g;
}

json grid_to_json(const GridSpec& g) {
  switch (g.kind) {
    case GridKind::DiscPolar:
      return {{"type", "disc"}, {"radial", g.radial}, {"angular", g.angular},
              {"rmax", g.rmax}};
    case GridKind::RealInterval:
      return {{"type", "interval"}, {"a", g.a}, {"b", g.b}, {"count", g.count}};
    case GridKind::IndexSet:
      return {{"type", "index"}};
  }
  return {};
}

ModelKind parse_model(const std::string& m) {
  if (m == "diagonal") return ModelKind::Diagonal;
  if (m == "hardy") return ModelKind::Hardy;
  if (m == "bergman") return ModelKind::Bergman;
  if (m == "custom") return ModelKind::CustomGram;
  throw ConfigError("unknown model: " + m);
}

}  // namespace

SpaceSpec parse_space_spec(const json& j) {
  SpaceSpec s;
  s.model = parse_model(j.value("model", "diagonal"));
  s.dim = j.at("dim").get<int>();
  if (j.contains("grid")) s.grid = parse_grid(j.at("grid"));
  if (s.model == ModelKind::Diagonal) {
    s.grid.kind = GridKind::IndexSet;
    s.grid.size = s.dim;
  }
  if (s.model == ModelKind::CustomGram) {
    if (!j.contains("kernels")) throw ConfigError("custom model needs kernels");
    const json& ks = j.at("kernels");
    Eigen::Index n = Eigen::Index(ks.size());
    if (n == 0) throw ConfigError("custom model needs at least one kernel");
    Matrix m(s.dim, n);
    for (Eigen::Index c = 0; c < n; ++c) {
      if (Eigen::Index(ks[c].size()) != s.dim)
        throw ConfigError("custom kernel length does not match dim");
      for (Eigen::Index r = 0; r < s.dim; ++r)
        m(r, c) = complex_from_json(ks[c][r]);
    }
    s.custom_kernels = std::move(m);
    if (s.grid.kind == GridKind::IndexSet && s.grid.size == 0)
      s.grid.size = int(n);
  }
  return s;
}

json space_spec_to_json(const SpaceSpec& s) {
  json j;
  j["model"] = to_string(s.model);
  j["dim"] = s.dim;
  j["grid"] = grid_to_json(s.grid);
  return j;
}

FunctionPair parse_function_pair(const json& j) {
  std::string kind = j.value("kind", "power");
  if (kind == "power") return FunctionPair::power(j.value("alpha", 0.5));
  if (kind == "custom") {
    std::vector<std::array<double, 3>> samples;
    for (const auto& row : j.at("samples")) {
      if (row.size() != 3) throw ConfigError("custom pair samples are [t, f, g]");
      samples.push_back({row[0].get<double>(), row[1].get<double>(),
                         row[2].get<double>()});
    }
    return FunctionPair::tabulated(std::move(samples));
  }
  throw ConfigError("unknown function pair kind: " + kind);
}

namespace {

SuiteParams parse_suite_params(const json& j) {
  SuiteParams p;
  if (j.contains("p")) p.p = j.at("p").get<std::vector<double>>();
  if (j.contains("alpha")) p.alpha = j.at("alpha").get<std::vector<double>>();
  if (j.contains("fpAlpha")) p.fp_alpha = j.at("fpAlpha").get<std::vector<double>>();
  p.family = j.value("family", p.family);
  p.angle_count = j.value("angleCount", p.angle_count);
  p.include_expm1 = j.value("includeExpm1", p.include_expm1);
  return p;
}

}  // namespace

RunConfig parse_config(const json& j) {
  RunConfig c;
  if (j.contains("spaces"))
    for (const auto& s : j.at("spaces")) c.spaces.push_back(parse_space_spec(s));
  if (j.contains("suites")) {
    for (const auto& s : j.at("suites")) {
      SuiteSelection sel;
      if (s.is_string()) {
        sel.id = s.get<std::string>();
      } else {
        sel.id = s.at("id").get<std::string>();
        sel.params = parse_suite_params(s);
      }
      c.suites.push_back(std::move(sel));
    }
  }
  c.trials = j.value("trials", c.trials);
  c.master_seed = j.value("masterSeed", c.master_seed);
  c.condition_cap = j.value("conditionCap", c.condition_cap);
  c.tol.rel = j.value("tolRel", c.tol.rel);
  c.tol.abs_scale = j.value("tolAbs", c.tol.abs_scale);
  std::string mode = j.value("mode", "certify");
  if (mode == "certify") c.mode = RunMode::Certify;
  else if (mode == "tighten") c.mode = RunMode::Tighten;
  else throw ConfigError("unknown mode: " + mode);
  return c;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return parse_config(j);
}

}  // namespace berlab
