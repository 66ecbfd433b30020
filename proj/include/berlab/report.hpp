// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "berlab/suites.hpp"

namespace berlab {

using json = nlohmann::ordered_json;

json certificate_to_json(const Certificate& c);
json berezin_eval_to_json(const BerezinEvaluation& e);
json report_to_json(const SuiteReport& r);

/// {meta: {...}, suites: [...]}; the timestamp lives only in meta.timestamp so
/// determinism checks can drop that one field.
json reports_to_json(const std::vector<SuiteReport>& reports,
                     const std::string& timestamp);

/// Header plus one row per certificate:
/// suiteId,trial,theoremId,mode,lhs,rhs,gap,holds,witnessIndex,params
std::string reports_to_csv(const std::vector<SuiteReport>& reports);

RunConfig parse_config(const json& j);
RunConfig load_config_file(const std::string& path);

json space_spec_to_json(const SpaceSpec& s);
SpaceSpec parse_space_spec(const json& j);

/// [re, im] encoding used everywhere complex numbers cross the JSON boundary.
json complex_to_json(const Complex& z);
Complex complex_from_json(const json& j);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

FunctionPair parse_function_pair(const json& j);

}  // namespace berlab
