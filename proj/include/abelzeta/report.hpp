// SPDX-License-Identifier: Apache-2.0
//
// Lossless report serialization. JSON is the canonical on-disk format;
// midpoints, radii, and gaps are decimal strings so no binary-float loss can
// creep into stored evidence. CSV and markdown are renderings of the same
// document and never recompute anything.

#pragma once

#include <string>

#include <json.hpp>

#include "abelzeta/identities.hpp"

namespace abelzeta {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// {tool_version, config, rows, summary}; rows sorted by
// (identity_id, params, variant).
Json report_document(const SuiteConfig& config, const SuiteResult& result);

std::string render_json(const Json& doc);
std::string render_csv(const Json& doc);
std::string render_markdown(const Json& doc);
std::string render(const Json& doc, const std::string& format);

// Parses a previously written JSON report; throws std::runtime_error on
// malformed input.
Json parse_report(const std::string& text);

// 0 all pass, 1 any fail, 3 inconclusive rows but no fail.
int exit_code_for(const Json& doc);

// Midpoint rendered with all digits its precision supports plus slack.
std::string mid_string(const Ball& b);
std::string rad_string(const Ball& b);
std::string gap_string(const Real& gap);

}  // namespace abelzeta
