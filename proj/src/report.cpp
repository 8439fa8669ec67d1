// SPDX-License-Identifier: Apache-2.0

#include "abelzeta/report.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace abelzeta {

namespace {

long digits_for_bits(long bits) {
  return static_cast<long>(std::ceil(bits * 0.30103)) + 4;
}

std::string params_compact(const Json& params) {
  std::string out;
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (!out.empty()) out += ';';
    out += it.key();
    out += '=';
    out += it.value().get<std::string>();
  }
  return out;
}

}  // namespace

std::string mid_string(const Ball& b) {
  return decimal_str(b.mid().raw(), digits_for_bits(b.mid().prec()));
}

std::string rad_string(const Ball& b) {
  if (b.rad().is_zero()) return "0";
  return decimal_str(b.rad().raw(), 5);
}

std::string gap_string(const Real& gap) {
  if (gap.is_zero()) return "0";
  return decimal_str(gap.raw(), digits_for_bits(gap.prec()));
}

Json report_document(const SuiteConfig& config, const SuiteResult& result) {
  Json doc;
  doc["tool_version"] = kToolVersion;

  Json cfg;
  cfg["prec_bits"] = config.prec_bits;
  cfg["guard"] = config.guard;
  cfg["eps"] = config.eps;
  cfg["m_grid"] = config.m_grid;
  cfg["m23_grid"] = config.m23_grid;
  cfg["n_grid"] = config.n_grid;
  Json zs = Json::array();
  for (const auto& z : config.z_grid) zs.push_back(z.get_str());
  cfg["z_grid"] = zs;
  cfg["seed"] = config.lemma_seed;
  cfg["lemma_count"] = config.lemma_count;
  cfg["term_cap"] = config.term_cap;
  cfg["only"] = config.only;
  cfg["variant"] =
      config.variant_filter ? to_string(*config.variant_filter) : "";
  cfg["jobs"] = config.jobs;
  cfg["format"] = config.format;
  doc["config"] = cfg;

  Json rows = Json::array();
  for (const auto& r : result.rows) {
    Json row;
    row["identity_id"] = r.identity_id;
    Json params;
    for (const auto& [k, v] : r.params) params[k] = v;
    row["params"] = params;
    row["variant"] = to_string(r.variant);
    row["lhs_mid"] = mid_string(r.lhs);
    row["lhs_rad"] = rad_string(r.lhs);
    row["rhs_mid"] = mid_string(r.rhs);
    row["rhs_rad"] = rad_string(r.rhs);
    row["verdict"] = to_string(r.verdict);
    row["gap"] = gap_string(r.gap);
    row["terms_used"] = r.terms_used;
    row["prec_bits"] = r.prec_bits;
    rows.push_back(std::move(row));
  }
  doc["rows"] = rows;

  Json summary;
  summary["pass"] = result.summary.pass;
  summary["fail"] = result.summary.fail;
  summary["inconclusive"] = result.summary.inconclusive;
  summary["thm22_validated"] = result.summary.thm22_validated;
  summary["thm23_validated"] = result.summary.thm23_validated;
  summary["eq22_validated_sign"] = result.summary.eq22_validated_sign;
  doc["summary"] = summary;
  return doc;
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string render_csv(const Json& doc) {
  std::ostringstream out;
  out << "identity_id,params,variant,lhs_mid,lhs_rad,rhs_mid,rhs_rad,verdict,"
         "gap,terms_used,prec_bits\n";
  for (const auto& row : doc.at("rows")) {
    out << row.at("identity_id").get<std::string>() << ','
        << params_compact(row.at("params")) << ','
        << row.at("variant").get<std::string>() << ','
        << row.at("lhs_mid").get<std::string>() << ','
        << row.at("lhs_rad").get<std::string>() << ','
        << row.at("rhs_mid").get<std::string>() << ','
        << row.at("rhs_rad").get<std::string>() << ','
        << row.at("verdict").get<std::string>() << ','
        << row.at("gap").get<std::string>() << ','
        << row.at("terms_used").get<long>() << ','
        << row.at("prec_bits").get<long>() << '\n';
  }
  return out.str();
}

std::string render_markdown(const Json& doc) {
  std::ostringstream out;
  out << "# Identity verification report\n\n";
  out << "tool_version: " << doc.at("tool_version").get<std::string>()
      << "\n\n";
  if (doc.contains("summary")) {
    const auto& s = doc.at("summary");
    out << "summary: pass=" << s.at("pass").get<long>()
        << " fail=" << s.at("fail").get<long>()
        << " inconclusive=" << s.at("inconclusive").get<long>()
        << "; thm22=" << s.at("thm22_validated").get<std::string>()
        << ", thm23=" << s.at("thm23_validated").get<std::string>()
        << ", eq22_sign=" << s.at("eq22_validated_sign").get<std::string>()
        << "\n\n";
  }
  out << "| identity_id | params | variant | lhs_mid | lhs_rad | rhs_mid | "
         "rhs_rad | verdict | gap | terms_used | prec_bits |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& row : doc.at("rows")) {
    out << "| " << row.at("identity_id").get<std::string>() << " | "
        << params_compact(row.at("params")) << " | "
        << row.at("variant").get<std::string>() << " | "
        << row.at("lhs_mid").get<std::string>() << " | "
        << row.at("lhs_rad").get<std::string>() << " | "
        << row.at("rhs_mid").get<std::string>() << " | "
        << row.at("rhs_rad").get<std::string>() << " | "
        << row.at("verdict").get<std::string>() << " | "
        << row.at("gap").get<std::string>() << " | "
        << row.at("terms_used").get<long>() << " | "
        << row.at("prec_bits").get<long>() << " |\n";
  }
  return out.str();
}

std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return render_json(doc);
  if (format == "csv") return render_csv(doc);
  if (format == "md") return render_markdown(doc);
  throw std::invalid_argument("unknown report format: " + format);
}

Json parse_report(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw std::runtime_error("parse_report: malformed JSON");
  if (!doc.contains("tool_version") || !doc.contains("rows") ||
      !doc.contains("config"))
    throw std::runtime_error("parse_report: missing report fields");
  return doc;
}

int exit_code_for(const Json& doc) {
  long fail = 0, inconclusive = 0;
  for (const auto& row : doc.at("rows")) {
    const std::string v = row.at("verdict").get<std::string>();
    if (v == "fail") ++fail;
    if (v == "inconclusive") ++inconclusive;
  }
  if (fail > 0) return 1;
  if (inconclusive > 0) return 3;
  return 0;
}

}  // namespace abelzeta
