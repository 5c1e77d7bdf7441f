#pragma once

// Report emission: a stable JSON schema and a human PASS/FAIL rendering.
// Canonical mode omits timing so identical inputs produce byte-identical
// documents; verbose mode adds per-check elapsed microseconds.

#include <json.hpp>

#include <ostream>

#include "mpk/report.hpp"

namespace mpk {

using Json = nlohmann::ordered_json;

inline Json report_to_json(const Report& r, bool verbose) {
  Json j;
  j["law"] = r.law;
  j["target"] = r.target;
  j["holds"] = r.holds;
  if (r.counterexample) {
    Json ce;
    ce["indices"] = r.counterexample->indices;
    ce["lhs"] = r.counterexample->lhs;
    ce["rhs"] = r.counterexample->rhs;
    j["counterexample"] = ce;
  } else {
    j["counterexample"] = nullptr;
  }
  j["checked_tuples"] = r.checked_tuples;
  if (verbose) j["elapsed_us"] = r.micros;
  return j;
}

inline Json reports_to_json(const std::vector<Report>& rs,
                            const std::string& workspace,
                            bool verbose = false) {
  Json j;
  j["workspace"] = workspace;
  j["results"] = Json::array();
  long pass = 0;
  for (const Report& r : rs) {
    j["results"].push_back(report_to_json(r, verbose));
    if (r.holds) ++pass;
  }
  Json summary;
  summary["checked"] = rs.size();
  summary["passed"] = pass;
  summary["failed"] = static_cast<long>(rs.size()) - pass;
  summary["ok"] = pass == static_cast<long>(rs.size());
  j["summary"] = summary;
  return j;
}

inline std::string indices_str(const std::vector<int>& idx) {
  std::string s = "(";
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += "e" + std::to_string(idx[i]);
  }
  return s + ")";
}

inline void print_human(std::ostream& os, const std::vector<Report>& rs,
                        bool verbose = false) {
  long pass = 0;
  for (const Report& r : rs) {
    os << (r.holds ? "PASS" : "FAIL") << "  " << r.law;
    if (!r.target.empty()) os << " on " << r.target;
    os << "  [" << r.checked_tuples << " tuples";
    if (verbose) os << ", " << r.micros << " us";
    os << "]";
    if (r.counterexample) {
      os << "\n      at " << indices_str(r.counterexample->indices)
         << ": lhs = " << r.counterexample->lhs
         << ", rhs = " << r.counterexample->rhs;
    }
    os << "\n";
    if (r.holds) ++pass;
  }
  os << (pass == static_cast<long>(rs.size()) ? "ok" : "FAILED") << ": "
     << pass << "/" << rs.size() << " checks passed\n";
}

// json | human, selected once per invocation.
enum class ReportFormat { human, json };

inline std::string emit_report(const std::vector<Report>& rs,
                               ReportFormat format,
                               const std::string& workspace = "",
                               bool verbose = false) {
  if (format == ReportFormat::json)
    return reports_to_json(rs, workspace, verbose).dump(2) + "\n";
  std::ostringstream os;
  print_human(os, rs, verbose);
  return os.str();
}

}  // namespace mpk
