#include "report_json.hpp"

#include <cmath>

#include <json.hpp>

namespace minkhelix::io {

namespace {

using Json = nlohmann::ordered_json;

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

std::string report_to_json(const ValidationReport& r) {
  Json summary = Json::object();
  summary["max_frame_residual"] = number_or_null(r.max_frame_residual);
  summary["max_kappa_rel_err"] = number_or_null(r.max_kappa_rel_err);
  summary["max_tau_rel_err"] = number_or_null(r.max_tau_rel_err);
  summary["max_ode_residual"] = number_or_null(r.max_ode_residual);
  summary["max_tangent_residual"] = number_or_null(r.max_tangent_residual);
  summary["degenerate_rows"] = r.degenerate_rows;
  summary["helix_checks"] = r.helix_checks;
  if (r.helix_checks) {
    summary["alpha"] = r.alpha;
    summary["axis"] = Json::array({r.axis.x1, r.axis.x2, r.axis.x3});
    summary["axis_value"] = number_or_null(r.axis_value);
    summary["axis_stddev"] = number_or_null(r.axis_stddev);
    summary["slope_ratio_median"] = number_or_null(r.slope_ratio_median);
    summary["slope_ratio_stddev"] = number_or_null(r.slope_ratio_stddev);
  }

  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json j = Json::object();
    j["name"] = c.name;
    j["value"] = number_or_null(c.value);
    j["tolerance"] = c.tolerance;
    j["passed"] = c.passed;
    j["skipped"] = c.skipped;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }

  Json doc = Json::object();
  doc["verdict"] = r.verdict == Verdict::Pass ? "pass" : "fail";
  doc["summary"] = std::move(summary);
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

}  // namespace minkhelix::io
