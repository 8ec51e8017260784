#include "minkhelix/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "minkhelix/errors.hpp"
#include "minkhelix/helix.hpp"

namespace minkhelix {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// 4th-order central first derivative over points `stride` apart; the result
// drops 2 * stride entries at each end.
template <class V>
std::vector<V> central_diff(const std::vector<V>& f, double h, std::size_t stride = 1) {
  std::vector<V> d;
  const std::size_t m = stride;
  if (f.size() < 4 * m + 1) return d;
  d.reserve(f.size() - 4 * m);
  const double w = 1.0 / (12.0 * h * static_cast<double>(m));
  for (std::size_t i = 2 * m; i + 2 * m < f.size(); ++i)
    d.push_back(w * (f[i - 2 * m] - 8.0 * f[i - m] + 8.0 * f[i + m] - f[i + 2 * m]));
  return d;
}

template <class V>
std::vector<V> trim(const std::vector<V>& f, std::size_t per_side) {
  return std::vector<V>(f.begin() + static_cast<std::ptrdiff_t>(per_side),
                        f.end() - static_cast<std::ptrdiff_t>(per_side));
}

template <class Get>
std::vector<LorentzVec3> column(const CurveSample& sample, Get get) {
  std::vector<LorentzVec3> out;
  out.reserve(sample.rows.size());
  for (const CurveRow& r : sample.rows) out.push_back(get(r));
  return out;
}

double euclidean(const LorentzVec3& v) { return std::sqrt(v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3); }

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

double sample_spacing(const CurveSample& sample, std::size_t min_rows) {
  if (sample.rows.size() < min_rows) {
    throw InsufficientSamples("need at least " + std::to_string(min_rows) + " rows, sample has " +
                              std::to_string(sample.rows.size()));
  }
  const double h = (sample.rows.back().s - sample.rows.front().s) / static_cast<double>(sample.rows.size() - 1);
  if (!(h > 0.0)) throw InvalidConfig("sample arc length is not increasing");
  for (std::size_t i = 1; i < sample.rows.size(); ++i) {
    const double d = sample.rows[i].s - sample.rows[i - 1].s;
    if (std::abs(d - h) > 1e-6 * h) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "sample spacing is not uniform near s = " << sample.rows[i].s;
      throw InvalidConfig(msg.str());
    }
  }
  return h;
}

std::vector<CurvatureEstimate> estimate_curvatures(const CurveSample& sample, double degenerate_threshold) {
  const double h = sample_spacing(sample, 5);
  const auto dT = central_diff(column(sample, [](const CurveRow& r) { return r.frame.T; }), h);
  const auto dB = central_diff(column(sample, [](const CurveRow& r) { return r.frame.B; }), h);

  std::vector<CurvatureEstimate> out;
  out.reserve(dT.size());
  for (std::size_t k = 0; k < dT.size(); ++k) {
    const CurveRow& row = sample.rows[k + 2];
    CurvatureEstimate e;
    e.s = row.s;
    e.kappa = pseudo_norm(dT[k]);
    e.degenerate = !(e.kappa >= degenerate_threshold);
    e.tau = e.degenerate ? kNaN : -metric(dB[k], row.frame.N);
    out.push_back(e);
  }
  return out;
}

std::size_t ode_stencil_stride(const CurveSample& sample, const IntrinsicModel& model) {
  const double h = sample_spacing(sample, kOdeMinRows);
  const double target = kOdeStencilScale / std::max(1.0, model.max_coefficient());
  const std::size_t wanted = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(target / h - 1e-9)));
  const std::size_t fits = (sample.rows.size() - 1) / 12;
  return std::max<std::size_t>(1, std::min(wanted, fits));
}

std::vector<OdeResidual> ode_residual(const CurveSample& sample, const IntrinsicModel& model, std::size_t stride) {
  const double h = sample_spacing(sample, kOdeMinRows);
  const std::size_t n = sample.rows.size();
  const std::size_t m = stride == 0 ? ode_stencil_stride(sample, model) : stride;
  if (n < 12 * m + 1) {
    throw InsufficientSamples("fourth-order residual at stride " + std::to_string(m) + " needs " +
                              std::to_string(12 * m + 1) + " rows");
  }

  std::vector<double> inv_kappa(n), inv_tau(n), slope(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = sample.rows[i].s;
    const double k = model.kappa(s);
    const double t = model.tau(s);
    if (k == 0.0 || t == 0.0) throw EvalError("curvature or torsion vanishes on the sample");
    inv_kappa[i] = 1.0 / k;
    inv_tau[i] = 1.0 / t;
    slope[i] = k / t;
  }

  // Level 1 (rows 2m .. n-1-2m): psi'' = T'.
  const auto tangent = column(sample, [](const CurveRow& r) { return r.frame.T; });
  const std::vector<LorentzVec3> psi2 = central_diff(tangent, h, m);

  // Level 2 (rows 4m .. n-1-4m): d/ds((1/kappa) psi'').
  std::vector<LorentzVec3> scaled(psi2.size());
  for (std::size_t k = 0; k < psi2.size(); ++k) scaled[k] = inv_kappa[k + 2 * m] * psi2[k];
  const std::vector<LorentzVec3> level2 = central_diff(scaled, h, m);

  // Level 3 (rows 6m .. n-1-6m): d/ds[(1/tau) level2].
  std::vector<LorentzVec3> scaled2(level2.size());
  for (std::size_t k = 0; k < level2.size(); ++k) scaled2[k] = inv_tau[k + 4 * m] * level2[k];
  const std::vector<LorentzVec3> level3 = central_diff(scaled2, h, m);

  const std::vector<double> dslope = central_diff(slope, h, m);  // rows 2m .. n-1-2m

  std::vector<OdeResidual> out;
  out.reserve(level3.size());
  for (std::size_t k = 0; k < level3.size(); ++k) {
    const std::size_t row = k + 6 * m;
    const double ratio = 1.0 / slope[row];  // tau / kappa
    const LorentzVec3& second = psi2[row - 2 * m];
    const LorentzVec3 r = level3[k] + (ratio - slope[row]) * second - dslope[row - 2 * m] * tangent[row];
    out.push_back({sample.rows[row].s, euclidean(r) / std::max(1.0, pseudo_norm(second))});
  }
  return out;
}

AxisStatistics axis_check(const CurveSample& sample, const LorentzVec3& axis) {
  if (causal_character(axis) != CausalCharacter::TimeLike) throw NonTimelikeAxis("helix axis must be time-like");
  if (sample.rows.empty()) throw InsufficientSamples("axis check needs at least one row");
  double sum = 0.0;
  for (const CurveRow& r : sample.rows) sum += metric(r.frame.T, axis);
  const double n = static_cast<double>(sample.rows.size());
  AxisStatistics stats;
  stats.mean = sum / n;
  double var = 0.0;
  for (const CurveRow& r : sample.rows) {
    const double d = metric(r.frame.T, axis) - stats.mean;
    var += d * d;
  }
  stats.stddev = std::sqrt(var / n);
  return stats;
}

ValidationReport validate(const CurveSample& sample, const IntrinsicModel& model, const ValidationTolerances& tol) {
  ValidationReport report;
  const double h = sample_spacing(sample, kOdeMinRows);
  const auto add = [&](std::string name, double value, double tolerance, std::string note = {}) {
    report.checks.push_back({std::move(name), value, tolerance, value <= tolerance, false, std::move(note)});
  };
  const auto skip = [&](std::string name, double tolerance, std::string note) {
    report.checks.push_back({std::move(name), kNaN, tolerance, true, true, std::move(note)});
  };

  for (const CurveRow& r : sample.rows) {
    const double res = frame_residual(r.frame);
    report.max_frame_residual = std::isfinite(res) ? std::max(report.max_frame_residual, res) : res;
  }
  add("frame_orthonormality", report.max_frame_residual, tol.frame);

  const auto psi = column(sample, [](const CurveRow& r) { return r.psi; });
  const auto dpsi = central_diff(psi, h);
  for (std::size_t k = 0; k < dpsi.size(); ++k)
    report.max_tangent_residual = std::max(report.max_tangent_residual, max_abs(dpsi[k] - sample.rows[k + 2].frame.T));
  add("tangent_matches_position", report.max_tangent_residual, tol.tangent);

  const auto estimates = estimate_curvatures(sample);
  std::vector<double> ratios;
  ratios.reserve(estimates.size());
  for (const CurvatureEstimate& e : estimates) {
    const double k = model.kappa(e.s);
    const double t = model.tau(e.s);
    report.max_kappa_rel_err = std::max(report.max_kappa_rel_err, std::abs(e.kappa - k) / k);
    if (e.degenerate) {
      ++report.degenerate_rows;
      continue;
    }
    report.max_tau_rel_err = std::max(report.max_tau_rel_err, std::abs(e.tau - t) / std::abs(t));
    ratios.push_back(e.tau / e.kappa);
  }
  add("kappa_recovery", report.max_kappa_rel_err, tol.kappa_rel);
  add("tau_recovery", report.max_tau_rel_err, tol.tau_rel);
  add("degenerate_rows", static_cast<double>(report.degenerate_rows), 0.0);

  for (const OdeResidual& r : ode_residual(sample, model))
    report.max_ode_residual = std::max(report.max_ode_residual, r.residual);
  add("fourth_order_ode", report.max_ode_residual, tol.ode);

  const SlopeReport slope = check_slope(model);
  report.helix_checks = slope.is_general_helix && std::abs(slope.ratio) > 1.0 + kTimelikeRatioMargin;
  if (report.helix_checks && !ratios.empty()) {
    report.alpha = solve_alpha(slope.ratio);
    const FrenetFrame& f0 = sample.rows.front().frame;
    report.axis = std::cosh(report.alpha) * f0.T + std::sinh(report.alpha) * f0.B;
    if (causal_character(report.axis) == CausalCharacter::TimeLike) {
      const AxisStatistics axis = axis_check(sample, report.axis);
      report.axis_value = axis.mean;
      report.axis_stddev = axis.stddev;
      add("axis_angle", std::abs(axis.mean + std::cosh(report.alpha)), tol.axis, "|mean g(T,U) + cosh(alpha)|");
      add("axis_constancy", axis.stddev, tol.axis);
    } else {
      report.axis_value = report.axis_stddev = kNaN;
      add("axis_angle", kNaN, tol.axis, "axis recovered from the first row is not time-like");
      add("axis_constancy", kNaN, tol.axis, "axis recovered from the first row is not time-like");
    }

    double mean = 0.0;
    for (double r : ratios) mean += r;
    mean /= static_cast<double>(ratios.size());
    double var = 0.0;
    for (double r : ratios) var += (r - mean) * (r - mean);
    report.slope_ratio_median = median_of(ratios);
    report.slope_ratio_stddev = std::sqrt(var / static_cast<double>(ratios.size())) / std::abs(mean);
    add("slope_ratio_constancy", report.slope_ratio_stddev, tol.slope_ratio);
    add("slope_ratio_value", std::abs(report.slope_ratio_median - slope.ratio) / std::abs(slope.ratio),
        tol.slope_ratio);
  } else {
    const std::string why = "model is not a time-like general helix";
    skip("axis_angle", tol.axis, why);
    skip("axis_constancy", tol.axis, why);
    skip("slope_ratio_constancy", tol.slope_ratio, why);
    skip("slope_ratio_value", tol.slope_ratio, why);
  }

  const bool ok = std::all_of(report.checks.begin(), report.checks.end(), [](const CheckResult& c) { return c.passed; });
  report.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return report;
}

}  // namespace minkhelix
