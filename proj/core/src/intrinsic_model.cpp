#include "minkhelix/intrinsic_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "minkhelix/errors.hpp"
#include "minkhelix/number_format.hpp"
#include "minkhelix/quadrature.hpp"

namespace minkhelix {

namespace {

// Domain membership slack for points produced by arithmetic on the bounds.
double domain_slack(double s_min, double s_max) { return 1e-12 * std::max({1.0, std::abs(s_min), std::abs(s_max)}); }

}  // namespace

IntrinsicModel::IntrinsicModel(Expr kappa, Expr tau, double s_min, double s_max, std::optional<double> s_ref)
    : kappa_(std::move(kappa)), tau_(std::move(tau)), s_min_(s_min), s_max_(s_max), s_ref_(s_ref.value_or(s_min)) {
  if (!std::isfinite(s_min_) || !std::isfinite(s_max_) || !(s_min_ < s_max_)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "arc-length domain must satisfy s_min < s_max (got [" << s_min_ << ", " << s_max_ << "])";
    throw InvalidModel(msg.str());
  }
  if (!std::isfinite(s_ref_) || s_ref_ < s_min_ || s_ref_ > s_max_) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "reference point s_ref = " << s_ref_ << " lies outside [" << s_min_ << ", " << s_max_ << "]";
    throw InvalidModel(msg.str());
  }
  for (int i = 0; i < kModelValidationGrid; ++i) {
    const double s = uniform_point(s_min_, s_max_, i, kModelValidationGrid);
    const double k = this->kappa(s);
    const double t = this->tau(s);
    if (!(k > 0.0)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "curvature must be positive; kappa(" << s << ") = " << k;
      throw InvalidModel(msg.str());
    }
    if (t == 0.0) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "torsion must be non-zero; tau(" << s << ") = 0";
      throw InvalidModel(msg.str());
    }
    max_coefficient_ = std::max({max_coefficient_, k, std::abs(t)});
  }
}

IntrinsicModel IntrinsicModel::from_text(const std::string& kappa, const std::string& tau, double s_min, double s_max,
                                         std::optional<double> s_ref) {
  return IntrinsicModel(parse(kappa), parse(tau), s_min, s_max, s_ref);
}

bool IntrinsicModel::contains(double s) const {
  const double slack = domain_slack(s_min_, s_max_);
  return s >= s_min_ - slack && s <= s_max_ + slack;
}

SlopeReport check_slope(const IntrinsicModel& model, int grid_size, double ratio_tol) {
  if (grid_size < 2) throw InvalidConfig("check_slope needs a grid of at least 2 points");
  std::vector<double> ratios;
  ratios.reserve(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) {
    const double s = uniform_point(model.s_min(), model.s_max(), i, grid_size);
    ratios.push_back(model.tau(s) / model.kappa(s));
  }
  std::vector<double> sorted = ratios;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const double median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

  SlopeReport report;
  report.ratio = median;
  for (double r : ratios)
    report.max_ratio_deviation = std::max(report.max_ratio_deviation, std::abs(r - median) / std::abs(median));
  report.is_general_helix = report.max_ratio_deviation <= ratio_tol;
  return report;
}

double turning_angle(const IntrinsicModel& model, double s, double tol) {
  if (!model.contains(s)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "s = " << s << " outside the model domain [" << model.s_min() << ", " << model.s_max() << "]";
    throw DomainError(msg.str());
  }
  return adaptive_simpson([&](double u) { return model.kappa(u); }, model.s_ref(), s, tol);
}

double helix_phase(const IntrinsicModel& model, double alpha, double s, double tol) {
  if (alpha == 0.0) throw DomainError("helix phase needs a non-zero hyperbolic angle");
  return turning_angle(model, s, tol * std::abs(std::sinh(alpha))) / std::sinh(alpha);
}

}  // namespace minkhelix
