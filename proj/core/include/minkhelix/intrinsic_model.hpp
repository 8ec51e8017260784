#pragma once

#include <optional>
#include <string>

#include "minkhelix/expr.hpp"

namespace minkhelix {

inline constexpr int kModelValidationGrid = 257;
inline constexpr double kDefaultQuadratureTol = 1e-10;
inline constexpr double kDefaultRatioTol = 1e-9;

struct SlopeReport {
  bool is_general_helix = false;
  /// Median of tau/kappa over the grid.
  double ratio = 0.0;
  /// Max relative deviation of tau/kappa from the median.
  double max_ratio_deviation = 0.0;
};

/// Intrinsic equations kappa(s), tau(s) on an arc-length interval.
///
/// Construction validates kappa > 0 and tau != 0 on a uniform grid of
/// kModelValidationGrid points; integrals are anchored at `s_ref`
/// (theta(s_ref) = phi(s_ref) = 0).
class IntrinsicModel {
 public:
  IntrinsicModel(Expr kappa, Expr tau, double s_min, double s_max, std::optional<double> s_ref = std::nullopt);

  /// Parses both expressions first; ParseError propagates unchanged.
  static IntrinsicModel from_text(const std::string& kappa, const std::string& tau, double s_min, double s_max,
                                  std::optional<double> s_ref = std::nullopt);

  const Expr& kappa_expr() const { return kappa_; }
  const Expr& tau_expr() const { return tau_; }
  double s_min() const { return s_min_; }
  double s_max() const { return s_max_; }
  double s_ref() const { return s_ref_; }

  double kappa(double s) const { return eval(kappa_, s); }
  double tau(double s) const { return eval(tau_, s); }

  bool contains(double s) const;

  /// max(kappa, |tau|) over the validation grid.
  double max_coefficient() const { return max_coefficient_; }

 private:
  Expr kappa_;
  Expr tau_;
  double s_min_;
  double s_max_;
  double s_ref_;
  double max_coefficient_ = 0.0;
};

/// Tests constancy of tau/kappa on a uniform grid of `grid_size` points.
SlopeReport check_slope(const IntrinsicModel& model, int grid_size = kModelValidationGrid,
                        double ratio_tol = kDefaultRatioTol);

/// theta(s) = integral of kappa from s_ref to s (adaptive Simpson, absolute tolerance `tol`).
double turning_angle(const IntrinsicModel& model, double s, double tol = kDefaultQuadratureTol);

/// phi(s) = csch(alpha) * theta(s), with theta resolved to tol * |sinh(alpha)|.
double helix_phase(const IntrinsicModel& model, double alpha, double s, double tol = kDefaultQuadratureTol);

}  // namespace minkhelix
