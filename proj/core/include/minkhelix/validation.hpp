#pragma once

#include <string>
#include <vector>

#include "minkhelix/curve_sample.hpp"
#include "minkhelix/intrinsic_model.hpp"
#include "minkhelix/lorentz.hpp"

namespace minkhelix {

/// Below this |T'| a row is degenerate: the normal, and hence tau, is undefined.
inline constexpr double kDegenerateCurvature = 1e-9;

struct CurvatureEstimate {
  double s = 0.0;
  double kappa = 0.0;
  double tau = 0.0;  // NaN when degenerate
  bool degenerate = false;
};

/// kappa = |T'| and tau = -g(B', N) from 5-point central differences of the
/// sample's T and B columns. The two rows at each end are not reported.
std::vector<CurvatureEstimate> estimate_curvatures(const CurveSample& sample,
                                                   double degenerate_threshold = kDegenerateCurvature);

struct OdeResidual {
  double s = 0.0;
  double residual = 0.0;
};

/// Minimum rows for ode_residual to report at least one row.
inline constexpr std::size_t kOdeMinRows = 13;

/// Target of stride * h * max(1, max(kappa, |tau|)) for the nested stencils.
inline constexpr double kOdeStencilScale = 1e-2;

/// Stride used by ode_residual when none is given: the smallest m with
/// m * h >= kOdeStencilScale / max(1, max(kappa, |tau|)), capped so that
/// at least one row is reported.
std::size_t ode_stencil_stride(const CurveSample& sample, const IntrinsicModel& model);

/// Residual of the fourth-order position equation
///   d/ds[(1/tau) d/ds((1/kappa) psi'')] + (tau/kappa - kappa/tau) psi'' - (kappa/tau)' psi' = 0
/// with psi' taken from the sample's T column and every further derivative
/// from nested 5-point stencils over rows `stride` apart (each nesting drops
/// 2 * stride rows per side; 0 selects ode_stencil_stride). Three nested
/// derivatives amplify rounding noise by (1.5 / (stride h))^3, hence the stride.
/// Coefficients come from the model. Euclidean norm scaled by max(1, |psi''|).
std::vector<OdeResidual> ode_residual(const CurveSample& sample, const IntrinsicModel& model,
                                      std::size_t stride = 0);

struct AxisStatistics {
  double mean = 0.0;
  double stddev = 0.0;
};

/// Mean and population standard deviation of g(T, axis) over all rows.
AxisStatistics axis_check(const CurveSample& sample, const LorentzVec3& axis);

struct ValidationTolerances {
  double frame = 1e-8;
  double kappa_rel = 1e-4;
  double tau_rel = 1e-4;
  double ode = 1e-4;
  double tangent = 1e-6;
  double axis = 1e-8;
  double slope_ratio = 1e-6;
};

enum class Verdict { Pass, Fail };

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool skipped = false;
  std::string note;
};

struct ValidationReport {
  double max_frame_residual = 0.0;
  double max_kappa_rel_err = 0.0;
  double max_tau_rel_err = 0.0;
  double max_ode_residual = 0.0;
  double max_tangent_residual = 0.0;
  std::size_t degenerate_rows = 0;
  bool helix_checks = false;
  double alpha = 0.0;
  LorentzVec3 axis;
  double axis_value = 0.0;
  double axis_stddev = 0.0;
  double slope_ratio_median = 0.0;
  double slope_ratio_stddev = 0.0;  // relative
  Verdict verdict = Verdict::Fail;
  std::vector<CheckResult> checks;
};

/// Certifies that `sample` realises the intrinsic equations of `model`.
/// Helix checks run when the model has constant tau/kappa with |tau/kappa| > 1;
/// the axis is recovered from the first row as cosh(alpha) T + sinh(alpha) B.
ValidationReport validate(const CurveSample& sample, const IntrinsicModel& model,
                          const ValidationTolerances& tolerances = {});

/// Uniform spacing of the sample's s column; throws if rows are fewer than
/// `min_rows` or the spacing is not uniform to 1e-6 relative.
double sample_spacing(const CurveSample& sample, std::size_t min_rows);

}  // namespace minkhelix
