#pragma once

#include <vector>

#include "minkhelix/curve_sample.hpp"
#include "minkhelix/intrinsic_model.hpp"
#include "minkhelix/lorentz.hpp"

namespace minkhelix {

enum class IntegrationMethod { RK4 };

struct IntegratorConfig {
  double step = 1e-3;
  int reorthonormalize_every = 1;
  IntegrationMethod method = IntegrationMethod::RK4;
};

/// Largest h * max(kappa, |tau|) accepted by integrate().
inline constexpr double kStabilityLimit = 0.5;

/// Frame drift (orthonormality residual before re-projection) that aborts integration.
inline constexpr double kMaxFrameDrift = 1e-6;

struct FrameDerivative {
  LorentzVec3 dT;
  LorentzVec3 dN;
  LorentzVec3 dB;
};

/// Time-like Frenet equations: T' = kappa N, N' = kappa T + tau B, B' = -tau N.
FrameDerivative frenet_rhs(const FrenetFrame& frame, double kappa, double tau);

/// Lorentzian Gram-Schmidt in the order T, N, B. T keeps its time orientation;
/// throws FrameDrift if T is not time-like or N, B are not space-like after projection.
FrenetFrame lorentz_gram_schmidt(const FrenetFrame& frame);

/// Default initial frame: the closed-form helix frame at phase 0 when the model
/// is a time-like general helix, otherwise the standard basis (e1, e2, e3).
FrenetFrame default_initial_frame(const IntrinsicModel& model);

/// Classical RK4 on (psi, T, N, B) from s_ref over n_steps steps of config.step.
/// kappa and tau are evaluated at the stage abscissae s, s + h/2, s + h.
CurveSample integrate(const IntrinsicModel& model, const LorentzVec3& psi0, const FrenetFrame& frame0,
                      const IntegratorConfig& config, int n_steps);

struct ConvergenceResult {
  /// Least-squares slope of log(error) against log(h); NaN when undefined.
  double order = 0.0;
  bool defined = false;
  std::vector<double> steps;
  std::vector<double> errors;
};

/// Integrates from the first row of `reference` to its last row with each step
/// size and measures the end-point error (max over psi, T, N, B components).
ConvergenceResult convergence_order(const IntrinsicModel& model, const CurveSample& reference,
                                    const std::vector<double>& steps, int reorthonormalize_every = 1);

}  // namespace minkhelix
