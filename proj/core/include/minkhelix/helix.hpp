#pragma once

#include "minkhelix/curve_sample.hpp"
#include "minkhelix/intrinsic_model.hpp"
#include "minkhelix/lorentz.hpp"

namespace minkhelix {

/// Margin by which |tau/kappa| must exceed 1 for a time-like helix.
inline constexpr double kTimelikeRatioMargin = 1e-12;

/// Hyperbolic angle alpha with coth(alpha) = tau/kappa. Throws NonTimelikeHelix
/// when |ratio| <= 1 + kTimelikeRatioMargin: no time-like general helix exists.
double solve_alpha(double ratio);

/// Closed-form frame of a time-like general helix at phase phi:
///   T = (cosh a, sinh a cos phi, sinh a sin phi)
///   N = (0, -sin phi, cos phi)
///   B = -(sinh a, cosh a cos phi, cosh a sin phi)
/// with x3 components multiplied by params.orientation_sign.
FrenetFrame frame_at(const HelixParams& params, double phi);

/// Helix data for a general-helix model (validates the slope first).
HelixParams helix_params(const IntrinsicModel& model, const LorentzVec3& C = {}, int orientation_sign = 1);

/// Closed-form reconstruction of a time-like general helix on `n_samples`
/// uniformly spaced arc-length values spanning the model domain.
///
/// Position is C + sinh(alpha) * integral from s_ref of (coth alpha, cos phi, sin phi),
/// accumulated piecewise between consecutive samples so that the total
/// quadrature error per component stays below tol / 3.
///
/// Throws NotGeneralHelix if tau/kappa is not constant, NonTimelikeHelix if
/// |tau/kappa| <= 1, and propagates QuadratureFailure / EvalError.
CurveSample reconstruct(const IntrinsicModel& model, int n_samples, const LorentzVec3& C = {},
                        double tol = kDefaultQuadratureTol, int orientation_sign = 1);

/// The printed closed forms of the three worked examples (integration constant 0):
///   1: kappa = a sinh(alpha), tau = a cosh(alpha); theta = a s,
///      psi = sinh(alpha)/a (coth(alpha) theta, sin theta, -cos theta)
///   2: kappa = sinh(alpha)/s, tau = cosh(alpha)/s; phi = ln s,
///      psi = sinh(alpha)/2 e^phi (2 coth(alpha), sin phi + cos phi, sin phi - cos phi)
///   3: kappa = sinh(alpha)/(s^2+1), tau = cosh(alpha)/(s^2+1); phi = arctan s,
///      psi = sinh(alpha) (coth(alpha) tan phi, ln(sec phi + tan phi), sec phi)
/// `a` is used by example 1 only. Throws DomainError outside the domains.
LorentzVec3 closed_form_example(int id, double alpha, double a, double s);

/// Phase phi(s) of an example, anchored as in the closed forms above.
double example_phase(int id, double a, double s);

struct ExampleModelText {
  std::string kappa;
  std::string tau;
};

/// kappa/tau expressions of an example, parseable by parse().
ExampleModelText example_model_text(int id, double alpha, double a = 1.0);

/// Default arc-length start of an example (0, 1, 0).
double example_default_s_min(int id);

/// Samples the closed form of an example directly; frames from frame_at.
/// Requires alpha > 0 (the examples have kappa = sinh(alpha) * (...) > 0).
CurveSample example_sample(int id, double alpha, double a, double s_min, double s_max, int n_samples);

}  // namespace minkhelix
