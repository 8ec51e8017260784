#include "minkhelix/frenet_integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "minkhelix/errors.hpp"
#include "minkhelix/helix.hpp"

namespace minkhelix {

FrameDerivative frenet_rhs(const FrenetFrame& f, double kappa, double tau) {
  return {kappa * f.N, kappa * f.T + tau * f.B, -tau * f.N};
}

FrenetFrame lorentz_gram_schmidt(const FrenetFrame& f) {
  FrenetFrame out = f;
  const double tt = metric(out.T, out.T);
  if (!(tt < 0.0)) throw FrameDrift("tangent is no longer time-like");
  out.T *= 1.0 / std::sqrt(-tt);

  // Projection onto a unit time-like vector carries the sign of g(T,T) = -1.
  out.N += metric(out.N, out.T) * out.T;
  const double nn = metric(out.N, out.N);
  if (!(nn > 0.0)) throw FrameDrift("normal is not space-like after projection");
  out.N *= 1.0 / std::sqrt(nn);

  out.B += metric(out.B, out.T) * out.T;
  out.B -= metric(out.B, out.N) * out.N;
  const double bb = metric(out.B, out.B);
  if (!(bb > 0.0)) throw FrameDrift("binormal is not space-like after projection");
  out.B *= 1.0 / std::sqrt(bb);
  return out;
}

FrenetFrame default_initial_frame(const IntrinsicModel& model) {
  const SlopeReport slope = check_slope(model);
  if (slope.is_general_helix && std::abs(slope.ratio) > 1.0 + kTimelikeRatioMargin) {
    HelixParams params;
    params.alpha = solve_alpha(slope.ratio);
    return frame_at(params, 0.0);
  }
  return {kE1, kE2, kE3};
}

namespace {

struct State {
  LorentzVec3 psi;
  FrenetFrame frame;
};

State axpy(const State& y, double h, const State& k) {
  return {y.psi + h * k.psi, {y.frame.T + h * k.frame.T, y.frame.N + h * k.frame.N, y.frame.B + h * k.frame.B}};
}

State derivative(const State& y, double kappa, double tau) {
  const FrameDerivative d = frenet_rhs(y.frame, kappa, tau);
  return {y.frame.T, {d.dT, d.dN, d.dB}};
}

CurveSample integrate_from(const IntrinsicModel& model, double s0, const LorentzVec3& psi0, const FrenetFrame& frame0,
                           const IntegratorConfig& config, int n_steps) {
  const double h = config.step;
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidConfig("integration step must be positive");
  if (config.reorthonormalize_every < 1) throw InvalidConfig("reorthonormalize_every must be at least 1");
  if (n_steps < 1) throw InvalidConfig("integration needs at least one step");
  if (h * model.max_coefficient() >= kStabilityLimit) {
    std::ostringstream msg;
    msg << "step too large: h * max(kappa, |tau|) = " << h * model.max_coefficient() << " >= " << kStabilityLimit;
    throw InvalidConfig(msg.str());
  }
  const double s_end = s0 + h * n_steps;
  if (!model.contains(s0) || !model.contains(s_end)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "integration range [" << s0 << ", " << s_end << "] leaves the model domain [" << model.s_min() << ", "
        << model.s_max() << "]";
    throw DomainError(msg.str());
  }
  if (!(frame_residual(frame0) <= 1e-10)) throw DegenerateFrame("initial frame is not Lorentz-orthonormal");

  CurveSample sample;
  sample.meta.source = SampleSource::Integrated;
  sample.meta.kappa = print_expr(model.kappa_expr());
  sample.meta.tau = print_expr(model.tau_expr());
  sample.meta.s_min = model.s_min();
  sample.meta.s_max = model.s_max();
  sample.meta.s_ref = s0;
  sample.meta.step = h;
  sample.meta.reorthonormalize_every = config.reorthonormalize_every;
  sample.rows.reserve(static_cast<std::size_t>(n_steps) + 1);

  State y{psi0, frame0};
  const auto emit = [&](double s) { sample.rows.push_back({s, y.psi, y.frame, model.kappa(s), model.tau(s)}); };
  emit(s0);

  double kappa0 = model.kappa(s0);
  double tau0 = model.tau(s0);
  for (int i = 0; i < n_steps; ++i) {
    const double s = s0 + h * i;
    const double s_next = s0 + h * (i + 1);
    const double s_mid = s + 0.5 * h;
    const double kappa_mid = model.kappa(s_mid);
    const double tau_mid = model.tau(s_mid);
    const double kappa1 = model.kappa(s_next);
    const double tau1 = model.tau(s_next);

    const State k1 = derivative(y, kappa0, tau0);
    const State k2 = derivative(axpy(y, 0.5 * h, k1), kappa_mid, tau_mid);
    const State k3 = derivative(axpy(y, 0.5 * h, k2), kappa_mid, tau_mid);
    const State k4 = derivative(axpy(y, h, k3), kappa1, tau1);
    const double w = h / 6.0;
    y.psi += w * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi);
    y.frame.T += w * (k1.frame.T + 2.0 * k2.frame.T + 2.0 * k3.frame.T + k4.frame.T);
    y.frame.N += w * (k1.frame.N + 2.0 * k2.frame.N + 2.0 * k3.frame.N + k4.frame.N);
    y.frame.B += w * (k1.frame.B + 2.0 * k2.frame.B + 2.0 * k3.frame.B + k4.frame.B);

    if ((i + 1) % config.reorthonormalize_every == 0) {
      const double drift = frame_residual(y.frame);
      if (!(drift <= kMaxFrameDrift)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "frame drift " << drift << " at s = " << s_next << " exceeds " << kMaxFrameDrift
            << "; reduce the step";
        throw FrameDrift(msg.str());
      }
      y.frame = lorentz_gram_schmidt(y.frame);
    }
    kappa0 = kappa1;
    tau0 = tau1;
    emit(s_next);
  }
  return sample;
}

double end_point_error(const CurveRow& a, const CurveRow& b) {
  return std::max({max_abs(a.psi - b.psi), max_abs(a.frame.T - b.frame.T), max_abs(a.frame.N - b.frame.N),
                   max_abs(a.frame.B - b.frame.B)});
}

}  // namespace

CurveSample integrate(const IntrinsicModel& model, const LorentzVec3& psi0, const FrenetFrame& frame0,
                      const IntegratorConfig& config, int n_steps) {
  return integrate_from(model, model.s_ref(), psi0, frame0, config, n_steps);
}

ConvergenceResult convergence_order(const IntrinsicModel& model, const CurveSample& reference,
                                    const std::vector<double>& steps, int reorthonormalize_every) {
  if (reference.rows.size() < 2) throw InsufficientSamples("convergence reference needs at least 2 rows");
  const CurveRow& start = reference.rows.front();
  const CurveRow& end = reference.rows.back();
  const double span = end.s - start.s;

  ConvergenceResult result;
  for (double h : steps) {
    if (!(h > 0.0)) throw InvalidConfig("convergence steps must be positive");
    const double count = std::round(span / h);
    if (count < 1.0 || std::abs(count * h - span) > 1e-9 * std::max(1.0, std::abs(span))) {
      std::ostringstream msg;
      msg << "step " << h << " does not divide the reference span " << span;
      throw InvalidConfig(msg.str());
    }
    IntegratorConfig config;
    config.step = h;
    config.reorthonormalize_every = reorthonormalize_every;
    const CurveSample run =
        integrate_from(model, start.s, start.psi, start.frame, config, static_cast<int>(count));
    result.steps.push_back(h);
    result.errors.push_back(end_point_error(run.rows.back(), end));
  }

  // Fit needs two distinct step sizes and strictly positive errors.
  const bool distinct = std::adjacent_find(result.steps.begin(), result.steps.end(), std::not_equal_to<>()) !=
                        result.steps.end();
  const bool positive = std::all_of(result.errors.begin(), result.errors.end(),
                                    [](double e) { return e > 0.0 && std::isfinite(e); });
  if (!distinct || !positive) {
    result.order = std::numeric_limits<double>::quiet_NaN();
    result.defined = false;
    return result;
  }
  const double n = static_cast<double>(result.steps.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < result.steps.size(); ++i) {
    const double x = std::log(result.steps[i]);
    const double y = std::log(result.errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  result.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  result.defined = true;
  return result;
}

}  // namespace minkhelix
