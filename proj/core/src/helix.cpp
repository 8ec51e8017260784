#include "minkhelix/helix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "minkhelix/errors.hpp"
#include "minkhelix/number_format.hpp"
#include "minkhelix/quadrature.hpp"

namespace minkhelix {

double solve_alpha(double ratio) {
  if (!(std::abs(ratio) > 1.0 + kTimelikeRatioMargin)) throw NonTimelikeHelix(ratio);
  return std::atanh(1.0 / ratio);
}

FrenetFrame frame_at(const HelixParams& params, double phi) {
  const double ch = std::cosh(params.alpha);
  const double sh = std::sinh(params.alpha);
  const double c = std::cos(phi);
  const double s = std::sin(phi) * params.orientation_sign;
  const double o = params.orientation_sign;
  return {{ch, sh * c, sh * s}, {0.0, -std::sin(phi), o * c}, {-sh, -ch * c, -ch * s}};
}

HelixParams helix_params(const IntrinsicModel& model, const LorentzVec3& C, int orientation_sign) {
  if (orientation_sign != 1 && orientation_sign != -1) throw InvalidConfig("orientation sign must be +1 or -1");
  const SlopeReport slope = check_slope(model);
  if (!slope.is_general_helix) {
    std::ostringstream msg;
    msg << "tau/kappa is not constant (max relative deviation " << slope.max_ratio_deviation
        << "); not a general helix";
    throw NotGeneralHelix(msg.str());
  }
  HelixParams params;
  params.alpha = solve_alpha(slope.ratio);
  params.C = C;
  params.orientation_sign = orientation_sign;
  return params;
}

namespace {

// Accumulates piece(a, b, from) from the anchor s_ref outwards over the grid.
// `from` is the grid index of the start point a, or -1 when a == s_ref.
template <class V, class Piece>
std::vector<V> accumulate_from_anchor(const std::vector<double>& grid, double s_ref, Piece&& piece) {
  std::vector<V> out(grid.size());
  const auto first = std::lower_bound(grid.begin(), grid.end(), s_ref);
  const std::ptrdiff_t k0 = first - grid.begin();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(grid.size());

  V acc{};
  double prev = s_ref;
  std::ptrdiff_t prev_index = -1;
  for (std::ptrdiff_t i = k0; i < n; ++i) {
    acc += piece(prev, grid[i], prev_index);
    out[i] = acc;
    prev = grid[i];
    prev_index = i;
  }
  acc = V{};
  prev = s_ref;
  prev_index = -1;
  for (std::ptrdiff_t i = k0 - 1; i >= 0; --i) {
    acc += piece(prev, grid[i], prev_index);
    out[i] = acc;
    prev = grid[i];
    prev_index = i;
  }
  return out;
}

}  // namespace

CurveSample reconstruct(const IntrinsicModel& model, int n_samples, const LorentzVec3& C, double tol,
                        int orientation_sign) {
  if (n_samples < 2) throw InvalidConfig("reconstruct needs at least 2 samples");
  if (!(tol > 0.0)) throw InvalidConfig("quadrature tolerance must be positive");
  const HelixParams params = helix_params(model, C, orientation_sign);

  const double length = model.s_max() - model.s_min();
  std::vector<double> grid(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) grid[i] = uniform_point(model.s_min(), model.s_max(), i, n_samples);

  const auto kappa = [&](double u) { return model.kappa(u); };
  const auto share = [&](double a, double b) { return tol * std::abs(b - a) / length; };

  const std::vector<double> theta = accumulate_from_anchor<double>(
      grid, model.s_ref(), [&](double a, double b, std::ptrdiff_t) { return adaptive_simpson(kappa, a, b, share(a, b)); });

  const double sh = std::sinh(params.alpha);
  const double ch = std::cosh(params.alpha);
  const double sign = orientation_sign;
  // Phase error d(theta) moves position by at most |b - a| * d(theta).
  const double inner_tol = 0.1 * tol / (3.0 * length);

  const std::vector<LorentzVec3> offsets = accumulate_from_anchor<LorentzVec3>(
      grid, model.s_ref(), [&](double a, double b, std::ptrdiff_t from) {
        const double theta_a = from < 0 ? 0.0 : theta[static_cast<std::size_t>(from)];
        const auto phase = [&](double u) { return (theta_a + adaptive_simpson(kappa, a, u, inner_tol)) / sh; };
        const double comp_tol = share(a, b) / 3.0;
        const double x1 = adaptive_simpson([&](double) { return ch; }, a, b, comp_tol);
        const double x2 = adaptive_simpson([&](double u) { return sh * std::cos(phase(u)); }, a, b, comp_tol);
        const double x3 = adaptive_simpson([&](double u) { return sh * sign * std::sin(phase(u)); }, a, b, comp_tol);
        return LorentzVec3{x1, x2, x3};
      });

  CurveSample sample;
  sample.meta.source = SampleSource::ClosedForm;
  sample.meta.kappa = print_expr(model.kappa_expr());
  sample.meta.tau = print_expr(model.tau_expr());
  sample.meta.s_min = model.s_min();
  sample.meta.s_max = model.s_max();
  sample.meta.s_ref = model.s_ref();
  sample.meta.helix = params;
  sample.meta.tolerance = tol;
  sample.rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CurveRow row;
    row.s = grid[i];
    row.psi = C + offsets[i];
    row.frame = frame_at(params, theta[i] / sh);
    row.kappa = model.kappa(row.s);
    row.tau = model.tau(row.s);
    sample.rows.push_back(row);
  }
  return sample;
}

namespace {

void check_example_id(int id) {
  if (id < 1 || id > 3) throw DomainError("example id must be 1, 2 or 3 (got " + std::to_string(id) + ")");
}

}  // namespace

double example_phase(int id, double a, double s) {
  check_example_id(id);
  switch (id) {
    case 1:
      if (a == 0.0) throw DomainError("example 1 needs a non-zero slope constant a");
      return a * s;
    case 2:
      if (!(s > 0.0)) throw DomainError("example 2 is defined for s > 0 only");
      return std::log(s);
    default:
      return std::atan(s);
  }
}

LorentzVec3 closed_form_example(int id, double alpha, double a, double s) {
  check_example_id(id);
  if (alpha == 0.0) throw DomainError("examples need a non-zero hyperbolic angle");
  const double sh = std::sinh(alpha);
  const double ch = std::cosh(alpha);
  const double coth = ch / sh;
  const double phi = example_phase(id, a, s);
  switch (id) {
    case 1:
      return (sh / a) * LorentzVec3{coth * phi, std::sin(phi), -std::cos(phi)};
    case 2:
      return (0.5 * sh * std::exp(phi)) *
             LorentzVec3{2.0 * coth, std::sin(phi) + std::cos(phi), std::sin(phi) - std::cos(phi)};
    default: {
      const double sec = 1.0 / std::cos(phi);
      const double tan = std::tan(phi);
      return sh * LorentzVec3{coth * tan, std::log(sec + tan), sec};
    }
  }
}

ExampleModelText example_model_text(int id, double alpha, double a) {
  check_example_id(id);
  const std::string al = format_shortest(alpha);
  switch (id) {
    case 1: {
      if (a == 1.0) return {"sinh(" + al + ")", "cosh(" + al + ")"};
      const std::string as = format_shortest(a);
      return {as + "*sinh(" + al + ")", as + "*cosh(" + al + ")"};
    }
    case 2:
      return {"sinh(" + al + ")/s", "cosh(" + al + ")/s"};
    default:
      return {"sinh(" + al + ")/(s^2+1)", "cosh(" + al + ")/(s^2+1)"};
  }
}

double example_default_s_min(int id) {
  check_example_id(id);
  return id == 2 ? 1.0 : 0.0;
}

CurveSample example_sample(int id, double alpha, double a, double s_min, double s_max, int n_samples) {
  check_example_id(id);
  if (!(alpha > 0.0)) throw DomainError("example curves need alpha > 0 so that kappa > 0");
  if (id == 1 && !(a > 0.0)) throw DomainError("example 1 needs a > 0 so that kappa > 0");
  if (n_samples < 2) throw InvalidConfig("example sampling needs at least 2 samples");
  if (!(s_min < s_max)) throw DomainError("example sampling needs s_min < s_max");
  if (id == 2 && !(s_min > 0.0)) throw DomainError("example 2 is defined for s > 0 only");

  const double sh = std::sinh(alpha);
  const double ch = std::cosh(alpha);
  HelixParams params;
  params.alpha = alpha;
  params.C = closed_form_example(id, alpha, a, s_min);

  const ExampleModelText text = example_model_text(id, alpha, a);
  CurveSample sample;
  sample.meta.source = SampleSource::ClosedForm;
  sample.meta.kappa = text.kappa;
  sample.meta.tau = text.tau;
  sample.meta.s_min = s_min;
  sample.meta.s_max = s_max;
  sample.meta.s_ref = s_min;
  sample.meta.helix = params;
  sample.meta.example_id = id;
  sample.rows.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    CurveRow row;
    row.s = uniform_point(s_min, s_max, i, n_samples);
    row.psi = closed_form_example(id, alpha, a, row.s);
    row.frame = frame_at(params, example_phase(id, a, row.s));
    const double scale = id == 1 ? a : (id == 2 ? 1.0 / row.s : 1.0 / (row.s * row.s + 1.0));
    row.kappa = sh * scale;
    row.tau = ch * scale;
    sample.rows.push_back(row);
  }
  return sample;
}

}  // namespace minkhelix
