#include "cli.hpp"

#include <cmath>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "curve_io.hpp"
#include "minkhelix/frenet_integrator.hpp"
#include "minkhelix/helix.hpp"
#include "minkhelix/intrinsic_model.hpp"
#include "minkhelix/validation.hpp"
#include "report_json.hpp"

namespace minkhelix::cli {

namespace {

struct ModelFlags {
  std::string kappa;
  std::string tau;
  double s_min = 0.0;
  double s_max = 0.0;
  std::optional<double> s_ref;
};

struct GridFlags {
  std::optional<int> samples;
  std::optional<double> step;
};

struct OutputFlags {
  std::string format = "csv";
  std::string output;
};

void add_model_flags(CLI::App* cmd, ModelFlags& f) {
  cmd->add_option("--kappa", f.kappa, "Curvature kappa(s) as an expression in s")->required();
  cmd->add_option("--tau", f.tau, "Torsion tau(s) as an expression in s")->required();
  cmd->add_option("--s-min", f.s_min, "Start of the arc-length domain")->required();
  cmd->add_option("--s-max", f.s_max, "End of the arc-length domain")->required();
  cmd->add_option("--s-ref", f.s_ref, "Anchor of the integrals (default: s-min)");
}

void add_grid_flags(CLI::App* cmd, GridFlags& g) {
  auto* samples = cmd->add_option("--samples", g.samples, "Number of uniformly spaced samples (>= 2)");
  auto* step = cmd->add_option("--step", g.step, "Sample spacing (> 0)");
  samples->excludes(step);
}

void add_output_flags(CLI::App* cmd, OutputFlags& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", o.output, "Output file (default: standard output)");
}

// Number of grid points and the exact end point for a samples/step request on [a, b].
std::pair<int, double> resolve_grid(const GridFlags& g, double a, double b) {
  if (g.samples) {
    if (*g.samples < 2) throw InvalidConfig("--samples must be at least 2");
    return {*g.samples, b};
  }
  if (g.step) {
    if (!(*g.step > 0.0)) throw InvalidConfig("--step must be positive");
    const double intervals = std::floor((b - a) / *g.step + 1e-9);
    if (intervals < 1.0) throw InvalidConfig("--step is larger than the domain");
    return {static_cast<int>(intervals) + 1, a + intervals * *g.step};
  }
  throw InvalidConfig("one of --samples or --step is required");
}

void emit(const CurveSample& sample, const OutputFlags& o, std::ostream& out) {
  const io::CurveFormat format = io::parse_format(o.format);
  if (o.output.empty() || o.output == "-") {
    io::write_curve(sample, format, out);
    return;
  }
  io::write_curve(sample, format, std::filesystem::path(o.output));
  out << "wrote " << sample.rows.size() << " rows to " << o.output << '\n';
}

LorentzVec3 to_vec(const std::vector<double>& v) {
  if (v.empty()) return {};
  return {v.at(0), v.at(1), v.at(2)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reconstruct time-like curves in Minkowski 3-space from curvature and torsion"};
  app.name("minkhelix");
  app.require_subcommand(1);

  // reconstruct
  ModelFlags rec_model;
  GridFlags rec_grid;
  OutputFlags rec_out;
  double rec_tol = kDefaultQuadratureTol;
  std::vector<double> rec_c;
  int rec_orientation = 1;
  auto* rec = app.add_subcommand("reconstruct", "Closed-form reconstruction of a time-like general helix");
  add_model_flags(rec, rec_model);
  add_grid_flags(rec, rec_grid);
  add_output_flags(rec, rec_out);
  rec->add_option("--tol", rec_tol, "Absolute quadrature tolerance");
  rec->add_option("--c", rec_c, "Position at s-ref as x1,x2,x3")->expected(3)->delimiter(',');
  rec->add_option("--orientation", rec_orientation, "Helix orientation sign")->check(CLI::IsMember({1, -1}));

  // integrate
  ModelFlags int_model;
  GridFlags int_grid;
  OutputFlags int_out;
  int int_reorth = 1;
  std::vector<double> int_psi0;
  std::string int_frame = "auto";
  auto* integ = app.add_subcommand("integrate", "RK4 integration of the time-like Frenet equations");
  add_model_flags(integ, int_model);
  add_grid_flags(integ, int_grid);
  add_output_flags(integ, int_out);
  integ->add_option("--reorthonormalize-every", int_reorth, "Steps between Lorentzian re-orthonormalisations");
  integ->add_option("--psi0", int_psi0, "Initial position as x1,x2,x3")->expected(3)->delimiter(',');
  integ->add_option("--frame0", int_frame, "Initial frame: auto (helix frame when possible), helix or standard")
      ->check(CLI::IsMember({"auto", "helix", "standard"}));

  // validate
  std::string val_input;
  std::string val_report;
  ValidationTolerances val_tol;
  auto* val = app.add_subcommand("validate", "Check a curve file against its intrinsic equations");
  val->add_option("--input", val_input, "Curve file (CSV or JSON)")->required();
  val->add_option("--report", val_report, "Also write the JSON report to this file");
  val->add_option("--frame-tol", val_tol.frame, "Frame orthonormality tolerance");
  val->add_option("--kappa-tol", val_tol.kappa_rel, "Relative curvature recovery tolerance");
  val->add_option("--tau-tol", val_tol.tau_rel, "Relative torsion recovery tolerance");
  val->add_option("--ode-tol", val_tol.ode, "Scaled fourth-order ODE residual tolerance");
  val->add_option("--tangent-tol", val_tol.tangent, "Tolerance on psi' - T");
  val->add_option("--axis-tol", val_tol.axis, "Helix axis tolerance");
  val->add_option("--ratio-tol", val_tol.slope_ratio, "Recovered tau/kappa tolerance");

  // example
  int ex_id = 1;
  double ex_alpha = std::log(2.0);
  double ex_a = 1.0;
  std::optional<double> ex_s_min;
  double ex_s_max = 0.0;
  GridFlags ex_grid;
  OutputFlags ex_out;
  auto* ex = app.add_subcommand("example", "Sample the closed form of worked example 1, 2 or 3");
  ex->add_option("--id", ex_id, "Example number")->required()->check(CLI::IsMember({1, 2, 3}));
  ex->add_option("--alpha", ex_alpha, "Hyperbolic angle (> 0)");
  ex->add_option("--a", ex_a, "Slope constant of example 1");
  ex->add_option("--s-min", ex_s_min, "Start of the arc-length range (default 0, or 1 for example 2)");
  ex->add_option("--s-max", ex_s_max, "End of the arc-length range")->required();
  add_grid_flags(ex, ex_grid);
  add_output_flags(ex, ex_out);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("minkhelix");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (*rec) {
      const auto [n, end] = resolve_grid(rec_grid, rec_model.s_min, rec_model.s_max);
      const IntrinsicModel model =
          IntrinsicModel::from_text(rec_model.kappa, rec_model.tau, rec_model.s_min, end, rec_model.s_ref);
      CurveSample sample = reconstruct(model, n, to_vec(rec_c), rec_tol, rec_orientation);
      emit(sample, rec_out, out);
    } else if (*integ) {
      const double start = int_model.s_ref.value_or(int_model.s_min);
      const auto [n, end] = resolve_grid(int_grid, start, int_model.s_max);
      const IntrinsicModel model =
          IntrinsicModel::from_text(int_model.kappa, int_model.tau, int_model.s_min, int_model.s_max, int_model.s_ref);
      FrenetFrame frame0{kE1, kE2, kE3};
      if (int_frame == "helix") {
        frame0 = frame_at(helix_params(model), 0.0);
      } else if (int_frame == "auto") {
        frame0 = default_initial_frame(model);
      }
      IntegratorConfig config;
      config.step = (end - start) / (n - 1);
      config.reorthonormalize_every = int_reorth;
      CurveSample sample = integrate(model, to_vec(int_psi0), frame0, config, n - 1);
      emit(sample, int_out, out);
    } else if (*val) {
      const CurveSample sample = io::read_curve(val_input);
      const IntrinsicModel model = IntrinsicModel::from_text(sample.meta.kappa, sample.meta.tau, sample.meta.s_min,
                                                             sample.meta.s_max, sample.meta.s_ref);
      const ValidationReport report = validate(sample, model, val_tol);
      const std::string text = io::report_to_json(report);
      if (!val_report.empty()) io::write_text_atomic(val_report, text);
      out << text;
      if (report.verdict != Verdict::Pass) {
        err << "error: validation failed:";
        for (const CheckResult& c : report.checks)
          if (!c.passed) err << ' ' << c.name;
        err << '\n';
        return kExitDomain;
      }
    } else if (*ex) {
      const double s_min = ex_s_min.value_or(example_default_s_min(ex_id));
      const auto [n, end] = resolve_grid(ex_grid, s_min, ex_s_max);
      CurveSample sample = example_sample(ex_id, ex_alpha, ex_a, s_min, end, n);
      emit(sample, ex_out, out);
    }
  } catch (const io::IOError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIO;
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIO;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace minkhelix::cli
