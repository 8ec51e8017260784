#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minkhelix/lorentz.hpp"

namespace minkhelix {

inline constexpr const char* kToolVersion = "0.1.0";

/// Closed-form helix data. `C` is the position at the reference point s_ref.
struct HelixParams {
  double alpha = 0.0;
  LorentzVec3 axis = kE1;
  LorentzVec3 C{};
  /// +1 or -1; -1 mirrors the x3 axis (the remaining sign branch of the helix solutions).
  int orientation_sign = 1;

  friend bool operator==(const HelixParams&, const HelixParams&) = default;
};

enum class SampleSource { ClosedForm, Integrated };

struct CurveRow {
  double s = 0.0;
  LorentzVec3 psi;
  FrenetFrame frame;
  double kappa = 0.0;
  double tau = 0.0;

  friend bool operator==(const CurveRow&, const CurveRow&) = default;
};

struct SampleMetadata {
  std::string tool_version = kToolVersion;
  SampleSource source = SampleSource::ClosedForm;
  std::string kappa;  // expression text
  std::string tau;
  double s_min = 0.0;
  double s_max = 0.0;
  double s_ref = 0.0;
  std::optional<HelixParams> helix;
  std::optional<double> tolerance;  // quadrature tolerance (closed-form path)
  std::optional<double> step;       // RK4 step (integrated path)
  std::optional<int> reorthonormalize_every;
  std::optional<int> example_id;

  friend bool operator==(const SampleMetadata&, const SampleMetadata&) = default;
};

/// Arc-length indexed table of positions and frames; s strictly increasing.
struct CurveSample {
  SampleMetadata meta;
  std::vector<CurveRow> rows;

  friend bool operator==(const CurveSample&, const CurveSample&) = default;
};

}  // namespace minkhelix
