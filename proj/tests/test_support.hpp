#pragma once

// Independent oracles and fixtures shared by the unit and acceptance suites.
// Nothing here calls the code paths it is used to check.

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "minkhelix/curve_sample.hpp"
#include "minkhelix/intrinsic_model.hpp"
#include "minkhelix/lorentz.hpp"

namespace minkhelix::testing {

inline const double kLn2 = std::log(2.0);
// sinh(ln 2) = 3/4, cosh(ln 2) = 5/4, coth(ln 2) = 5/3.
inline constexpr double kSinhLn2 = 0.75;
inline constexpr double kCoshLn2 = 1.25;
inline constexpr double kCothLn2 = 5.0 / 3.0;

struct GoldenCase {
  int id;
  const char* kappa;
  const char* tau;
  double s_min;
  double s_max;
};

inline const std::array<GoldenCase, 3>& golden_cases() {
  static const std::array<GoldenCase, 3> cases{{
      {1, "sinh(ln(2))", "cosh(ln(2))", 0.0, 2.0 * std::numbers::pi},
      {2, "sinh(ln(2))/s", "cosh(ln(2))/s", 1.0, std::exp(2.0)},
      {3, "sinh(ln(2))/(s^2+1)", "cosh(ln(2))/(s^2+1)", 0.0, 10.0},
  }};
  return cases;
}

inline IntrinsicModel golden_model(const GoldenCase& c, double s_max) {
  return IntrinsicModel::from_text(c.kappa, c.tau, c.s_min, s_max);
}

/// Samples spaced exactly h apart starting at s_min, not beyond s_max.
inline int samples_for_step(double s_min, double s_max, double h) {
  return static_cast<int>(std::floor((s_max - s_min) / h + 1e-9)) + 1;
}

/// Hand-integrated closed forms of the three examples with alpha = ln 2,
/// written directly in s (no phase variable):
///   1: (1.25 s, 0.75 sin s, -0.75 cos s)
///   2: (1.25 s, 0.375 s (sin ln s + cos ln s), 0.375 s (sin ln s - cos ln s))
///   3: (1.25 s, 0.75 asinh s, 0.75 sqrt(1 + s^2))
inline LorentzVec3 golden_position(int id, double s) {
  switch (id) {
    case 1: return {1.25 * s, 0.75 * std::sin(s), -0.75 * std::cos(s)};
    case 2: {
      const double l = std::log(s);
      return {1.25 * s, 0.375 * s * (std::sin(l) + std::cos(l)), 0.375 * s * (std::sin(l) - std::cos(l))};
    }
    default: return {1.25 * s, 0.75 * std::asinh(s), 0.75 * std::sqrt(1.0 + s * s)};
  }
}

/// Phase of the golden examples: s, ln s, atan s.
inline double golden_phase(int id, double s) {
  return id == 1 ? s : (id == 2 ? std::log(s) : std::atan(s));
}

/// Frame of the golden examples (alpha = ln 2), typed in from the formulas.
inline FrenetFrame golden_frame(int id, double s) {
  const double p = golden_phase(id, s);
  const double c = std::cos(p), sn = std::sin(p);
  return {{1.25, 0.75 * c, 0.75 * sn}, {0.0, -sn, c}, {-0.75, -1.25 * c, -1.25 * sn}};
}

/// 3x3 solve by Cramer's rule: the map M with M a_k = b_k for columns k.
inline std::array<std::array<double, 3>, 3> solve_map(const FrenetFrame& a, const FrenetFrame& b) {
  const LorentzVec3 av[3] = {a.T, a.N, a.B};
  const LorentzVec3 bv[3] = {b.T, b.N, b.B};
  // Row i of M solves A^T m_i = (b_k[i])_k where A has columns av.
  auto det3 = [](const std::array<std::array<double, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  std::array<std::array<double, 3>, 3> at{};
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) at[k][j] = av[k][j];
  const double d = det3(at);
  std::array<std::array<double, 3>, 3> m{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      auto tmp = at;
      for (int k = 0; k < 3; ++k) tmp[k][j] = bv[k][i];
      m[i][j] = det3(tmp) / d;
    }
  }
  return m;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline LorentzVec3 random_vec(std::mt19937_64& g, double lo = -3.0, double hi = 3.0) {
  return {uniform(g, lo, hi), uniform(g, lo, hi), uniform(g, lo, hi)};
}

/// A random orthonormal time-like frame: boost(r) then rotation(theta) of the standard basis.
inline FrenetFrame random_frame(std::mt19937_64& g) {
  const double r = uniform(g, -1.5, 1.5);
  const double th = uniform(g, -3.0, 3.0);
  const double ch = std::cosh(r), sh = std::sinh(r);
  const double c = std::cos(th), s = std::sin(th);
  // Columns of rotation_x23(th) * boost_x2(r).
  const LorentzVec3 T{ch, c * sh, s * sh};
  const LorentzVec3 N{sh, c * ch, s * ch};
  const LorentzVec3 B{0.0, -s, c};
  return {T, N, B};
}

}  // namespace minkhelix::testing
