#include "minkhelix/lorentz.hpp"

#include <algorithm>
#include <sstream>

#include "minkhelix/errors.hpp"

namespace minkhelix {

CausalCharacter causal_character(const LorentzVec3& v) {
  const double q = metric(v, v);
  if (q < -kNullTolerance) return CausalCharacter::TimeLike;
  const bool zero = v.x1 == 0.0 && v.x2 == 0.0 && v.x3 == 0.0;
  if (std::abs(q) <= kNullTolerance && !zero) return CausalCharacter::Null;
  return CausalCharacter::SpaceLike;
}

double frame_residual(const FrenetFrame& f) {
  const double r[] = {
      std::abs(metric(f.T, f.T) + 1.0), std::abs(metric(f.N, f.N) - 1.0), std::abs(metric(f.B, f.B) - 1.0),
      std::abs(metric(f.T, f.N)),       std::abs(metric(f.T, f.B)),       std::abs(metric(f.N, f.B)),
  };
  double worst = 0.0;
  for (double x : r) {
    if (!std::isfinite(x)) return x;
    worst = std::max(worst, x);
  }
  return worst;
}

LorentzMap LorentzMap::spatial_rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return LorentzMap(Matrix{{{1, 0, 0}, {0, c, -s}, {0, s, c}}});
}

LorentzMap LorentzMap::boost_x2(double rapidity) {
  const double ch = std::cosh(rapidity);
  const double sh = std::sinh(rapidity);
  return LorentzMap(Matrix{{{ch, sh, 0}, {sh, ch, 0}, {0, 0, 1}}});
}

LorentzVec3 LorentzMap::apply(const LorentzVec3& v) const {
  return {m_[0][0] * v.x1 + m_[0][1] * v.x2 + m_[0][2] * v.x3,
          m_[1][0] * v.x1 + m_[1][1] * v.x2 + m_[1][2] * v.x3,
          m_[2][0] * v.x1 + m_[2][1] * v.x2 + m_[2][2] * v.x3};
}

FrenetFrame LorentzMap::apply(const FrenetFrame& f) const { return {apply(f.T), apply(f.N), apply(f.B)}; }

LorentzMap LorentzMap::compose(const LorentzMap& inner) const {
  Matrix out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += m_[i][k] * inner.m_[k][j];
  return LorentzMap(out);
}

double LorentzMap::metric_defect() const {
  constexpr double G[3] = {-1.0, 1.0, 1.0};
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double v = 0.0;
      for (int k = 0; k < 3; ++k) v += m_[k][i] * G[k] * m_[k][j];
      const double target = i == j ? G[i] : 0.0;
      worst = std::max(worst, std::abs(v - target));
    }
  }
  return worst;
}

namespace {

// Columns T, N, B.
LorentzMap::Matrix columns(const FrenetFrame& f) {
  return {{{f.T.x1, f.N.x1, f.B.x1}, {f.T.x2, f.N.x2, f.B.x2}, {f.T.x3, f.N.x3, f.B.x3}}};
}

LorentzMap::Matrix inverse(const LorentzMap::Matrix& a) {
  const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                     a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                     a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  LorentzMap::Matrix inv{};
  inv[0][0] = (a[1][1] * a[2][2] - a[1][2] * a[2][1]) / det;
  inv[0][1] = (a[0][2] * a[2][1] - a[0][1] * a[2][2]) / det;
  inv[0][2] = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) / det;
  inv[1][0] = (a[1][2] * a[2][0] - a[1][0] * a[2][2]) / det;
  inv[1][1] = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) / det;
  inv[1][2] = (a[0][2] * a[1][0] - a[0][0] * a[1][2]) / det;
  inv[2][0] = (a[1][0] * a[2][1] - a[1][1] * a[2][0]) / det;
  inv[2][1] = (a[0][1] * a[2][0] - a[0][0] * a[2][1]) / det;
  inv[2][2] = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / det;
  return inv;
}

void require_orthonormal(const FrenetFrame& f, const char* which) {
  const double r = frame_residual(f);
  if (!(r <= kFrameTolerance)) {
    std::ostringstream msg;
    msg << which << " frame is not Lorentz-orthonormal (residual " << r << ")";
    throw DegenerateFrame(msg.str());
  }
}

}  // namespace

LorentzMap recover_isometry(const FrenetFrame& from, const FrenetFrame& to) {
  require_orthonormal(from, "source");
  require_orthonormal(to, "target");
  // Orthonormal frames are never singular, so the inverse exists.
  return LorentzMap(columns(to)).compose(LorentzMap(inverse(columns(from))));
}

}  // namespace minkhelix
