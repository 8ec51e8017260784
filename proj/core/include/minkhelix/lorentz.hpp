#pragma once

#include <array>
#include <cmath>

namespace minkhelix {

/// A point or vector of Minkowski 3-space, metric g = -dx1^2 + dx2^2 + dx3^2.
struct LorentzVec3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr LorentzVec3& operator+=(const LorentzVec3& o) {
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr LorentzVec3& operator-=(const LorentzVec3& o) {
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  constexpr LorentzVec3& operator*=(double k) {
    x1 *= k;
    x2 *= k;
    x3 *= k;
    return *this;
  }

  constexpr double operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

  friend constexpr bool operator==(const LorentzVec3&, const LorentzVec3&) = default;
};

constexpr LorentzVec3 operator+(LorentzVec3 a, const LorentzVec3& b) { return a += b; }
constexpr LorentzVec3 operator-(LorentzVec3 a, const LorentzVec3& b) { return a -= b; }
constexpr LorentzVec3 operator-(const LorentzVec3& a) { return {-a.x1, -a.x2, -a.x3}; }
constexpr LorentzVec3 operator*(double k, LorentzVec3 v) { return v *= k; }
constexpr LorentzVec3 operator*(LorentzVec3 v, double k) { return v *= k; }

inline constexpr LorentzVec3 kE1{1.0, 0.0, 0.0};
inline constexpr LorentzVec3 kE2{0.0, 1.0, 0.0};
inline constexpr LorentzVec3 kE3{0.0, 0.0, 1.0};

/// Absolute threshold on |g(v,v)| below which a non-zero vector is null.
inline constexpr double kNullTolerance = 1e-12;

/// Tolerance on the Lorentzian orthonormality relations accepted as a frame.
inline constexpr double kFrameTolerance = 1e-8;

enum class CausalCharacter { SpaceLike, TimeLike, Null };

constexpr double metric(const LorentzVec3& u, const LorentzVec3& v) {
  return -u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3;
}

/// The zero vector is space-like.
CausalCharacter causal_character(const LorentzVec3& v);

inline double pseudo_norm(const LorentzVec3& v) { return std::sqrt(std::abs(metric(v, v))); }

/// Max absolute component, for tolerance comparisons in Euclidean terms.
inline double max_abs(const LorentzVec3& v) {
  return std::fmax(std::abs(v.x1), std::fmax(std::abs(v.x2), std::abs(v.x3)));
}

inline bool is_finite(const LorentzVec3& v) {
  return std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.x3);
}

/// Moving frame (T, N, B) of a time-like curve: g(T,T) = -1, g(N,N) = g(B,B) = 1,
/// pairwise orthogonal.
struct FrenetFrame {
  LorentzVec3 T;
  LorentzVec3 N;
  LorentzVec3 B;

  friend constexpr bool operator==(const FrenetFrame&, const FrenetFrame&) = default;
};

/// Largest deviation over the six orthonormality relations.
double frame_residual(const FrenetFrame& frame);

/// Linear map of E^3_1 stored row-major.
class LorentzMap {
 public:
  using Matrix = std::array<std::array<double, 3>, 3>;

  LorentzMap() : m_{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}} {}
  explicit LorentzMap(const Matrix& m) : m_(m) {}

  static LorentzMap identity() { return LorentzMap(); }
  /// Rotation by `angle` in the x2x3-plane.
  static LorentzMap spatial_rotation(double angle);
  /// Boost of rapidity `rapidity` mixing x1 and x2.
  static LorentzMap boost_x2(double rapidity);

  double operator()(int row, int col) const { return m_[row][col]; }
  const Matrix& matrix() const { return m_; }

  LorentzVec3 apply(const LorentzVec3& v) const;
  FrenetFrame apply(const FrenetFrame& f) const;
  LorentzMap compose(const LorentzMap& inner) const;

  /// max |(M^T G M - G)_ij| with G = diag(-1, 1, 1).
  double metric_defect() const;

 private:
  Matrix m_;
};

/// The unique linear map carrying frame `from` onto frame `to` (T, N and B each).
/// Throws DegenerateFrame if either frame is not orthonormal within kFrameTolerance.
LorentzMap recover_isometry(const FrenetFrame& from, const FrenetFrame& to);

}  // namespace minkhelix
