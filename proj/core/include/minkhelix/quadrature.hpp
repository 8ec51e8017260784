#pragma once

#include <cmath>
#include <sstream>
#include <type_traits>

#include "minkhelix/errors.hpp"

namespace minkhelix {

struct SimpsonOptions {
  double abs_tol = 1e-10;
  /// Subdivision depth at which QuadratureFailure is raised.
  int max_depth = 40;
  /// Levels always subdivided before the error test is trusted.
  int min_depth = 2;
};

namespace detail {

template <class F>
class SimpsonRecursion {
 public:
  SimpsonRecursion(F& f, const SimpsonOptions& opt) : f_(f), opt_(opt) {}

  double run(double a, double b) {
    const double fa = f_(a);
    const double fb = f_(b);
    const double fm = f_(0.5 * (a + b));
    return step(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), opt_.abs_tol, 0);
  }

 private:
  static double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double step(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f_(lm);
    const double frm = f_(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth >= opt_.min_depth && std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= opt_.max_depth || !(lm > a && rm < b) || !std::isfinite(delta)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "adaptive Simpson did not reach tolerance " << opt_.abs_tol << " on [" << a << ", " << b
          << "] within depth " << opt_.max_depth;
      throw QuadratureFailure(msg.str());
    }
    return step(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) + step(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }

  F& f_;
  const SimpsonOptions& opt_;
};

}  // namespace detail

/// Integral of f over [a, b] by adaptive Simpson with the interval-halving
/// error estimate |S(a,b) - S(a,m) - S(m,b)| / 15. Reversed bounds give the
/// negated integral. The subdivision pattern depends only on f and the bounds.
template <class F>
double adaptive_simpson(F&& f, double a, double b, const SimpsonOptions& opt = {}) {
  if (a == b) return 0.0;
  if (a > b) return -adaptive_simpson(f, b, a, opt);
  detail::SimpsonRecursion<std::remove_reference_t<F>> rec(f, opt);
  return rec.run(a, b);
}

template <class F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol) {
  SimpsonOptions opt;
  opt.abs_tol = abs_tol;
  return adaptive_simpson(f, a, b, opt);
}

}  // namespace minkhelix
