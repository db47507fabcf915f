#pragma once
#include <algorithm>
#include <cmath>
#include <utility>

#include "maxent/errors.hpp"

namespace maxent::root {

template <typename Scalar>
struct Result {
  Scalar x;
  int iterations;
  bool converged;
};

/// Safeguarded Newton iteration on a bracketed, monotone function.
///
/// `f_df(x)` returns the pair (f(x), f'(x)). The bracket [lo, hi] must
/// satisfy f(lo) * f(hi) <= 0. A Newton step is taken whenever it stays
/// strictly inside the current bracket and the derivative is usable;
/// otherwise the bracket is bisected. The bracket shrinks every iteration.
///
/// `done(f, step)` decides convergence from the residual and the last step.
template <typename Scalar, typename FDF, typename Done>
Result<Scalar> safeguarded_newton(FDF &&f_df, Scalar lo, Scalar hi, Scalar x0,
                                  Done &&done, int max_iterations = 200) {
  using std::abs;
  auto [flo, dlo] = f_df(lo);
  auto [fhi, dhi] = f_df(hi);
  (void)dlo;
  (void)dhi;
  if (flo == Scalar(0))
    return {lo, 0, true};
  if (fhi == Scalar(0))
    return {hi, 0, true};
  if ((flo > 0) == (fhi > 0))
    throw Infeasible("safeguarded_newton: root is not bracketed");
  // orient so that f(neg) < 0 < f(pos)
  Scalar neg = flo < 0 ? lo : hi;
  Scalar pos = flo < 0 ? hi : lo;

  Scalar x = (x0 > std::min(lo, hi) && x0 < std::max(lo, hi))
                 ? x0
                 : (lo + hi) / 2;
  Scalar step = hi - lo;
  for (int it = 1; it <= max_iterations; ++it) {
    auto [f, df] = f_df(x);
    if (f == Scalar(0) || done(f, step))
      return {x, it, true};
    if (f < 0)
      neg = x;
    else
      pos = x;

    Scalar next = x;
    bool newton_ok = false;
    if (df != Scalar(0) && std::isfinite(static_cast<double>(df))) {
      next = x - f / df;
      const Scalar a = std::min(neg, pos), b = std::max(neg, pos);
      newton_ok = next > a && next < b;
    }
    if (!newton_ok)
      next = (neg + pos) / 2;
    step = next - x;
    if (next == x) // bracket collapsed to adjacent representable values
      return {x, it, true};
    x = next;
  }
  return {x, max_iterations, false};
}

/// Plain bisection on a sign change until the bracket is narrower than
/// `width`. Returns the narrowed bracket.
template <typename Scalar, typename F>
std::pair<Scalar, Scalar> bisect(F &&f, Scalar lo, Scalar hi, Scalar width,
                                 int max_iterations = 400) {
  Scalar flo = f(lo);
  for (int it = 0; it < max_iterations && hi - lo > width; ++it) {
    const Scalar mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi)
      break;
    const Scalar fmid = f(mid);
    if ((fmid > 0) == (flo > 0) && fmid != Scalar(0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

} // namespace maxent::root
