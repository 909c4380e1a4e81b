#pragma once

#include <cmath>

namespace hypcyc::detail {

struct RootResult {
  double x = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

// Root of f on [lo, hi] where f(lo) >= 0 > f(hi) and f crosses zero
// exactly once.  Newton steps from df, rejected when they leave the
// current bracket.  Stops when the bracket is at relative width
// 1e-15*(1+x), when Newton stalls, or (if resid_tol > 0) when
// |f| <= resid_tol.
template <class F, class DF>
RootResult falling_root(F&& f, DF&& df, double lo, double hi,
                        double resid_tol = 0.0) {
  double x = 0.5 * (lo + hi);
  double fx = f(x);
  int it = 1;
  for (; it < 200; ++it) {
    if (fx >= 0.0)
      lo = x;
    else
      hi = x;
    if (resid_tol > 0.0 && std::abs(fx) <= resid_tol) break;
    if (hi - lo <= 1e-15 * (1.0 + std::abs(x))) break;
    double next = 0.5 * (lo + hi);
    const double dfx = df(x);
    if (std::isfinite(dfx) && dfx != 0.0) {
      const double newton = x - fx / dfx;
      if (newton > lo && newton < hi) next = newton;
    }
    if (next == x) break;
    x = next;
    fx = f(x);
  }
  return {x, fx, it};
}

}  // namespace hypcyc::detail
