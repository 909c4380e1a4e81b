#include "hypcyc/radius.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypcyc/kernel.hpp"
#include "solve1d.hpp"

namespace hypcyc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRadiusCap = 700.0;  // beyond this the tuple is treated
                                      // as numerically horocyclic

double require_positive(double d) {
  if (!(d > 0.0) || !std::isfinite(d))
    throw std::invalid_argument("side lengths must be positive and finite");
  return d;
}

double angle_sum(const SideLengths& d, double J) {
  double s = 0.0;
  for (double v : d) s += apex_angle(v, J);
  return s;
}

// Realizability factors prod over i of (-s_i + sum_{j != i} s_j); all
// must be positive, and only the one at the largest entry can fail.
double heron_like(const std::vector<double>& s) {
  double total = 0.0;
  for (double v : s) total += v;
  double prod = 1.0;
  for (double v : s) {
    const double f = total - 2.0 * v;
    if (f <= 0.0)
      throw std::domain_error("not a cyclic tuple: sinh inequality fails");
    prod *= f;
  }
  return prod;
}

}  // namespace

RadiusResult radius(const SideLengths& d, double tol) {
  const auto cf = detail::classify_full(d, tol);
  const double D = d[cf.i0];

  switch (cf.cls.tag) {
    case RegionTag::NotRealizable:
      throw std::domain_error(
          "no cyclic polygon: largest side exceeds the horocyclic bound");
    case RegionTag::Horocyclic:
      throw std::domain_error("radius diverges: horocyclic side lengths");
    case RegionTag::BoundaryCentered: {
      const double J = 0.5 * D;
      return {J, RadiusBranch::BoundaryExact,
              std::abs(angle_sum(d, J) - 2.0 * kPi), 0};
    }
    case RegionTag::Centered: {
      const auto f = [&d](double J) { return angle_sum(d, J) - 2.0 * kPi; };
      const auto df = [&d](double J) {
        double s = 0.0;
        for (double v : d) s += apex_angle_dJ(v, J);
        return s;
      };
      // J sits between D/2 and the boundary value b0(rest)/2.
      double hi = 0.5 * cf.b0;
      for (int k = 0; k < 8 && f(hi) >= 0.0; ++k) hi *= 2.0;
      const auto r = detail::falling_root(f, df, 0.5 * D, hi);
      return {r.x, RadiusBranch::CenteredSum, std::abs(r.residual),
              r.iterations};
    }
    case RegionTag::NonCentered: {
      const auto g = [&d, &cf](double J) {
        double s = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i)
          if (i != cf.i0) s += apex_angle(d[i], J);
        return apex_angle(d[cf.i0], J) - s;
      };
      const auto dg = [&d, &cf](double J) {
        double s = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i)
          if (i != cf.i0) s += apex_angle_dJ(d[i], J);
        return apex_angle_dJ(d[cf.i0], J) - s;
      };
      double hi = std::max(D, 1.0);
      while (g(hi) >= 0.0) {
        hi *= 2.0;
        if (hi > kRadiusCap)
          throw std::domain_error(
              "radius diverges: tuple is numerically horocyclic (J > 700)");
      }
      const auto r = detail::falling_root(g, dg, 0.5 * D, hi);
      return {r.x, RadiusBranch::NonCenteredBalance, std::abs(r.residual),
              r.iterations};
    }
  }
  throw std::logic_error("unreachable");
}

double radius_closed_tri(double d0, double d1, double d2) {
  const std::vector<double> s = {std::sinh(0.5 * require_positive(d0)),
                                 std::sinh(0.5 * require_positive(d1)),
                                 std::sinh(0.5 * require_positive(d2))};
  const double rad = (s[0] + s[1] + s[2]) * heron_like(s);
  return std::asinh(2.0 * s[0] * s[1] * s[2] / std::sqrt(rad));
}

double radius_closed_quad(double d0, double d1, double d2, double d3) {
  const std::vector<double> s = {std::sinh(0.5 * require_positive(d0)),
                                 std::sinh(0.5 * require_positive(d1)),
                                 std::sinh(0.5 * require_positive(d2)),
                                 std::sinh(0.5 * require_positive(d3))};
  const double num = (s[0] * s[1] + s[2] * s[3]) * (s[0] * s[2] + s[1] * s[3]) *
                     (s[0] * s[3] + s[1] * s[2]);
  return std::asinh(2.0 * std::sqrt(num / heron_like(s)));
}

double quad_diagonal(double d0, double d1, double d2, double d3) {
  const std::vector<double> s = {std::sinh(0.5 * require_positive(d0)),
                                 std::sinh(0.5 * require_positive(d1)),
                                 std::sinh(0.5 * require_positive(d2)),
                                 std::sinh(0.5 * require_positive(d3))};
  heron_like(s);  // realizability
  // sinh^2(D/2); the expression is symmetric under swapping the side
  // pairs {0,1} and {2,3}, so no normalization is needed.
  const double num =
      s[2] * s[3] * (s[0] * s[0] + s[1] * s[1]) +
      s[0] * s[1] * (s[2] * s[2] + s[3] * s[3]);
  const double den = s[2] * s[3] + s[0] * s[1];
  return 2.0 * std::asinh(std::sqrt(num / den));
}

double radius_regular(int n, double d) {
  if (n < 3) throw std::invalid_argument("radius_regular: n must be >= 3");
  require_positive(d);
  return std::asinh(std::sinh(0.5 * d) / std::sin(kPi / n));
}

}  // namespace hypcyc
