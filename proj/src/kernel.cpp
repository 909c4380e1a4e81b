#include "hypcyc/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hypcyc {

namespace {

constexpr double kBoundaryTol = 1e-12;  // accepted slack below J = d/2
constexpr double kLn2 = 0.6931471805599453094;

void require_side(double d) {
  if (!(d > 0.0) || !std::isfinite(d))
    throw std::domain_error("side length must be positive and finite, got " +
                            std::to_string(d));
}

// Validates d > 0 and J >= d/2 - tol, returns J clamped up to d/2.
double clamp_radius(double d, double J) {
  require_side(d);
  if (!std::isfinite(J) || J < 0.5 * d - kBoundaryTol)
    throw std::domain_error("circumradius " + std::to_string(J) +
                            " below half of side " + std::to_string(d));
  return std::max(J, 0.5 * d);
}

}  // namespace

namespace detail {

double log_sinh(double x) {
  if (x < 20.0) return std::log(std::sinh(x));
  return x - kLn2 + std::log1p(-std::exp(-2.0 * x));
}

double log_cosh(double x) {
  if (x < 20.0) return std::log(std::cosh(x));
  return x - kLn2 + std::log1p(std::exp(-2.0 * x));
}

double sinh_ratio(double a, double b) {
  double r = std::exp(log_sinh(a) - log_sinh(b));
  return std::min(r, 1.0);
}

double inv_cosh_sq_gap(double a, double b) {
  const double gap = b - a;
  if (gap <= 0.0) return 0.0;
  const double lg = 0.5 * (log_sinh(gap) + log_sinh(b + a)) - log_cosh(a) -
                    log_cosh(b);
  return std::exp(lg);
}

}  // namespace detail

double apex_angle(double d, double J) {
  const double Jc = clamp_radius(d, J);
  // Half-angle form: sin(A/2) = sinh(d/2)/sinh(J).  Unlike the acos
  // form this keeps full relative accuracy when A is tiny (large J).
  return 2.0 * std::asin(detail::sinh_ratio(0.5 * d, Jc));
}

double base_angle(double d, double J) {
  const double Jc = clamp_radius(d, J);
  const double t = std::tanh(0.5 * d) / std::tanh(Jc);
  if (t <= 0.7) return std::acos(t);
  // Near B = 0 the acos form cancels; switch to
  // sin B = cos(A/2)/cosh(d/2), which also survives tanh saturation.
  const double r = detail::sinh_ratio(0.5 * d, Jc);
  const double c = std::sqrt(std::max(0.0, (1.0 - r) * (1.0 + r)));
  const double q = c * std::exp(-detail::log_cosh(0.5 * d));
  return std::asin(std::min(q, 1.0));
}

double apex_angle_dJ(double d, double J) {
  require_side(d);
  if (!std::isfinite(J) || J - 0.5 * d <= 0.0)
    throw std::domain_error(
        "apex_angle_dJ requires J strictly above d/2; derivative diverges");
  using detail::log_cosh;
  using detail::log_sinh;
  // -2 coth(J) sinh(d/2) / sqrt(sinh^2 J - sinh^2(d/2)), with the
  // radicand factored as sinh(J - d/2) sinh(J + d/2).
  const double lmag = kLn2 + log_cosh(J) - log_sinh(J) + log_sinh(0.5 * d) -
                      0.5 * (log_sinh(J - 0.5 * d) + log_sinh(J + 0.5 * d));
  return -std::exp(lmag);
}

double sector_defect(double d, double J, double R) {
  if (!(R >= 0.0) || !std::isfinite(R))
    throw std::domain_error("disk radius R must be nonnegative");
  const double pi = 4.0 * std::atan(1.0);
  return pi - apex_angle(d, J) - 2.0 * std::cosh(R) * base_angle(d, J);
}

double model_distance(const HPoint& p, const HPoint& q) {
  if (p.model != q.model)
    throw std::invalid_argument("model_distance: points from different models");
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(q.x) ||
      !std::isfinite(q.y))
    throw std::domain_error("model_distance: non-finite coordinates");
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  const double chord2 = dx * dx + dy * dy;
  if (p.model == Model::Disk) {
    const double np = 1.0 - (p.x * p.x + p.y * p.y);
    const double nq = 1.0 - (q.x * q.x + q.y * q.y);
    if (np <= 0.0 || nq <= 0.0)
      throw std::domain_error("model_distance: point outside the unit disk");
    return 2.0 * std::asinh(std::sqrt(chord2 / (np * nq)));
  }
  if (p.y <= 0.0 || q.y <= 0.0)
    throw std::domain_error("model_distance: point outside the half-plane");
  return 2.0 * std::asinh(0.5 * std::sqrt(chord2 / (p.y * q.y)));
}

}  // namespace hypcyc
