#pragma once

#include <cstddef>

// Scalar kernel for cyclic hyperbolic polygons: the angle functions of an
// isosceles triangle with two sides of length J and base d, their
// J-derivative, the per-triangle radius-R sector defect, and point
// distances in the two standard plane models.
//
// Conventions:
//   apex_angle(d, J) = acos(1 - 2 sinh^2(d/2) / sinh^2 J)   in (0, pi]
//   base_angle(d, J) = acos(tanh(d/2) / tanh J)             in [0, pi/2)
// Both require d > 0 and J >= d/2; J within 1e-12 below d/2 is clamped,
// anything further is a domain error.  All functions are pure and keep
// every intermediate finite across the full double range (internals work
// in log space where sinh/cosh would overflow).

namespace hypcyc {

enum class Model { Disk, UpperHalfPlane };

// A point in one of the two models.  Disk: x^2 + y^2 < 1.
// Upper half-plane: y > 0.
struct HPoint {
  double x = 0.0;
  double y = 0.0;
  Model model = Model::Disk;
};

// Angle at the apex (the vertex opposite the side of length d).
// Strictly decreasing in J with apex_angle(d, d/2) = pi and limit 0.
double apex_angle(double d, double J);

// Angle at each base vertex.  Zero exactly when J = d/2.
double base_angle(double d, double J);

// d/dJ of apex_angle at fixed d.  Negative; diverges as J -> d/2+,
// which is excluded from the domain (throws std::domain_error).
double apex_angle_dJ(double d, double J);

// pi - apex_angle - 2 cosh(R) * base_angle.  For R <= d/2 this is the
// area of the triangle minus the two sectors cut out by radius-R disks
// at the base vertices.
double sector_defect(double d, double J, double R);

// Hyperbolic distance between two points of the same model.
// Disk normalization: the point (tanh(J/2), 0) is at distance J from
// the origin.  Half-plane: (0,1) to (l,1) is 2 asinh(l/2).
double model_distance(const HPoint& p, const HPoint& q);

namespace detail {

// log(sinh x) and log(cosh x) for x > 0, stable across the whole range.
double log_sinh(double x);
double log_cosh(double x);

// sinh(a)/sinh(b) for 0 < a <= b, computed via exponent-shifted logs so
// that huge arguments cancel instead of overflowing.  Result in (0, 1].
double sinh_ratio(double a, double b);

// sqrt(1/cosh^2(a) - 1/cosh^2(b)) for 0 < a <= b, via the factorization
// cosh^2 b - cosh^2 a = sinh(b-a) sinh(b+a).  Returns 0 when a == b.
double inv_cosh_sq_gap(double a, double b);

}  // namespace detail

}  // namespace hypcyc
