#pragma once

#include "hypcyc/regions.hpp"

// Circumradius of a realizable tuple.  The radius J >= max(d_i)/2 is
// the unique solution of
//   sum_i apex_angle(d_i, J) = 2 pi                   (centered tuples)
//   apex_angle(D, J) = sum of the others              (non-centered)
// with equality of the two at J = D/2 on the boundary.  Closed forms
// exist for n = 3, 4 and for regular tuples; they double as test
// oracles for the general solver.

namespace hypcyc {

enum class RadiusBranch { CenteredSum, NonCenteredBalance, BoundaryExact };

struct RadiusResult {
  double J = 0.0;
  RadiusBranch equation_used = RadiusBranch::CenteredSum;
  double residual = 0.0;  // of the solved equation at J
  int iterations = 0;
};

// General solver.  Throws std::domain_error for tuples that are not
// realizable ("no cyclic polygon") or horocyclic ("radius diverges"),
// including tuples so close to horocyclic that J would exceed 700.
RadiusResult radius(const SideLengths& d, double tol = 1e-12);

// sinh J = 2 s0 s1 s2 / sqrt((s0+s1+s2) prod(-s_i + sum of others)),
// s_i = sinh(d_i/2).  Domain error when the radicand is nonpositive
// (exactly the non-realizable triples).
double radius_closed_tri(double d0, double d1, double d2);

// sinh J = 2 sqrt((s0s1+s2s3)(s0s2+s1s3)(s0s3+s1s2) / prod(...)).
double radius_closed_quad(double d0, double d1, double d2, double d3);

// Length of the diagonal of the cyclic quadrilateral (d0,d1,d2,d3)
// joining the vertex between sides 3 and 0 to the vertex between
// sides 1 and 2; it splits the polygon into triangles (d0,d1,D) and
// (d2,d3,D) with equal circumradius.
double quad_diagonal(double d0, double d1, double d2, double d3);

// Regular n-gon: sinh J = sinh(d/2) / sin(pi/n).
double radius_regular(int n, double d);

}  // namespace hypcyc
