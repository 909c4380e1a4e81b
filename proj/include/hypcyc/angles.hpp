#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypcyc/radius.hpp"
#include "hypcyc/regions.hpp"

// Central angles alpha_i, base angles beta_i, and vertex angles nu_i of
// the polygon determined by a side-length tuple, together with the
// radius-R defect
//   D_R = (n-2) pi - cosh(R) * sum nu_i
// and analytic first derivatives of everything with respect to the
// side lengths.  Vertex i sits between sides i and i+1 (mod n);
// nu_i = beta_i + beta_{i+1} except at the two vertices flanking the
// longest side of a non-centered polygon, where the longest side's
// beta enters with a minus sign.  All functions extend continuously to
// horocyclic tuples where the paper-level limits make sense
// (alpha_i -> 0, beta_i -> asin(1/cosh(d_i/2))).

namespace hypcyc {

struct AngleData {
  std::vector<double> alpha;  // in (0, pi]; 0 only for horocyclic tuples
  std::vector<double> beta;   // in [0, pi/2)
  std::vector<double> nu;     // in [0, pi)
  PolygonClass cls;
};

// Angles of the tuple.  Cyclic classes solve for the radius first;
// horocyclic tuples get the continuous extension.  Throws for
// NotRealizable.
AngleData angles(const SideLengths& d, double tol = 1e-12);

// Radius-R defect.  For R <= min(d_i)/2 and a centered tuple this is
// the area of the polygon outside radius-R disks at its vertices; the
// formula itself is evaluated for any R >= 0.
double defect(const SideLengths& d, double R, double tol = 1e-12);

// Dense n x n derivative data; row i, column j holds the partial of
// quantity i with respect to side j.
struct Jacobian {
  double R = 0.0;
  std::vector<double> dJ;                   // dJ/dd_j
  std::vector<std::vector<double>> dAlpha;  // may hold a one-sided row, below
  std::vector<std::vector<double>> dBeta;
  std::vector<std::vector<double>> dNu;
  std::vector<double> dDefect;

  // On the boundary between centered and non-centered the partials of
  // alpha/beta at the longest side are one-sided and opposite; both
  // limits are reported and the main matrices carry the centered-side
  // rows.  dJ, dNu, dDefect are two-sided there.
  struct BoundaryPair {
    std::size_t side = 0;
    std::vector<double> alpha_from_centered;
    std::vector<double> alpha_from_noncentered;
    std::vector<double> beta_from_centered;
    std::vector<double> beta_from_noncentered;
  };
  std::optional<BoundaryPair> boundary;
};

// Analytic Jacobian at an interior point of the centered or
// non-centered region, or the one-sided data on the boundary.
// Horocyclic and non-realizable tuples throw.
Jacobian jacobian(const SideLengths& d, double R, double tol = 1e-12);

// Decomposition of a cyclic polygon into isosceles triangles joining
// the circle's center to each side.  The union covers the polygon for
// centered tuples; for non-centered ones the triangle at the longest
// side lies outside and closes the fan instead.
struct IsoscelesFan {
  std::vector<double> apex_angles;
  std::vector<double> base_angles;
  double circumradius = 0.0;
  bool exterior = false;         // true iff non-centered
  std::size_t exterior_index = 0;
};

IsoscelesFan isosceles_fan(const SideLengths& d, double tol = 1e-12);

// The clamped path d_i(t) = clamp(min(d) + t, [d_i, d'_i]) between two
// entrywise-ordered tuples in the centered closure, sampled at steps+1
// evenly spaced parameter values.  The start tuple must have its
// largest entry first.  Interior samples stay centered and the defect
// is nondecreasing along the path.
std::vector<SideLengths> monotone_path(const SideLengths& from,
                                       const SideLengths& to, int steps);

// Defect of the horocyclic tuple (h0(lower_sides), lower_sides...): a
// strict lower bound for the defect of every non-centered tuple whose
// non-maximal sides dominate lower_sides entrywise.
double defect_lower_bound_horocyclic(const std::vector<double>& lower_sides,
                                     double R);

// Minimum of D_R over boundary-centered triples (B0, d, d') with both
// legs at least d_min; attained at (d_min, acosh(cosh B0 - cosh d_min + 1)).
struct MinDefectBc3 {
  double d1 = 0.0;
  double d2 = 0.0;
  double value = 0.0;
};

MinDefectBc3 min_defect_bc3(double B0, double d_min, double R);

}  // namespace hypcyc
