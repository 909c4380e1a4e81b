#pragma once

// Shared test utilities: deterministic samplers for tuples in each
// region, finite differences, and the independent geometric oracles
// (Klein-model area integration, pentagon fan radius).  Everything here
// deliberately avoids the solver paths it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "hypcyc/angles.hpp"
#include "hypcyc/embed.hpp"
#include "hypcyc/kernel.hpp"
#include "hypcyc/radius.hpp"
#include "hypcyc/regions.hpp"

namespace testutil {

constexpr double kPi = 3.14159265358979323846;

using hypcyc::SideLengths;

inline double rel_err(double a, double b, double floor = 0.0) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor, 1e-300});
}

// --- samplers ------------------------------------------------------------

inline std::vector<double> random_rest(std::mt19937_64& rng, std::size_t m,
                                       double lo = 0.1, double hi = 4.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> rest(m);
  for (double& v : rest) v = dist(rng);
  return rest;
}

// Centered tuple: largest side a fraction of b0(rest), placed at a
// random slot.
inline SideLengths random_centered(std::mt19937_64& rng, std::size_t n,
                                   double lo = 0.1, double hi = 4.0) {
  for (;;) {
    std::vector<double> rest = random_rest(rng, n - 1, lo, hi);
    std::uniform_real_distribution<double> frac(0.3, 0.95);
    const double dmax = *std::max_element(rest.begin(), rest.end());
    const double d0 = std::max(dmax * 1.0000001,
                               frac(rng) * hypcyc::b0(rest));
    if (d0 >= hypcyc::b0(rest)) continue;
    std::vector<double> d = rest;
    std::uniform_int_distribution<std::size_t> slot(0, n - 1);
    d.insert(d.begin() + slot(rng), d0);
    SideLengths out(d);
    if (hypcyc::classify(out).tag == hypcyc::RegionTag::Centered) return out;
  }
}

// Non-centered tuple: largest side strictly between b0 and h0 of the
// rest, margin keeping clear of both boundaries.
inline SideLengths random_noncentered(std::mt19937_64& rng, std::size_t n,
                                      double lo = 0.1, double hi = 4.0,
                                      double ulo = 0.1, double uhi = 0.85) {
  for (;;) {
    std::vector<double> rest = random_rest(rng, n - 1, lo, hi);
    const double b = hypcyc::b0(rest);
    const double h = hypcyc::h0(rest);
    std::uniform_real_distribution<double> frac(ulo, uhi);
    const double d0 = b + frac(rng) * (h - b);
    std::vector<double> d = rest;
    std::uniform_int_distribution<std::size_t> slot(0, n - 1);
    d.insert(d.begin() + slot(rng), d0);
    SideLengths out(d);
    if (hypcyc::classify(out).tag == hypcyc::RegionTag::NonCentered)
      return out;
  }
}

inline SideLengths random_realizable(std::mt19937_64& rng, std::size_t n,
                                     double lo = 0.1, double hi = 4.0) {
  std::uniform_int_distribution<int> coin(0, 1);
  return coin(rng) ? random_centered(rng, n, lo, hi)
                   : random_noncentered(rng, n, lo, hi);
}

// --- finite differences --------------------------------------------------

inline double central_fd(const std::function<double(double)>& f, double x,
                         double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Second-order one-sided difference, sign = +1 or -1 for the direction.
inline double one_sided_fd(const std::function<double(double)>& f, double x,
                           double h, int sign) {
  const double s = sign;
  return s * (-3.0 * f(x) + 4.0 * f(x + s * h) - f(x + 2.0 * s * h)) /
         (2.0 * h);
}

// d/dd_j of a tuple function, central differences.
inline double tuple_fd(const std::function<double(const SideLengths&)>& f,
                       const SideLengths& d, std::size_t j, double h = 1e-5) {
  std::vector<double> up = d.values(), dn = d.values();
  up[j] += h;
  dn[j] -= h;
  return (f(SideLengths(up)) - f(SideLengths(dn))) / (2.0 * h);
}

// --- independent oracles -------------------------------------------------

// Area of an isosceles triangle (legs J, base d, apex at the Klein
// origin) minus two radius-R disks at the base vertices, by midpoint
// integration in the Klein model where geodesics are straight chords
// and dA = dx dy / (1 - x^2 - y^2)^{3/2}.
inline double sector_defect_by_integration(double d, double J, double R,
                                           int grid = 2400) {
  const double A = hypcyc::apex_angle(d, J);
  const double rk = std::tanh(J);  // Klein radius of the base vertices
  const std::array<double, 2> v1 = {rk * std::cos(0.5 * A),
                                    rk * std::sin(0.5 * A)};
  const std::array<double, 2> v2 = {v1[0], -v1[1]};
  const double coshR = std::cosh(R);

  const auto inside_triangle = [&](double x, double y) {
    // apex (0,0), vertices v1, v2; Euclidean point-in-triangle
    const double c1 = v1[0] * y - v1[1] * x;   // apex->v1 edge
    const double c2 = v2[0] * y - v2[1] * x;   // apex->v2 edge
    const double c3 = (v2[0] - v1[0]) * (y - v1[1]) -
                      (v2[1] - v1[1]) * (x - v1[0]);  // v1->v2 edge
    return c1 <= 0.0 && c2 >= 0.0 && c3 <= 0.0;
  };
  const auto in_disk = [&](double x, double y, const std::array<double, 2>& c) {
    const double dot = 1.0 - x * c[0] - y * c[1];
    const double np = 1.0 - x * x - y * y;
    const double nc = 1.0 - c[0] * c[0] - c[1] * c[1];
    return dot / std::sqrt(np * nc) <= coshR;
  };

  const double xlo = 0.0, xhi = rk, ylo = -v1[1], yhi = v1[1];
  const double hx = (xhi - xlo) / grid, hy = (yhi - ylo) / grid;
  double area = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double x = xlo + (i + 0.5) * hx;
    for (int j = 0; j < grid; ++j) {
      const double y = ylo + (j + 0.5) * hy;
      if (!inside_triangle(x, y)) continue;
      if (in_disk(x, y, v1) || in_disk(x, y, v2)) continue;
      const double w = 1.0 - x * x - y * y;
      area += hx * hy / (w * std::sqrt(w));
    }
  }
  return area;
}

// sinh of the circumradius of a cyclic triangle, closed form only.
inline std::optional<double> tri_sinh_radius(double sa, double sb, double sc) {
  const double t = sa + sb + sc;
  const double f0 = t - 2.0 * sa, f1 = t - 2.0 * sb, f2 = t - 2.0 * sc;
  if (f0 <= 0.0 || f1 <= 0.0 || f2 <= 0.0) return std::nullopt;
  return 2.0 * sa * sb * sc / std::sqrt(t * f0 * f1 * f2);
}

// Third chord of a triangle inscribed with sinh-radius r whose other
// chords subtend the SUM of the two central angles (the larger root of
// the quadratic in sinh^2(c/2)).
inline std::optional<double> third_chord_sum_root(double r, double sa,
                                                  double sb) {
  const double r2 = r * r;
  const double B = 2.0 * r2 * (sa * sa + sb * sb) - 4.0 * sa * sa * sb * sb;
  const double C = r2 * (sa * sa - sb * sb) * (sa * sa - sb * sb);
  const double disc = std::max(0.0, B * B - 4.0 * r2 * C);
  const double x = (B + std::sqrt(disc)) / (2.0 * r2);
  if (!(x > 0.0) || !std::isfinite(x)) return std::nullopt;
  return std::sqrt(x);
}

// Circumradius of a cyclic pentagon by the fan route: diagonals e1, e2
// from vertex 0 split it into triangles (d1,d2,e1), (e1,d3,e2),
// (e2,d4,d0); scan and bisect on e1 so all three closed-form radii
// agree.  Returns the common radius.
inline std::optional<double> pentagon_fan_radius(
    const std::array<double, 5>& d) {
  std::array<double, 5> s;
  for (int i = 0; i < 5; ++i) s[i] = std::sinh(0.5 * d[i]);

  const auto mismatch = [&](double se1) -> std::optional<double> {
    const auto r1 = tri_sinh_radius(s[1], s[2], se1);
    if (!r1) return std::nullopt;
    const auto se2 = third_chord_sum_root(*r1, se1, s[3]);
    if (!se2) return std::nullopt;
    const auto r3 = tri_sinh_radius(*se2, s[4], s[0]);
    if (!r3) return std::nullopt;
    return *r3 - *r1;
  };

  const double lo = std::abs(s[1] - s[2]) + 1e-12;
  const double hi = s[1] + s[2] - 1e-12;
  if (lo >= hi) return std::nullopt;
  const int kScan = 4000;
  double prev_x = 0.0;
  std::optional<double> prev_f;
  for (int k = 0; k <= kScan; ++k) {
    const double x = lo + (hi - lo) * double(k) / kScan;
    const auto f = mismatch(x);
    if (f && prev_f && ((*f > 0.0) != (*prev_f > 0.0))) {
      double a = prev_x, b = x, fa = *prev_f;
      for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        const auto fm = mismatch(m);
        if (!fm) break;
        if ((*fm > 0.0) == (fa > 0.0)) {
          a = m;
          fa = *fm;
        } else {
          b = m;
        }
        if (b - a < 1e-15 * (1.0 + b)) break;
      }
      const double se1 = 0.5 * (a + b);
      const auto r = tri_sinh_radius(s[1], s[2], se1);
      if (r) return std::asinh(*r);
    }
    prev_x = x;
    prev_f = f;
  }
  return std::nullopt;
}

// Area of the embedded polygon by fanning triangles from vertex 0 and
// summing their angle defects; angles come from the hyperbolic law of
// cosines applied to model distances between the vertices.
inline double embedded_area(const hypcyc::Embedding& e) {
  const auto& v = e.vertices;
  const std::size_t n = v.size();
  const auto angle = [](double a, double b, double c) {
    // angle opposite side c
    const double num = std::cosh(a) * std::cosh(b) - std::cosh(c);
    const double den = std::sinh(a) * std::sinh(b);
    return std::acos(std::clamp(num / den, -1.0, 1.0));
  };
  double area = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double a = hypcyc::model_distance(v[0], v[i]);
    const double b = hypcyc::model_distance(v[i], v[i + 1]);
    const double c = hypcyc::model_distance(v[i + 1], v[0]);
    area += kPi - angle(a, b, c) - angle(b, c, a) - angle(c, a, b);
  }
  return area;
}

}  // namespace testutil
