#include "hypcyc/angles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypcyc/kernel.hpp"

namespace hypcyc {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::size_t mod(std::size_t i, std::size_t n) { return i % n; }

// Vertex angles from the base angles: nu_i = beta_i + beta_{i+1}, with
// the longest side's beta negated at its two flanking vertices when the
// tuple is non-centered (or horocyclic, which inherits the same rule).
std::vector<double> assemble_nu(const std::vector<double>& beta,
                                const PolygonClass& cls) {
  const std::size_t n = beta.size();
  std::vector<double> nu(n);
  const bool flip = cls.tag == RegionTag::NonCentered ||
                    cls.tag == RegionTag::Horocyclic;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ip = mod(i + 1, n);
    if (flip && i == cls.index)
      nu[i] = beta[ip] - beta[i];
    else if (flip && ip == cls.index)
      nu[i] = beta[i] - beta[ip];
    else
      nu[i] = beta[i] + beta[ip];
  }
  return nu;
}

double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

AngleData angles(const SideLengths& d, double tol) {
  const auto cf = detail::classify_full(d, tol);
  const std::size_t n = d.size();
  AngleData out;
  out.cls = cf.cls;
  out.alpha.resize(n);
  out.beta.resize(n);

  if (cf.cls.tag == RegionTag::NotRealizable)
    throw std::domain_error("angles: tuple bounds no polygon");

  if (cf.cls.tag == RegionTag::Horocyclic) {
    for (std::size_t i = 0; i < n; ++i) {
      out.alpha[i] = 0.0;
      out.beta[i] = std::asin(std::exp(-detail::log_cosh(0.5 * d[i])));
    }
    out.nu = assemble_nu(out.beta, cf.cls);
    return out;
  }

  const double J = radius(d, tol).J;
  for (std::size_t i = 0; i < n; ++i) {
    out.alpha[i] = apex_angle(d[i], J);
    out.beta[i] = base_angle(d[i], J);
  }
  out.nu = assemble_nu(out.beta, cf.cls);
  return out;
}

double defect(const SideLengths& d, double R, double tol) {
  if (!(R >= 0.0) || !std::isfinite(R))
    throw std::domain_error("defect: R must be nonnegative");
  const AngleData a = angles(d, tol);
  return (double(d.size()) - 2.0) * kPi - std::cosh(R) * sum(a.nu);
}

Jacobian jacobian(const SideLengths& d, double R, double tol) {
  if (!(R >= 0.0) || !std::isfinite(R))
    throw std::domain_error("jacobian: R must be nonnegative");
  const auto cf = detail::classify_full(d, tol);
  if (cf.cls.tag == RegionTag::NotRealizable ||
      cf.cls.tag == RegionTag::Horocyclic)
    throw std::domain_error("jacobian: tuple outside the open cyclic domain");

  const std::size_t n = d.size();
  const std::size_t i0 = cf.i0;
  const bool boundary = cf.cls.tag == RegionTag::BoundaryCentered;
  const bool noncentered = cf.cls.tag == RegionTag::NonCentered;

  const double J = radius(d, tol).J;
  std::vector<double> alpha(n), tg(n), cthd(n);
  for (std::size_t i = 0; i < n; ++i) {
    alpha[i] = apex_angle(d[i], J);
    tg[i] = std::tan(0.5 * alpha[i]);
    cthd[i] = 1.0 / std::tanh(0.5 * d[i]);
  }
  const double thJ = std::tanh(J);
  const double cthJ = 1.0 / thJ;
  const double coshJ = std::cosh(J);

  Jacobian out;
  out.R = R;
  out.dJ.assign(n, 0.0);

  if (boundary) {
    out.dJ[i0] = 0.5;  // and zero elsewhere
  } else if (noncentered) {
    double denom = tg[i0];
    for (std::size_t i = 0; i < n; ++i)
      if (i != i0) denom -= tg[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double v = cthd[j] * thJ * tg[j] / (2.0 * denom);
      out.dJ[j] = (j == i0) ? v : -v;
    }
  } else {
    const double T = sum(tg);
    for (std::size_t j = 0; j < n; ++j)
      out.dJ[j] = cthd[j] * thJ * tg[j] / (2.0 * T);
  }

  // dAlpha from the shared identities
  //   cot(a_i/2) da_i/dd_j + 2 coth J dJ/dd_j = [i == j] coth(d_j/2).
  // On the boundary tan(a_{i0}/2) is infinite; that row is filled from
  // the sum rules below instead.
  out.dAlpha.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    if (boundary && i == i0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      out.dAlpha[i][j] = (i == j)
                             ? tg[i] * (cthd[i] - 2.0 * cthJ * out.dJ[j])
                             : -2.0 * tg[i] * cthJ * out.dJ[j];
    }
  }
  if (boundary) {
    out.boundary.emplace();
    auto& bp = *out.boundary;
    bp.side = i0;
    bp.alpha_from_centered.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i0) s += out.dAlpha[k][j];
      bp.alpha_from_centered[j] = -s;
    }
    bp.alpha_from_noncentered = bp.alpha_from_centered;
    for (double& v : bp.alpha_from_noncentered) v = -v;
    out.dAlpha[i0] = bp.alpha_from_centered;
  }

  // dBeta: -1/(2 cosh J) dAlpha, plus the diagonal extra term.
  out.dBeta.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double extra = 0.5 * detail::inv_cosh_sq_gap(0.5 * d[i], J);
    for (std::size_t j = 0; j < n; ++j) {
      out.dBeta[i][j] = -out.dAlpha[i][j] / (2.0 * coshJ);
      if (i == j) out.dBeta[i][j] -= extra;
    }
  }
  if (out.boundary) {
    auto& bp = *out.boundary;
    bp.beta_from_centered.assign(n, 0.0);
    bp.beta_from_noncentered.assign(n, 0.0);
    // J = d_{i0}/2 kills the diagonal extra term on this row.
    for (std::size_t j = 0; j < n; ++j) {
      bp.beta_from_centered[j] = -bp.alpha_from_centered[j] / (2.0 * coshJ);
      bp.beta_from_noncentered[j] = -bp.beta_from_centered[j];
    }
    out.dBeta[i0] = bp.beta_from_centered;
  }

  // dNu follows the same flanking-sign rule as nu itself; on the
  // boundary the centered-side rows already give the two-sided value.
  out.dNu.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ip = mod(i + 1, n);
    for (std::size_t j = 0; j < n; ++j) {
      if (noncentered && i == i0)
        out.dNu[i][j] = out.dBeta[ip][j] - out.dBeta[i][j];
      else if (noncentered && ip == i0)
        out.dNu[i][j] = out.dBeta[i][j] - out.dBeta[ip][j];
      else
        out.dNu[i][j] = out.dBeta[i][j] + out.dBeta[ip][j];
    }
  }

  out.dDefect.assign(n, 0.0);
  const double cR = std::cosh(R);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = cR * detail::inv_cosh_sq_gap(0.5 * d[i], J);
    out.dDefect[i] = (noncentered && i == i0) ? -v : v;
  }
  return out;
}

IsoscelesFan isosceles_fan(const SideLengths& d, double tol) {
  const AngleData a = angles(d, tol);
  if (a.cls.tag == RegionTag::Horocyclic)
    throw std::domain_error("isosceles_fan: horocyclic tuples have no fan");
  IsoscelesFan fan;
  fan.apex_angles = a.alpha;
  fan.base_angles = a.beta;
  fan.circumradius = radius(d, tol).J;
  fan.exterior = a.cls.tag == RegionTag::NonCentered;
  fan.exterior_index = fan.exterior ? a.cls.index : 0;
  return fan;
}

std::vector<SideLengths> monotone_path(const SideLengths& from,
                                       const SideLengths& to, int steps) {
  const std::size_t n = from.size();
  if (to.size() != n)
    throw std::invalid_argument("monotone_path: tuples of different length");
  if (steps < 1) throw std::invalid_argument("monotone_path: steps must be >= 1");
  for (std::size_t i = 1; i < n; ++i)
    if (from[0] < from[i])
      throw std::invalid_argument(
          "monotone_path: start tuple must have its largest entry first");
  for (std::size_t i = 0; i < n; ++i)
    if (to[i] < from[i])
      throw std::invalid_argument("monotone_path: end must dominate start");
  const auto tag_ok = [](RegionTag t) {
    return t == RegionTag::Centered || t == RegionTag::BoundaryCentered;
  };
  if (!tag_ok(classify(from).tag) || !tag_ok(classify(to).tag))
    throw std::invalid_argument(
        "monotone_path: both endpoints must lie in the centered closure");

  const double dmin = *std::min_element(from.begin(), from.end());
  const double dmax = *std::max_element(to.begin(), to.end());
  const double span = dmax - dmin;

  std::vector<SideLengths> path;
  path.reserve(steps + 1);
  std::vector<double> cur(n);
  for (int k = 0; k <= steps; ++k) {
    const double t = span * double(k) / double(steps);
    for (std::size_t i = 0; i < n; ++i)
      cur[i] = std::clamp(dmin + t, from[i], to[i]);
    path.emplace_back(cur);
  }
  return path;
}

double defect_lower_bound_horocyclic(const std::vector<double>& lower_sides,
                                     double R) {
  if (!(R >= 0.0) || !std::isfinite(R))
    throw std::domain_error("defect bound: R must be nonnegative");
  if (lower_sides.size() < 2)
    throw std::invalid_argument("defect bound: need at least two sides");
  const double H = h0(lower_sides);
  const std::size_t n = lower_sides.size() + 1;
  double others = 0.0;
  for (double v : lower_sides)
    others += std::asin(std::exp(-detail::log_cosh(0.5 * v)));
  const double bl = std::asin(std::exp(-detail::log_cosh(0.5 * H)));
  return (double(n) - 2.0) * kPi + 2.0 * std::cosh(R) * (bl - others);
}

MinDefectBc3 min_defect_bc3(double B0, double d_min, double R) {
  if (!(B0 > 0.0) || !(d_min > 0.0))
    throw std::invalid_argument("min_defect_bc3: lengths must be positive");
  if (!(R >= 0.0) || R > 0.5 * d_min)
    throw std::invalid_argument("min_defect_bc3: requires 0 <= R <= d_min/2");
  const double c = std::cosh(B0) - std::cosh(d_min) + 1.0;
  if (std::cosh(B0) < 2.0 * std::cosh(d_min) - 1.0)
    throw std::invalid_argument(
        "min_defect_bc3: requires cosh B0 >= 2 cosh d_min - 1");
  MinDefectBc3 out;
  out.d1 = d_min;
  out.d2 = std::acosh(c);
  out.value = defect(SideLengths({B0, out.d1, out.d2}), R);
  return out;
}

}  // namespace hypcyc
