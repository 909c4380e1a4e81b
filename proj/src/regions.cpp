#include "hypcyc/regions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hypcyc/kernel.hpp"
#include "solve1d.hpp"

namespace hypcyc {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_rest(const std::vector<double>& rest) {
  if (rest.size() < 2)
    throw std::invalid_argument("need at least two remaining sides (n >= 3)");
  for (double v : rest)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("side lengths must be positive and finite");
}

void require_tol(double tol) {
  if (!(tol > 0.0) || !(tol <= 1e-3))
    throw std::invalid_argument("classification tolerance out of range");
}

}  // namespace

SideLengths::SideLengths(std::vector<double> d) : d_(std::move(d)) {
  if (d_.size() < 3)
    throw std::invalid_argument("a polygon needs at least three sides");
  for (double v : d_)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("side lengths must be positive and finite");
}

bool is_cyclic(const PolygonClass& c) {
  return c.tag == RegionTag::NonCentered ||
         c.tag == RegionTag::BoundaryCentered || c.tag == RegionTag::Centered;
}

std::string to_string(RegionTag tag) {
  switch (tag) {
    case RegionTag::NotRealizable: return "not-realizable";
    case RegionTag::Horocyclic: return "horocyclic";
    case RegionTag::NonCentered: return "non-centered";
    case RegionTag::BoundaryCentered: return "boundary-centered";
    case RegionTag::Centered: return "centered";
  }
  return "unknown";
}

namespace detail {

std::size_t argmax_index(const std::vector<double>& d) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] > d[best]) best = i;
  return best;
}

std::vector<double> cyclic_rest(const std::vector<double>& d, std::size_t i) {
  const std::size_t n = d.size();
  std::vector<double> rest;
  rest.reserve(n - 1);
  for (std::size_t j = 1; j < n; ++j) rest.push_back(d[(i + j) % n]);
  return rest;
}

Classification classify_full(const SideLengths& d, double tol) {
  require_tol(tol);
  const std::size_t i0 = argmax_index(d.values());
  const std::vector<double> rest = cyclic_rest(d.values(), i0);
  const double D = d[i0];
  const double H = h0(rest);
  const double band = tol * std::max(1.0, D);

  Classification out;
  out.i0 = i0;
  out.h0 = H;
  if (D > H + band) {
    out.cls = {RegionTag::NotRealizable, i0};
    return out;
  }
  if (std::abs(D - H) <= band) {
    out.cls = {RegionTag::Horocyclic, i0};
    return out;
  }
  out.b0 = b0(rest);
  if (std::abs(D - out.b0) <= band)
    out.cls = {RegionTag::BoundaryCentered, i0};
  else if (D < out.b0)
    out.cls = {RegionTag::Centered, i0};
  else
    out.cls = {RegionTag::NonCentered, i0};
  return out;
}

}  // namespace detail

bool is_cyclic_realizable(const SideLengths& d) {
  const std::size_t i0 = detail::argmax_index(d.values());
  return d[i0] < h0(detail::cyclic_rest(d.values(), i0));
}

double h0(const std::vector<double>& rest) {
  require_rest(rest);
  const double dmax = *std::max_element(rest.begin(), rest.end());
  if (dmax < 700.0) {
    double s = 0.0;
    for (double v : rest) s += std::sinh(0.5 * v);
    return 2.0 * std::asinh(s);
  }
  // log-sum-exp fallback for inputs where sinh overflows
  double lmax = -1.0 / 0.0;
  std::vector<double> ls(rest.size());
  for (std::size_t i = 0; i < rest.size(); ++i) {
    ls[i] = detail::log_sinh(0.5 * rest[i]);
    lmax = std::max(lmax, ls[i]);
  }
  double acc = 0.0;
  for (double l : ls) acc += std::exp(l - lmax);
  const double L = lmax + std::log(acc);  // log of the sinh sum, large
  // asinh(e^L) = L + log(1 + sqrt(1 + e^{-2L}))
  return 2.0 * (L + std::log(1.0 + std::sqrt(1.0 + std::exp(-2.0 * L))));
}

double b0(const std::vector<double>& rest) {
  require_rest(rest);
  const double D = *std::max_element(rest.begin(), rest.end());
  const double lo = 0.5 * D;
  double hi = 0.5 * h0(rest);
  const auto F = [&rest](double J) {
    double s = 0.0;
    for (double v : rest) s += apex_angle(v, J);
    return s - kPi;
  };
  const auto dF = [&rest](double J) {
    double s = 0.0;
    for (double v : rest) s += apex_angle_dJ(v, J);
    return s;
  };
  // F(lo) > 0 since the largest side alone contributes pi there;
  // F(hi) < 0 on the horocyclic frontier.  Widen defensively if
  // rounding ever spoils the upper sign.
  for (int k = 0; k < 8 && F(hi) >= 0.0; ++k) hi *= 2.0;
  const auto r = detail::falling_root(F, dF, lo, hi, 1e-13);
  return 2.0 * r.x;
}

double b0_closed_n3(double d1, double d2) {
  require_rest({d1, d2});
  return 2.0 * std::asinh(std::hypot(std::sinh(0.5 * d1), std::sinh(0.5 * d2)));
}

double b0_closed_n4(double d1, double d2, double d3) {
  require_rest({d1, d2, d3});
  const double s1 = std::sinh(0.5 * d1);
  const double s2 = std::sinh(0.5 * d2);
  const double s3 = std::sinh(0.5 * d3);
  const double p = s1 * s1 + s2 * s2 + s3 * s3;
  const double q = 2.0 * s1 * s2 * s3;
  // Unique positive root of x^3 - p x - q, via the trigonometric form
  // of Cardano (the discriminant is nonnegative, three real roots).
  const double m = 2.0 * std::sqrt(p / 3.0);
  const double arg = std::clamp(4.0 * q / (m * m * m), -1.0, 1.0);
  const double x = m * std::cos(std::acos(arg) / 3.0);
  return 2.0 * std::asinh(x);
}

PolygonClass classify(const SideLengths& d, double tol) {
  return detail::classify_full(d, tol).cls;
}

CanonicalForm canonicalize(const SideLengths& d) {
  const std::size_t n = d.size();
  const auto& in = d.values();
  std::vector<double> tau(n);
  for (std::size_t i = 0; i < n; ++i) tau[i] = in[(n - i) % n];

  std::vector<double> best;
  std::size_t best_rot = 0;
  bool best_refl = false;
  std::vector<double> cand(n);
  for (int refl = 0; refl < 2; ++refl) {
    const std::vector<double>& base = refl ? tau : in;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) cand[i] = base[(i + k) % n];
      if (best.empty() ||
          std::lexicographical_compare(cand.begin(), cand.end(), best.begin(),
                                       best.end())) {
        best = cand;
        best_rot = k;
        best_refl = refl != 0;
      }
    }
  }
  return {SideLengths(std::move(best)), best_rot, best_refl};
}

bool congruent(const SideLengths& a, const SideLengths& b, double tol) {
  if (a.size() != b.size())
    throw std::invalid_argument("congruent: tuples of different length");
  const auto ca = canonicalize(a).representative;
  const auto cb = canonicalize(b).representative;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(ca[i] - cb[i]) > tol) return false;
  return true;
}

}  // namespace hypcyc
