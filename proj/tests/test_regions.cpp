#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hypcyc/kernel.hpp"
#include "hypcyc/regions.hpp"
#include "support.hpp"

using namespace hypcyc;
using testutil::kPi;
using testutil::rel_err;

TEST_CASE("SideLengths validation") {
  CHECK_THROWS_AS(SideLengths({1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(SideLengths({1.0, -2.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(SideLengths({1.0, 0.0, 1.0}), std::invalid_argument);
  CHECK_NOTHROW(SideLengths({1.0, 2.0, 3.0}));
}

TEST_CASE("is_cyclic_realizable") {
  CHECK(is_cyclic_realizable(SideLengths({1.0, 1.0, 1.0})));
  CHECK_FALSE(is_cyclic_realizable(SideLengths({10.0, 1.0, 1.0})));
  // exactly on the horocyclic frontier: equality is not strict
  const std::vector<double> rest = {0.7, 1.3, 2.1};
  std::vector<double> d = {h0(rest)};
  d.insert(d.end(), rest.begin(), rest.end());
  CHECK_FALSE(is_cyclic_realizable(SideLengths(d)));
}

TEST_CASE("h0 closed form and properties") {
  // frozen value for (1,2,3)
  CHECK(rel_err(h0({1.0, 2.0, 3.0}), 4.103033421958807058) < 1e-15);
  // identity residual
  const double H = h0({1.0, 2.0, 3.0});
  const double resid = std::sinh(0.5 * H) -
                       (std::sinh(0.5) + std::sinh(1.0) + std::sinh(1.5));
  CHECK(std::abs(resid) < 1e-12);
  // n-1 equal entries
  CHECK(h0({0.8, 0.8, 0.8, 0.8}) ==
        doctest::Approx(2.0 * std::asinh(4.0 * std::sinh(0.4))).epsilon(1e-15));
  // tiny sides: Euclidean limit
  CHECK(h0({1e-8, 1e-8}) == doctest::Approx(2e-8).epsilon(1e-9));
  // dominates the largest entry, monotone
  std::mt19937_64 rng(21);
  for (int k = 0; k < 300; ++k) {
    auto rest = testutil::random_rest(rng, 2 + k % 5);
    const double H1 = h0(rest);
    CHECK(H1 > *std::max_element(rest.begin(), rest.end()));
    auto bigger = rest;
    for (double& v : bigger) v += 0.1;
    CHECK(h0(bigger) > H1);
  }
  // huge inputs stay finite (the excess over the max side is below
  // double resolution here)
  CHECK(std::isfinite(h0({900.0, 1000.0})));
  CHECK(h0({900.0, 1000.0}) >= 1000.0);
  CHECK(rel_err(h0({900.0, 900.0}), 900.0 + 2.0 * std::log(2.0)) < 1e-14);
}

TEST_CASE("b0 root and closed forms") {
  // n = 3: cosh B0 = cosh d1 + cosh d2 - 1
  for (auto [d1, d2] : {std::pair{1.0, 2.0}, {0.3, 0.4}, {2.5, 0.7}}) {
    const double B = b0({d1, d2});
    CHECK(rel_err(B, std::acosh(std::cosh(d1) + std::cosh(d2) - 1.0)) < 1e-12);
    CHECK(rel_err(B, b0_closed_n3(d1, d2)) < 1e-12);
  }
  // frozen values
  CHECK(rel_err(b0_closed_n3(1.0, 2.0), 2.139219444757050896) < 1e-14);
  CHECK(rel_err(b0_closed_n4(1.0, 1.0, 2.0), 2.422718102504668764) < 1e-14);
  CHECK(rel_err(b0({1.0, 1.0, 2.0}), 2.422718102504668764) < 1e-11);
  // equal sides: cubic factors, root 2 sinh(d/2)
  CHECK(rel_err(b0_closed_n4(0.9, 0.9, 0.9),
                2.0 * std::asinh(2.0 * std::sinh(0.45))) < 1e-14);
  // Euclidean limit of the sinh form
  CHECK(rel_err(b0_closed_n3(1e-6, 1e-6), std::sqrt(2.0) * 1e-6) < 1e-6);
  // residual of the defining equation
  std::mt19937_64 rng(22);
  for (int k = 0; k < 200; ++k) {
    auto rest = testutil::random_rest(rng, 2 + k % 6);
    const double B = b0(rest);
    double sum = 0.0;
    for (double v : rest) sum += apex_angle(v, 0.5 * B);
    CHECK(std::abs(sum - kPi) < 1e-12);
    CHECK(B > *std::max_element(rest.begin(), rest.end()));
    CHECK(B < h0(rest));
    auto bigger = rest;
    for (double& v : bigger) v += 0.05;
    CHECK(b0(bigger) >= B);
  }
}

TEST_CASE("b0_closed_n4 cubic residual") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 300; ++k) {
    auto rest = testutil::random_rest(rng, 3);
    const double x = std::sinh(0.5 * b0_closed_n4(rest[0], rest[1], rest[2]));
    const double s1 = std::sinh(0.5 * rest[0]);
    const double s2 = std::sinh(0.5 * rest[1]);
    const double s3 = std::sinh(0.5 * rest[2]);
    const double p = s1 * s1 + s2 * s2 + s3 * s3;
    const double q = 2.0 * s1 * s2 * s3;
    const double resid = x * x * x - p * x - q;
    CHECK(std::abs(resid) <=
          1e-10 * std::max({std::abs(x * x * x), p * std::abs(x), q}));
    CHECK(b0_closed_n4(rest[0], rest[1], rest[2]) >
          *std::max_element(rest.begin(), rest.end()));
  }
}

TEST_CASE("classify: regular, boundary, frontier, half-symmetric") {
  CHECK(classify(SideLengths({0.7, 0.7, 0.7, 0.7, 0.7})).tag ==
        RegionTag::Centered);
  const std::vector<double> rest = {1.1, 0.6, 0.9};
  std::vector<double> db = {b0(rest), rest[0], rest[1], rest[2]};
  const auto cb = classify(SideLengths(db));
  CHECK(cb.tag == RegionTag::BoundaryCentered);
  CHECK(cb.index == 0);
  std::vector<double> dh = {h0(rest), rest[0], rest[1], rest[2]};
  const auto ch = classify(SideLengths(dh));
  CHECK(ch.tag == RegionTag::Horocyclic);
  CHECK(ch.index == 0);
  // (d, d', d, d') is always centered
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> dd(0.05, 5.0);
  for (int k = 0; k < 200; ++k) {
    const double d = dd(rng), dp = dd(rng);
    CHECK(classify(SideLengths({d, dp, d, dp})).tag == RegionTag::Centered);
    CHECK(classify(SideLengths({d, dp, dp, d})).tag == RegionTag::Centered);
  }
}

TEST_CASE("classify: vertical ray nesting") {
  std::mt19937_64 rng(25);
  for (int k = 0; k < 1000; ++k) {
    auto rest = testutil::random_rest(rng, 2 + k % 5);
    const double B = b0(rest), H = h0(rest);
    std::uniform_real_distribution<double> u(0.02, 0.98);
    const double inside = std::max(*std::max_element(rest.begin(), rest.end()) *
                                       (1.0 + 1e-9),
                                   u(rng) * B);
    std::vector<double> d = {inside};
    d.insert(d.end(), rest.begin(), rest.end());
    if (inside < B * (1.0 - 1e-9))
      CHECK(classify(SideLengths(d)).tag == RegionTag::Centered);
    d[0] = B + u(rng) * (H - B);
    if (d[0] > B * (1.0 + 1e-9) && d[0] < H * (1.0 - 1e-9)) {
      const auto c = classify(SideLengths(d));
      CHECK(c.tag == RegionTag::NonCentered);
      CHECK(c.index == 0);
    }
    d[0] = H * 1.01;
    CHECK(classify(SideLengths(d)).tag == RegionTag::NotRealizable);
  }
}

TEST_CASE("classify transports under rotation and reflection") {
  std::mt19937_64 rng(26);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 3 + k % 5;
    const auto d = testutil::random_noncentered(rng, n);
    const auto c = classify(d);
    const auto& v = d.values();
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<double> rot(n);
      for (std::size_t i = 0; i < n; ++i) rot[i] = v[(i + r) % n];
      const auto cr = classify(SideLengths(rot));
      CHECK(cr.tag == c.tag);
      CHECK(cr.index == (c.index + n - r) % n);
    }
    std::vector<double> refl(n);
    for (std::size_t i = 0; i < n; ++i) refl[i] = v[(n - i) % n];
    const auto cf = classify(SideLengths(refl));
    CHECK(cf.tag == c.tag);
    CHECK(cf.index == (n - c.index) % n);
  }
}

TEST_CASE("canonicalize") {
  const auto c1 = canonicalize(SideLengths({3.0, 1.0, 2.0}));
  CHECK(c1.representative.values() == std::vector<double>{1.0, 2.0, 3.0});
  CHECK_FALSE(c1.reflected);
  CHECK(c1.rotation == 1);
  const auto c2 = canonicalize(SideLengths({1.0, 3.0, 2.0}));
  CHECK(c2.representative.values() == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(c2.reflected);
  const auto c3 = canonicalize(SideLengths({0.5, 0.5, 0.5}));
  CHECK(c3.representative.values() == std::vector<double>{0.5, 0.5, 0.5});
  CHECK(c3.rotation == 0);
  CHECK_FALSE(c3.reflected);
}

TEST_CASE("canonicalize transform reproduces the representative") {
  std::mt19937_64 rng(27);
  for (int k = 0; k < 400; ++k) {
    const std::size_t n = 3 + k % 6;
    const auto d = SideLengths(testutil::random_rest(rng, n));
    const auto c = canonicalize(d);
    const auto& in = d.values();
    std::vector<double> base(n);
    for (std::size_t i = 0; i < n; ++i)
      base[i] = c.reflected ? in[(n - i) % n] : in[i];
    for (std::size_t i = 0; i < n; ++i)
      CHECK(c.representative[i] == base[(i + c.rotation) % n]);
    // representative is minimal over the orbit
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<double> cand(n);
      for (std::size_t i = 0; i < n; ++i) cand[i] = in[(i + r) % n];
      CHECK_FALSE(std::lexicographical_compare(
          cand.begin(), cand.end(), c.representative.begin(),
          c.representative.end()));
    }
  }
}

TEST_CASE("congruent") {
  CHECK(congruent(SideLengths({1.0, 2.0, 3.0}), SideLengths({2.0, 3.0, 1.0}),
                  1e-12));
  CHECK(congruent(SideLengths({1.0, 2.0, 3.0}), SideLengths({3.0, 2.0, 1.0}),
                  1e-12));
  CHECK_FALSE(congruent(SideLengths({1.0, 2.0, 3.0}),
                        SideLengths({1.0, 2.0, 3.1}), 1e-12));
  CHECK_THROWS_AS(congruent(SideLengths({1.0, 2.0, 3.0}),
                            SideLengths({1.0, 2.0, 3.0, 4.0}), 1e-12),
                  std::invalid_argument);
}
