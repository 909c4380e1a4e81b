#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Classification of side-length tuples.  A tuple (d_0,...,d_{n-1}) of
// positive lengths is the cyclically ordered side collection of
//   - a cyclic polygon      iff sinh(D/2) <  sum of the other sinh(d_i/2),
//   - a horocyclic polygon  iff equality holds,
// where D is the largest entry.  Cyclic tuples split further by where
// the circle's center sits relative to the polygon: strictly inside
// (centered), on the midpoint of the longest side (boundary-centered,
// the graph of b0), or beyond the longest side (non-centered).  The
// thresholds along the d_D axis are b0(rest) < h0(rest).

namespace hypcyc {

// Ordered tuple of n >= 3 positive finite side lengths.
class SideLengths {
 public:
  explicit SideLengths(std::vector<double> d);

  std::size_t size() const { return d_.size(); }
  double operator[](std::size_t i) const { return d_[i]; }
  const std::vector<double>& values() const { return d_; }
  std::vector<double>::const_iterator begin() const { return d_.begin(); }
  std::vector<double>::const_iterator end() const { return d_.end(); }

 private:
  std::vector<double> d_;
};

enum class RegionTag {
  NotRealizable,
  Horocyclic,
  NonCentered,
  BoundaryCentered,
  Centered
};

// index is the distinguished side: the unique longest side for
// Horocyclic/NonCentered, the side whose midpoint carries the center
// for BoundaryCentered.  For the other tags it records the argmax used
// during classification and carries no geometric meaning.
struct PolygonClass {
  RegionTag tag = RegionTag::Centered;
  std::size_t index = 0;
};

bool is_cyclic(const PolygonClass& c);
std::string to_string(RegionTag tag);

// Lexicographically least tuple over the 2n images under cyclic
// rotation and reversal, with the transform that produces it:
// representative[i] = input[(i + rotation) mod n] applied after the
// optional reversal input[i] -> input[(n - i) mod n].
struct CanonicalForm {
  SideLengths representative;
  std::size_t rotation = 0;
  bool reflected = false;
};

// True iff the tuple bounds a cyclic polygon (strict sinh inequality at
// the largest entry; equality within working precision counts as not
// realizable, matching the horocyclic frontier).
bool is_cyclic_realizable(const SideLengths& d);

// Side length at which a tuple (H0, rest...) degenerates to horocyclic:
// sinh(H0/2) = sum sinh(d_i/2).  Requires rest.size() >= 2.
double h0(const std::vector<double>& rest);

// Side length at which (B0, rest...) has its center on that side:
// sum over rest of apex_angle(d_i, B0/2) = pi.  Exceeds max(rest) and
// stays below h0(rest).  Requires rest.size() >= 2.
double b0(const std::vector<double>& rest);

// Closed forms of b0 for two and three remaining sides.
double b0_closed_n3(double d1, double d2);
double b0_closed_n4(double d1, double d2, double d3);

// Region of the tuple.  The boundary bands Horocyclic and
// BoundaryCentered have width tol * max(1, D) around h0 and b0.
PolygonClass classify(const SideLengths& d, double tol = 1e-12);

CanonicalForm canonicalize(const SideLengths& d);

// True iff the two tuples are related by rotation and/or reversal,
// entrywise within tol (absolute).
bool congruent(const SideLengths& a, const SideLengths& b, double tol);

namespace detail {

// Smallest index attaining the maximum.
std::size_t argmax_index(const std::vector<double>& d);

// Entries other than position i, in cyclic order starting after i.
std::vector<double> cyclic_rest(const std::vector<double>& d, std::size_t i);

// Classification plus the thresholds it computed, so downstream solvers
// can reuse the bracket [D/2, b0/2] without re-solving.
struct Classification {
  PolygonClass cls;
  std::size_t i0 = 0;    // argmax, smallest index on ties
  double h0 = 0.0;       // of the rest of i0
  double b0 = 0.0;       // of the rest of i0; 0 if not computed
};
Classification classify_full(const SideLengths& d, double tol);

}  // namespace detail

}  // namespace hypcyc
