#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypcyc/kernel.hpp"
#include "hypcyc/regions.hpp"

// Explicit vertex coordinates.  Cyclic tuples are placed with the
// circle's center at the disk origin (mapped to (0,1) in the half
// plane) and vertex 0 on the positive x-axis; vertex i is the common
// endpoint of sides i and i+1, so consecutive vertex distances
// reproduce the input side lengths.  Horocyclic tuples live on the
// standard horocycle y = 1 of the upper half-plane.

namespace hypcyc {

struct Embedding {
  Model model = Model::Disk;
  std::vector<double> sides;
  PolygonClass cls;
  std::optional<double> radius;   // absent for horocyclic
  std::optional<HPoint> center;   // absent for horocyclic
  std::vector<HPoint> vertices;   // vertex i = sides i and i+1 meeting
};

enum class OutputFormat { Json, Svg };

// Vertex coordinates of the cyclic polygon with these side lengths.
// Throws for non-realizable and horocyclic tuples (the latter embed
// via embed_horocyclic).
Embedding embed_cyclic(const SideLengths& d, Model model, double tol = 1e-12);

// Horocyclic polygon with the given short sides laid out along y = 1:
// vertex 0 at (0,1), then steps of 2 sinh(d_i/2).  The closing side
// between the last vertex and (0,1) realizes h0(rest).
Embedding embed_horocyclic(const std::vector<double>& rest);

// JSON: {"model","sides","class","radius","center","vertices"} with
// shortest round-trip number formatting.  SVG: 800x800 stroke-only
// drawing with geodesic edges as circular arcs.
std::string emit(const Embedding& e, OutputFormat format);
std::string emit_json(const Embedding& e);
std::string emit_svg(const Embedding& e);

// Inverse of emit_json (the distinguished index of the class is
// recovered as the argmax of the sides).
Embedding embedding_from_json(const std::string& text);

}  // namespace hypcyc
