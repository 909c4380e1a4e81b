#include "hypcyc/embed.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hypcyc/angles.hpp"
#include "hypcyc/radius.hpp"

namespace hypcyc {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Disk point at hyperbolic distance J from the origin, direction psi.
HPoint disk_point(double J, double psi) {
  const double r = std::tanh(0.5 * J);
  return {r * std::cos(psi), r * std::sin(psi), Model::Disk};
}

// Same point pushed through the Cayley map z -> i(1+z)/(1-z), which
// sends the origin to (0,1).  Written so that 1 - |z|^2 and |1 - z|^2
// never cancel, even for J large.
HPoint uhp_point(double J, double psi) {
  const double r = std::tanh(0.5 * J);
  const double one_minus_r = 2.0 / (std::exp(J) + 1.0);
  const double s = std::sin(0.5 * psi);
  const double Q = one_minus_r * one_minus_r + 4.0 * r * s * s;
  const double sech2 = one_minus_r * (1.0 + r);
  return {-2.0 * r * std::sin(psi) / Q, sech2 / Q, Model::UpperHalfPlane};
}

std::string class_name(const PolygonClass& c) { return to_string(c.tag); }

RegionTag tag_from_name(const std::string& s) {
  for (RegionTag t : {RegionTag::NotRealizable, RegionTag::Horocyclic,
                      RegionTag::NonCentered, RegionTag::BoundaryCentered,
                      RegionTag::Centered})
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown polygon class: " + s);
}

}  // namespace

Embedding embed_cyclic(const SideLengths& d, Model model, double tol) {
  const auto cf = detail::classify_full(d, tol);
  if (cf.cls.tag == RegionTag::NotRealizable)
    throw std::domain_error("embed_cyclic: tuple bounds no polygon");
  if (cf.cls.tag == RegionTag::Horocyclic)
    throw std::domain_error(
        "embed_cyclic: horocyclic tuple; use embed_horocyclic");

  const std::size_t n = d.size();
  const double J = radius(d, tol).J;

  // Cumulative central angles.  The fan closes around the full circle
  // for centered tuples; for non-centered ones it only closes when the
  // longest side is the wrapping chord, so accumulate in the frame that
  // puts it first and relabel afterwards.
  const std::size_t k = cf.cls.tag == RegionTag::NonCentered ? cf.i0 : 0;
  std::vector<double> theta(n, 0.0);
  for (std::size_t i = 1; i < n; ++i)
    theta[i] = theta[i - 1] + apex_angle(d[(i + k) % n], J);

  // Vertex m of the original labeling sits at rotated slot (m - k) mod n;
  // a rigid rotation then parks vertex 0 on the positive x-axis.
  const double phi = theta[(n - k) % n];

  Embedding out;
  out.model = model;
  out.sides = d.values();
  out.cls = cf.cls;
  out.radius = J;
  out.center = model == Model::Disk ? HPoint{0.0, 0.0, Model::Disk}
                                    : HPoint{0.0, 1.0, Model::UpperHalfPlane};
  out.vertices.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double psi = theta[(m + n - k) % n] - phi;
    out.vertices[m] = model == Model::Disk ? disk_point(J, psi)
                                           : uhp_point(J, psi);
  }
  return out;
}

Embedding embed_horocyclic(const std::vector<double>& rest) {
  const double H = h0(rest);  // validates rest
  Embedding out;
  out.model = Model::UpperHalfPlane;
  out.sides.reserve(rest.size() + 1);
  out.sides.push_back(H);
  out.sides.insert(out.sides.end(), rest.begin(), rest.end());
  out.cls = {RegionTag::Horocyclic, 0};
  out.vertices.reserve(rest.size() + 1);
  double x = 0.0;
  out.vertices.push_back({0.0, 1.0, Model::UpperHalfPlane});
  for (double dlen : rest) {
    x += 2.0 * std::sinh(0.5 * dlen);
    out.vertices.push_back({x, 1.0, Model::UpperHalfPlane});
  }
  return out;
}

std::string emit(const Embedding& e, OutputFormat format) {
  return format == OutputFormat::Json ? emit_json(e) : emit_svg(e);
}

std::string emit_json(const Embedding& e) {
  nlohmann::json j;
  j["model"] = e.model == Model::Disk ? "disk" : "uhp";
  j["sides"] = e.sides;
  j["class"] = class_name(e.cls);
  if (e.radius)
    j["radius"] = *e.radius;
  else
    j["radius"] = nullptr;
  if (e.center)
    j["center"] = {e.center->x, e.center->y};
  else
    j["center"] = nullptr;
  auto verts = nlohmann::json::array();
  for (const auto& v : e.vertices) verts.push_back({v.x, v.y});
  j["vertices"] = verts;
  return j.dump();
}

Embedding embedding_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Embedding e;
  e.model = j.at("model") == "disk" ? Model::Disk : Model::UpperHalfPlane;
  e.sides = j.at("sides").get<std::vector<double>>();
  e.cls.tag = tag_from_name(j.at("class").get<std::string>());
  e.cls.index = detail::argmax_index(e.sides);
  if (!j.at("radius").is_null()) e.radius = j.at("radius").get<double>();
  if (!j.at("center").is_null())
    e.center = HPoint{j.at("center")[0].get<double>(),
                      j.at("center")[1].get<double>(), e.model};
  for (const auto& v : j.at("vertices"))
    e.vertices.push_back({v[0].get<double>(), v[1].get<double>(), e.model});
  return e;
}

namespace {

struct Canvas {
  std::ostringstream s;
  Canvas() {
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"800\" viewBox=\"0 0 800 800\">\n";
  }
  std::string finish() {
    s << "</svg>\n";
    return s.str();
  }
};

struct ScreenMap {
  double scale, ox, oy;  // X = ox + scale*x, Y = oy - scale*y
  double X(double x) const { return ox + scale * x; }
  double Y(double y) const { return oy - scale * y; }
};

void edge_arc(Canvas& c, const ScreenMap& m, double x1, double y1, double x2,
              double y2, double cx, double cy, bool straight) {
  if (straight) {
    c.s << "  <path d=\"M " << m.X(x1) << ' ' << m.Y(y1) << " L " << m.X(x2)
        << ' ' << m.Y(y2) << "\" fill=\"none\" stroke=\"black\" "
        << "stroke-width=\"2\"/>\n";
    return;
  }
  const double rho =
      m.scale * std::hypot(x1 - cx, y1 - cy);
  // minor arc; sweep decided in screen coordinates (y points down)
  const double a1 = std::atan2(m.Y(y1) - m.Y(cy), m.X(x1) - m.X(cx));
  const double a2 = std::atan2(m.Y(y2) - m.Y(cy), m.X(x2) - m.X(cx));
  double da = a2 - a1;
  while (da > kPi) da -= 2.0 * kPi;
  while (da < -kPi) da += 2.0 * kPi;
  const int sweep = da > 0.0 ? 1 : 0;
  c.s << "  <path d=\"M " << m.X(x1) << ' ' << m.Y(y1) << " A " << rho << ' '
      << rho << " 0 0 " << sweep << ' ' << m.X(x2) << ' ' << m.Y(y2)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
}

std::string svg_disk(const Embedding& e) {
  Canvas c;
  const ScreenMap m{380.0, 400.0, 400.0};
  c.s << "  <circle cx=\"400\" cy=\"400\" r=\"380\" fill=\"none\" "
         "stroke=\"gray\" stroke-width=\"1\"/>\n";
  const std::size_t n = e.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = e.vertices[i];
    const auto& q = e.vertices[(i + 1) % n];
    // circle through p, q orthogonal to the unit circle:
    // 2 p.c = 1 + |p|^2 and likewise for q
    const double det = 4.0 * (p.x * q.y - p.y * q.x);
    if (std::abs(det) < 1e-12) {
      edge_arc(c, m, p.x, p.y, q.x, q.y, 0, 0, true);
      continue;
    }
    const double bp = 1.0 + p.x * p.x + p.y * p.y;
    const double bq = 1.0 + q.x * q.x + q.y * q.y;
    const double cx = (bp * 2.0 * q.y - bq * 2.0 * p.y) / det;
    const double cy = (2.0 * p.x * bq - 2.0 * q.x * bp) / det;
    edge_arc(c, m, p.x, p.y, q.x, q.y, cx, cy, false);
  }
  return c.finish();
}

std::string svg_uhp(const Embedding& e) {
  // bounding box: vertices, arc crowns, real axis, horocycle line
  double xmin = 0.0, xmax = 0.0, ymax = 1.1;
  for (const auto& v : e.vertices) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymax = std::max(ymax, v.y);
  }
  const std::size_t n = e.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = e.vertices[i];
    const auto& q = e.vertices[(i + 1) % n];
    if (std::abs(p.x - q.x) > 1e-12) {
      const double cx = (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) /
                        (2.0 * (q.x - p.x));
      ymax = std::max(ymax, std::hypot(p.x - cx, p.y));
    }
  }
  const double w = std::max(xmax - xmin, 1e-6);
  const double h = ymax;
  const double scale = 800.0 / (1.16 * std::max(w, h));
  const ScreenMap m{scale, 400.0 - scale * 0.5 * (xmin + xmax),
                    scale * 1.08 * h};

  Canvas c;
  // boundary of the model and, for horocyclic data, the horocycle y=1
  c.s << "  <path d=\"M 0 " << m.Y(0.0) << " L 800 " << m.Y(0.0)
      << "\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\"/>\n";
  if (e.cls.tag == RegionTag::Horocyclic)
    c.s << "  <path d=\"M 0 " << m.Y(1.0) << " L 800 " << m.Y(1.0)
        << "\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\" "
           "stroke-dasharray=\"6 4\"/>\n";

  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = e.vertices[i];
    const auto& q = e.vertices[(i + 1) % n];
    if (std::abs(p.x - q.x) <= 1e-12) {
      edge_arc(c, m, p.x, p.y, q.x, q.y, 0, 0, true);
      continue;
    }
    const double cx = (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) /
                      (2.0 * (q.x - p.x));
    edge_arc(c, m, p.x, p.y, q.x, q.y, cx, 0.0, false);
  }
  return c.finish();
}

}  // namespace

std::string emit_svg(const Embedding& e) {
  return e.model == Model::Disk ? svg_disk(e) : svg_uhp(e);
}

}  // namespace hypcyc
