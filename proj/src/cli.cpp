#include "hypcyc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypcyc/angles.hpp"
#include "hypcyc/embed.hpp"
#include "hypcyc/kernel.hpp"
#include "hypcyc/radius.hpp"
#include "hypcyc/regions.hpp"

namespace hypcyc::cli {

namespace {

std::string fmt15(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string join15(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += fmt15(v[i]);
  }
  return s;
}

std::vector<double> parse_sides(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(',', pos);
    const std::string tok =
        text.substr(pos, next == std::string::npos ? next : next - pos);
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed side list: '" + text + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument("malformed side list: '" + text + "'");
    out.push_back(v);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string branch_name(RadiusBranch b) {
  switch (b) {
    case RadiusBranch::CenteredSum: return "centered-sum";
    case RadiusBranch::NonCenteredBalance: return "noncentered-balance";
    case RadiusBranch::BoundaryExact: return "boundary-exact";
  }
  return "unknown";
}

void print_class_line(std::ostream& out, const PolygonClass& c) {
  out << to_string(c.tag);
  if (c.tag == RegionTag::Horocyclic || c.tag == RegionTag::NonCentered ||
      c.tag == RegionTag::BoundaryCentered)
    out << " (side index " << c.index << ")";
  out << '\n';
}

// Central FD cross-check of the analytic jacobian; returns the largest
// relative deviation (with a 1e-8 absolute floor).
double jacobian_fd_error(const SideLengths& d, double R, double tol) {
  const Jacobian jac = jacobian(d, R, tol);
  const std::size_t n = d.size();
  const double h = 1e-5;
  double worst = 0.0;
  const auto rel = [](double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-8});
  };
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> up = d.values(), dn = d.values();
    up[j] += h;
    dn[j] -= h;
    const SideLengths du(up), dd(dn);
    const double fdJ = (radius(du, tol).J - radius(dd, tol).J) / (2.0 * h);
    worst = std::max(worst, rel(jac.dJ[j], fdJ));
    const AngleData au = angles(du, tol), ad = angles(dd, tol);
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(
          worst, rel(jac.dAlpha[i][j], (au.alpha[i] - ad.alpha[i]) / (2 * h)));
      worst = std::max(
          worst, rel(jac.dBeta[i][j], (au.beta[i] - ad.beta[i]) / (2 * h)));
      worst =
          std::max(worst, rel(jac.dNu[i][j], (au.nu[i] - ad.nu[i]) / (2 * h)));
    }
    const double fdD = (defect(du, R, tol) - defect(dd, R, tol)) / (2.0 * h);
    worst = std::max(worst, rel(jac.dDefect[j], fdD));
  }
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"cyclic hyperbolic polygons: classification, circumradius, "
               "angles, defects, embeddings"};
  app.require_subcommand(1);

  std::string sides_text;
  double tol = 1e-12;
  bool tol_given = false;
  if (const char* env = std::getenv("HYPCYC_TOL")) {
    try {
      tol = std::stod(env);
      tol_given = true;
    } catch (const std::exception&) {
      err << "invalid HYPCYC_TOL value\n";
      return 1;
    }
  }
  app.add_option("--tol", tol, "classification tolerance")
      ->check(CLI::Range(1e-15, 1e-6));

  auto* c_classify = app.add_subcommand("classify", "region of a tuple");
  c_classify->add_option("--sides", sides_text)->required();

  auto* c_radius = app.add_subcommand("radius", "circumradius");
  c_radius->add_option("--sides", sides_text)->required();
  std::string method = "auto";
  c_radius->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "closed", "bisect"}));

  auto* c_angles = app.add_subcommand("angles", "central/base/vertex angles");
  c_angles->add_option("--sides", sides_text)->required();

  double R = 0.0;
  auto* c_defect = app.add_subcommand("defect", "radius-R defect");
  c_defect->add_option("--sides", sides_text)->required();
  c_defect->add_option("--R", R, "vertex disk radius")->required();

  auto* c_jac = app.add_subcommand("jacobian", "analytic derivatives");
  c_jac->add_option("--sides", sides_text)->required();
  c_jac->add_option("--R", R)->required();
  bool check_fd = false;
  c_jac->add_flag("--check-fd", check_fd, "verify against finite differences");

  auto* c_embed = app.add_subcommand("embed", "vertex coordinates");
  c_embed->add_option("--sides", sides_text)->required();
  std::string model = "disk", format = "json";
  c_embed->add_option("--model", model)->check(CLI::IsMember({"disk", "uhp"}));
  c_embed->add_option("--format", format)
      ->check(CLI::IsMember({"json", "svg"}));

  auto* c_bounds = app.add_subcommand("bounds", "defect bounds");
  auto* c_horo = c_bounds->add_subcommand("horocyclic",
                                          "horocyclic defect lower bound");
  std::string lower_text;
  c_horo->add_option("--lower", lower_text)->required();
  c_horo->add_option("--R", R);
  c_bounds->require_subcommand(1);

  auto* c_sweep = app.add_subcommand("sweep", "vary one side over a range");
  std::string template_text;
  std::size_t vary = 0;
  double from = 0.0, to = 0.0;
  int steps = 0;
  c_sweep->add_option("--template", template_text)->required();
  c_sweep->add_option("--vary", vary)->required();
  c_sweep->add_option("--from", from)->required();
  c_sweep->add_option("--to", to)->required();
  c_sweep->add_option("--steps", steps)->required()->check(CLI::PositiveNumber);
  c_sweep->add_option("--R", R);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 1;
  }
  (void)tol_given;

  try {
    if (*c_classify) {
      const SideLengths d(parse_sides(sides_text));
      const PolygonClass cls = classify(d, tol);
      print_class_line(out, cls);
      return cls.tag == RegionTag::NotRealizable ? 2 : 0;
    }

    if (*c_radius) {
      const SideLengths d(parse_sides(sides_text));
      const std::size_t n = d.size();
      const bool use_closed =
          method == "closed" || (method == "auto" && (n == 3 || n == 4));
      if (method == "closed" && n != 3 && n != 4) {
        err << "--method closed is only available for n = 3 or 4\n";
        return 1;
      }
      if (use_closed) {
        const double J =
            n == 3 ? radius_closed_tri(d[0], d[1], d[2])
                   : radius_closed_quad(d[0], d[1], d[2], d[3]);
        out << "J = " << fmt15(J) << "\nbranch = closed-form\n";
      } else {
        const RadiusResult r = radius(d, tol);
        out << "J = " << fmt15(r.J) << "\nbranch = "
            << branch_name(r.equation_used)
            << "\nresidual = " << fmt15(r.residual)
            << "\niterations = " << r.iterations << '\n';
      }
      return 0;
    }

    if (*c_angles) {
      const SideLengths d(parse_sides(sides_text));
      const AngleData a = angles(d, tol);
      out << "class = " << to_string(a.cls.tag) << '\n';
      out << "alpha = " << join15(a.alpha) << '\n';
      out << "beta = " << join15(a.beta) << '\n';
      out << "nu = " << join15(a.nu) << '\n';
      return 0;
    }

    if (*c_defect) {
      const SideLengths d(parse_sides(sides_text));
      out << "D_R = " << fmt15(defect(d, R, tol)) << '\n';
      return 0;
    }

    if (*c_jac) {
      const SideLengths d(parse_sides(sides_text));
      const Jacobian jac = jacobian(d, R, tol);
      out << "dJ = " << join15(jac.dJ) << '\n';
      for (std::size_t i = 0; i < d.size(); ++i)
        out << "dAlpha[" << i << "] = " << join15(jac.dAlpha[i]) << '\n';
      for (std::size_t i = 0; i < d.size(); ++i)
        out << "dBeta[" << i << "] = " << join15(jac.dBeta[i]) << '\n';
      for (std::size_t i = 0; i < d.size(); ++i)
        out << "dNu[" << i << "] = " << join15(jac.dNu[i]) << '\n';
      out << "dDefect = " << join15(jac.dDefect) << '\n';
      if (jac.boundary) {
        out << "boundary side = " << jac.boundary->side << '\n';
        out << "dAlpha[" << jac.boundary->side
            << "] from-noncentered = " << join15(jac.boundary->alpha_from_noncentered)
            << '\n';
        out << "dBeta[" << jac.boundary->side
            << "] from-noncentered = " << join15(jac.boundary->beta_from_noncentered)
            << '\n';
      }
      if (check_fd) {
        if (jac.boundary) {
          err << "--check-fd needs an interior point\n";
          return 1;
        }
        const double worst = jacobian_fd_error(d, R, tol);
        out << "fd max relative error = " << fmt15(worst) << '\n';
        if (worst > 1e-5) {
          out << "fd-check FAIL\n";
          return 2;
        }
        out << "fd-check ok\n";
      }
      return 0;
    }

    if (*c_embed) {
      const SideLengths d(parse_sides(sides_text));
      const PolygonClass cls = classify(d, tol);
      Embedding e;
      if (cls.tag == RegionTag::Horocyclic) {
        if (model != "uhp") {
          err << "horocyclic polygons embed in the upper half-plane; "
                 "use --model uhp\n";
          return 1;
        }
        e = embed_horocyclic(detail::cyclic_rest(d.values(), cls.index));
      } else {
        e = embed_cyclic(d, model == "disk" ? Model::Disk
                                            : Model::UpperHalfPlane,
                         tol);
      }
      out << emit(e, format == "json" ? OutputFormat::Json : OutputFormat::Svg);
      if (format == "json") out << '\n';
      return 0;
    }

    if (*c_bounds) {
      out << "bound = "
          << fmt15(defect_lower_bound_horocyclic(parse_sides(lower_text), R))
          << '\n';
      return 0;
    }

    if (*c_sweep) {
      std::vector<double> base = parse_sides(template_text);
      if (vary >= base.size()) {
        err << "--vary index out of range\n";
        return 1;
      }
      out << "# d[" << vary << "]\tclass\tJ\tdefect(R=" << fmt15(R) << ")\n";
      for (int k = 0; k <= steps; ++k) {
        const double v = from + (to - from) * double(k) / double(steps);
        base[vary] = v;
        out << fmt15(v) << '\t';
        SideLengths d(base);
        const PolygonClass cls = classify(d, tol);
        out << to_string(cls.tag) << '\t';
        if (cls.tag == RegionTag::NotRealizable) {
          out << "-\t-\n";
        } else if (cls.tag == RegionTag::Horocyclic) {
          out << "inf\t" << fmt15(defect(d, R, tol)) << '\n';
        } else {
          out << fmt15(radius(d, tol).J) << '\t' << fmt15(defect(d, R, tol))
              << '\n';
        }
      }
      return 0;
    }
  } catch (const std::domain_error& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return 1;
  }
  err << "no subcommand\n";
  return 1;
}

}  // namespace hypcyc::cli
