// Command-line front end: coordinate conversions, volume queries,
// verification suites, and plot-data emission.

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idealtetra/errors.hpp"
#include "idealtetra/exterior.hpp"
#include "idealtetra/seidel.hpp"
#include "idealtetra/sweep.hpp"
#include "idealtetra/tetra.hpp"
#include "idealtetra/tolerances.hpp"
#include "idealtetra/verify.hpp"

namespace {

using namespace idealtetra;

// 15 significant digits; enough for reproducible golden files while staying
// byte-stable across platforms.
std::string fmt15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  if (std::strcmp(buf, "-0") == 0) return "0";
  return buf;
}

std::vector<double> parse_reals(const std::string& text, size_t expected,
                                const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      double v = std::stod(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorCode::DomainError,
           std::string(what) + ": could not parse '" + item + "'");
    }
  }
  if (out.size() != expected) {
    fail(ErrorCode::DomainError, std::string(what) + ": expected " +
                                     std::to_string(expected) +
                                     " comma-separated reals");
  }
  return out;
}

struct VolumeRecord {
  TriangleCoords rst;
  PlaneCoords cd;
  SeidelCoords sc;
  std::optional<DihedralAngles> angles;
  std::optional<double> vol;

  VolumeRecord(TriangleCoords r, PlaneCoords c, SeidelCoords s)
      : rst(r), cd(c), sc(s) {}
};

VolumeRecord record_from_canonical(const TriangleCoords& canonical,
                                   bool with_volume) {
  VolumeRecord rec{canonical, delta_to_plane(canonical),
                   seidel_forward(canonical)};
  double mn = std::min({canonical.r(), canonical.s(), canonical.t()});
  // angles are undefined at the vertices of the moduli triangle
  if (mn > tolerances().arithmetic) {
    rec.angles = angles_from_coords(canonical);
  }
  if (with_volume) rec.vol = volume(rec.sc);
  return rec;
}

void print_record(const VolumeRecord& rec, OutputFormat format,
                  bool with_volume) {
  std::vector<std::pair<std::string, std::optional<double>>> fields = {
      {"r", rec.rst.r()},       {"s", rec.rst.s()},
      {"t", rec.rst.t()},       {"c", rec.cd.c()},
      {"d", rec.cd.d()},        {"alpha", rec.sc.alpha()},
      {"omega", rec.sc.omega()}};
  if (with_volume) {
    fields.emplace_back(
        "theta1", rec.angles ? std::optional<double>(rec.angles->theta1())
                             : std::nullopt);
    fields.emplace_back(
        "theta2", rec.angles ? std::optional<double>(rec.angles->theta2())
                             : std::nullopt);
    fields.emplace_back(
        "theta3", rec.angles ? std::optional<double>(rec.angles->theta3())
                             : std::nullopt);
    fields.emplace_back("volume", rec.vol);
  }
  if (format == OutputFormat::Csv) {
    for (size_t i = 0; i < fields.size(); ++i) {
      std::cout << (i ? "," : "") << fields[i].first;
    }
    std::cout << "\n";
    for (size_t i = 0; i < fields.size(); ++i) {
      std::cout << (i ? "," : "");
      if (fields[i].second) std::cout << fmt15(*fields[i].second);
    }
    std::cout << "\n";
  } else {
    std::cout << "{";
    for (size_t i = 0; i < fields.size(); ++i) {
      std::cout << (i ? "," : "") << "\"" << fields[i].first << "\":";
      if (fields[i].second) {
        std::cout << fmt15(*fields[i].second);
      } else {
        std::cout << "null";
      }
    }
    std::cout << "}\n";
  }
}

struct InputFlags {
  std::string rst;
  std::string seidel;
  std::string vertices;
};

VolumeRecord record_from_input(const InputFlags& in, bool with_volume) {
  int given = (!in.rst.empty()) + (!in.seidel.empty()) + (!in.vertices.empty());
  if (given != 1) {
    fail(ErrorCode::DomainError,
         "provide exactly one of --rst, --seidel, --vertices");
  }
  if (!in.rst.empty()) {
    auto v = parse_reals(in.rst, 3, "--rst");
    return record_from_canonical(canonicalize({v[0], v[1], v[2]}),
                                 with_volume);
  }
  if (!in.seidel.empty()) {
    auto v = parse_reals(in.seidel, 2, "--seidel");
    SeidelCoords sc{v[0], v[1]};
    if (!region_contains(sc)) {
      fail(ErrorCode::OutsideRegion, "point not in the coordinate region");
    }
    return record_from_canonical(plane_to_delta(seidel_invert(sc)),
                                 with_volume);
  }
  auto v = parse_reals(in.vertices, 16, "--vertices");
  LabelledTetrahedron t;
  for (size_t i = 0; i < 4; ++i) {
    t.vertices[i] = MinkowskiVector(v[4 * i], v[4 * i + 1], v[4 * i + 2],
                                    v[4 * i + 3]);
  }
  return record_from_canonical(canonicalize(doubly_stochastic_coords(t)),
                               with_volume);
}

void print_sweep(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  const char* coord =
      spec.fixed_axis == SweepAxis::Omega ? "alpha" : "omega";
  if (spec.output_format == OutputFormat::Csv) {
    std::cout << coord << ",volume\n";
    for (const auto& row : rows) {
      std::cout << fmt15(row.coordinate) << "," << fmt15(row.volume) << "\n";
    }
  } else {
    std::cout << "[";
    for (size_t i = 0; i < rows.size(); ++i) {
      std::cout << (i ? "," : "") << "{\"" << coord
                << "\":" << fmt15(rows[i].coordinate)
                << ",\"volume\":" << fmt15(rows[i].volume) << "}";
    }
    std::cout << "]\n";
  }
}

void print_extremal(const ExtremalScanResult& scan, OutputFormat format) {
  std::vector<std::pair<std::string, double>> fields = {
      {"r_per", scan.argmin_per.r()}, {"s_per", scan.argmin_per.s()},
      {"t_per", scan.argmin_per.t()}, {"min_per", scan.min_per},
      {"r_det", scan.argmin_det.r()}, {"s_det", scan.argmin_det.s()},
      {"t_det", scan.argmin_det.t()}, {"min_det", scan.min_det}};
  if (format == OutputFormat::Csv) {
    for (size_t i = 0; i < fields.size(); ++i) {
      std::cout << (i ? "," : "") << fields[i].first;
    }
    std::cout << "\n";
    for (size_t i = 0; i < fields.size(); ++i) {
      std::cout << (i ? "," : "") << fmt15(fields[i].second);
    }
    std::cout << "\n";
  } else {
    std::cout << "{";
    for (size_t i = 0; i < fields.size(); ++i) {
      std::cout << (i ? "," : "") << "\"" << fields[i].first
                << "\":" << fmt15(fields[i].second);
    }
    std::cout << "}\n";
  }
}

int run_verify(const std::string& suite, std::uint64_t seed) {
  std::vector<PropertyResult> results;
  if (suite == "hodge") {
    results = verify_hodge(seed);
  } else if (suite == "gram") {
    results = verify_gram(seed);
  } else if (suite == "lobachevsky") {
    results = verify_lobachevsky(seed);
  } else if (suite == "roundtrip") {
    results = verify_roundtrip(seed);
  } else if (suite == "monotonicity") {
    results = verify_monotonicity(seed);
  } else if (suite == "extremal") {
    results = verify_extremal(seed);
  } else if (suite == "all") {
    results = verify_all(seed);
  } else {
    fail(ErrorCode::DomainError, "unknown suite '" + suite + "'");
  }
  int failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    std::printf("%-36s %s  cases=%-7lld worst=%s (bound %s)\n",
                r.name.c_str(), r.pass ? "PASS" : "FAIL", r.cases,
                fmt15(r.worst).c_str(), fmt15(r.bound).c_str());
  }
  std::printf("verify %s: %zu/%zu properties passed (seed %llu)\n",
              suite.c_str(), results.size() - static_cast<size_t>(failed),
              results.size(), static_cast<unsigned long long>(seed));
  return failed == 0 ? 0 : 1;
}

OutputFormat parse_format(const std::string& format) {
  if (format == "csv") return OutputFormat::Csv;
  if (format == "json") return OutputFormat::Json;
  fail(ErrorCode::DomainError, "format must be csv or json");
}

SweepSpec parse_sweep_flags(const std::string& fixed, int samples,
                            const std::string& format) {
  auto eq = fixed.find('=');
  if (eq == std::string::npos) {
    fail(ErrorCode::DomainError,
         "--fixed expects alpha=<value> or omega=<value>");
  }
  std::string axis = fixed.substr(0, eq);
  SweepSpec spec;
  if (axis == "alpha") {
    spec.fixed_axis = SweepAxis::Alpha;
  } else if (axis == "omega") {
    spec.fixed_axis = SweepAxis::Omega;
  } else {
    fail(ErrorCode::DomainError, "fixed axis must be alpha or omega");
  }
  spec.fixed_value = parse_reals(fixed.substr(eq + 1), 1, "--fixed")[0];
  spec.sample_count = samples;
  spec.output_format = parse_format(format);
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ideal hyperbolic tetrahedra in determinant/permanent "
               "coordinates"};
  app.require_subcommand(1);

  double tol_override = 0.0;
  app.add_option("--tol", tol_override,
                 "classification tolerance override (also IDEALTETRA_TOL)");

  InputFlags vol_in, conv_in;
  std::string vol_format = "csv", conv_format = "csv";
  auto* vol = app.add_subcommand(
      "volume", "coordinates, dihedral angles and volume of one tetrahedron");
  vol->add_option("--rst", vol_in.rst, "triangle coordinates r,s,t");
  vol->add_option("--seidel", vol_in.seidel, "coordinates alpha,omega");
  vol->add_option("--vertices", vol_in.vertices,
                  "16 comma-separated reals, four vertex representatives");
  vol->add_option("--format", vol_format, "csv or json");

  auto* conv = app.add_subcommand("convert",
                                  "coordinate conversions only, no volume");
  conv->add_option("--rst", conv_in.rst, "triangle coordinates r,s,t");
  conv->add_option("--seidel", conv_in.seidel, "coordinates alpha,omega");
  conv->add_option("--vertices", conv_in.vertices,
                   "16 comma-separated reals, four vertex representatives");
  conv->add_option("--format", conv_format, "csv or json");

  std::string sweep_fixed, sweep_format = "csv";
  int sweep_samples = 100;
  auto* sweep = app.add_subcommand(
      "sweep", "volume along a fixed-coordinate line through the region");
  sweep->add_option("--fixed", sweep_fixed, "alpha=<value> or omega=<value>")
      ->required();
  sweep->add_option("--samples", sweep_samples, "number of rows (>= 2)");
  sweep->add_option("--format", sweep_format, "csv or json");

  std::string verify_suite = "all";
  std::uint64_t verify_seed = 42;
  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("suite", verify_suite,
                     "hodge|gram|lobachevsky|roundtrip|monotonicity|"
                     "extremal|all");
  verify->add_option("--seed", verify_seed, "random seed");

  int extremal_grid = 400;
  std::string extremal_format = "csv";
  auto* extremal = app.add_subcommand(
      "extremal", "minimise permanent and determinant over the simplex");
  extremal->add_option("--grid", extremal_grid, "barycentric resolution");
  extremal->add_option("--format", extremal_format, "csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (tol_override != 0.0) {
      if (tol_override <= 0.0 || tol_override >= 1.0) {
        fail(ErrorCode::DomainError, "--tol must be a real in (0, 1)");
      }
      tolerances().classification = tol_override;
    }
    if (vol->parsed()) {
      print_record(record_from_input(vol_in, true), parse_format(vol_format),
                   true);
    } else if (conv->parsed()) {
      print_record(record_from_input(conv_in, false),
                   parse_format(conv_format), false);
    } else if (sweep->parsed()) {
      SweepSpec spec =
          parse_sweep_flags(sweep_fixed, sweep_samples, sweep_format);
      print_sweep(spec, run_sweep(spec));
    } else if (verify->parsed()) {
      return run_verify(verify_suite, verify_seed);
    } else if (extremal->parsed()) {
      print_extremal(extremal_scan(extremal_grid),
                     parse_format(extremal_format));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_numerical_fault(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
