// Acceptance suite: end-to-end checks of the library's headline results,
// one pass/fail line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "idealtetra/exterior.hpp"
#include "idealtetra/lobachevsky.hpp"
#include "idealtetra/seidel.hpp"
#include "idealtetra/sweep.hpp"
#include "idealtetra/tetra.hpp"

using namespace idealtetra;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kThird = 1.0 / 3.0;
constexpr double kRegAlpha = -1.0 / 27.0;

using Rng = std::mt19937_64;
using Clock = std::chrono::steady_clock;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

TriangleCoords random_interior_delta(Rng& rng, double margin) {
  for (;;) {
    double r = uniform(rng, 0.0, 1.0);
    double s = uniform(rng, 0.0, 1.0);
    if (r + s > 1.0) {
      r = 1.0 - r;
      s = 1.0 - s;
    }
    double t = 1.0 - r - s;
    double mn = std::min({r, s, t});
    double mx = std::max({r, s, t});
    if (mn < margin || mx > (1.0 - margin) / 2.0) continue;
    return {r, s, t};
  }
}

SeidelCoords random_interior_region(Rng& rng, double margin) {
  for (;;) {
    double c = uniform(rng, 0.0, 0.25);
    double d = uniform(rng, 0.0, kSqrt3 / 3.0);
    if (c < margin) continue;
    if (d < kSqrt3 / 3.0 * c + margin) continue;
    if (d > -kSqrt3 * c + kSqrt3 / 3.0 - margin) continue;
    return seidel_forward(plane_to_delta(PlaneCoords{c, d}));
  }
}

std::vector<TriangleCoords> delta1_interior_grid(int n) {
  const double A[3] = {kThird, kThird, kThird};
  const double B[3] = {0.25, 0.25, 0.5};
  const double C[3] = {0.0, 0.5, 0.5};
  std::vector<TriangleCoords> out;
  for (int i = 1; i <= n - 2; ++i) {
    for (int j = 1; j <= n - 1 - i; ++j) {
      int k = n - i - j;
      out.emplace_back((i * A[0] + j * B[0] + k * C[0]) / n,
                       (i * A[1] + j * B[1] + k * C[1]) / n,
                       (i * A[2] + j * B[2] + k * C[2]) / n);
    }
  }
  return out;
}

struct Criterion {
  int id;
  std::string label;
  bool pass;
  std::string detail;
};

std::vector<Criterion> results;

void report(int id, const std::string& label, bool pass,
            const std::string& detail) {
  results.push_back({id, label, pass, detail});
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

void criterion_1_regular_volume() {
  auto start = Clock::now();
  double oracle = 3.0 * lobachevsky_quadrature(kPi / 3.0, 1e-13);
  double vmax = volume({kRegAlpha, kThird});
  double dev = std::fabs(vmax - oracle);

  // maximality over a dense grid of the region
  RegionS b;
  double excess = -HUGE_VAL;
  const int nw = 100, na = 100;
  for (int i = 0; i <= nw; ++i) {
    double w = kThird + (0.5 - kThird) * i / nw;
    double lo = b.f1(w);
    double hi = (w <= RegionS::kSquareOmega) ? b.f2(w) : 0.0;
    for (int j = 0; j <= na; ++j) {
      double a = lo + (hi - lo) * j / na;
      excess = std::max(excess, volume({a, w}) - vmax);
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool pass = dev <= 1e-10 && excess <= 1e-12 && secs < 1.0;
  report(1, "regular tetrahedron volume and maximality", pass,
         "|vol - 3L(pi/3)| = " + fmt(dev) + ", grid excess = " + fmt(excess) +
             ", " + fmt(secs) + " s");
}

void criterion_2_degenerate_vanishing() {
  double worst = 0.0;
  const int n = 100;
  for (int i = 0; i < n; ++i) {
    double w = 0.375 + (0.5 - 0.375) * i / (n - 1);
    worst = std::max(worst, std::fabs(volume({0.0, w})));
  }
  report(2, "degenerate tetrahedra have vanishing volume", worst <= 1e-11,
         "max |vol| on the curve = " + fmt(worst) + " over " +
             std::to_string(n) + " points");
}

void criterion_3_bijectivity() {
  auto start = Clock::now();
  auto grid = delta1_interior_grid(23);
  double worst_rt = 0.0, worst_cubic = 0.0;
  for (const auto& x : grid) {
    SeidelCoords sc = seidel_forward(x);
    TriangleCoords back = canonicalize(plane_to_delta(seidel_invert(sc)));
    TriangleCoords cx = canonicalize(x);
    worst_rt = std::max({worst_rt, std::fabs(back.r() - cx.r()),
                         std::fabs(back.s() - cx.s()),
                         std::fabs(back.t() - cx.t())});
    TriangleCoords roots = seidel_invert_cubic(sc);
    worst_cubic = std::max({worst_cubic, std::fabs(roots.r() - back.r()),
                            std::fabs(roots.s() - back.s()),
                            std::fabs(roots.t() - back.t())});
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool pass = worst_rt <= 1e-9 && worst_cubic <= 1e-9 && secs < 5.0;
  report(3, "coordinate bijectivity with cubic oracle", pass,
         "round trip = " + fmt(worst_rt) + ", cubic = " + fmt(worst_cubic) +
             " over " + std::to_string(grid.size()) + " grid points, " +
             fmt(secs) + " s");
}

void criterion_4_dihedral_consistency() {
  auto start = Clock::now();
  Rng rng(42);
  double worst = 0.0;
  const int n = 100;
  for (int i = 0; i < n; ++i) {
    TriangleCoords x = random_interior_delta(rng, 0.02);
    LabelledTetrahedron t = synthesize(x);
    const auto& v = t.vertices;
    DihedralAngles a = angles_from_coords(x);
    worst = std::max(
        {worst,
         std::fabs(dihedral_angle(v[0], v[1], v[2], v[3]) - a.theta1()),
         std::fabs(dihedral_angle(v[0], v[2], v[1], v[3]) - a.theta2()),
         std::fabs(dihedral_angle(v[0], v[3], v[1], v[2]) - a.theta3())});
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool pass = worst <= 1e-9 && secs < 5.0;
  report(4, "dihedral angles agree across both formulas", pass,
         "worst deviation = " + fmt(worst) + " over " + std::to_string(n) +
             " tetrahedra x 3 edge classes, " + fmt(secs) + " s");
}

void criterion_5_hodge_identities() {
  Rng rng(42);
  auto random_mv = [&rng](int grade) {
    MultiVector m(grade);
    for (int i = 0; i < m.size(); ++i) m[i] = uniform(rng, -1.0, 1.0);
    double norm = m.euclidean_norm();
    return norm > 1e-3 ? m * (1.0 / norm) : m;
  };
  const int n = 1000;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    int k = i % 5;
    MultiVector a = random_mv(k);
    MultiVector b = random_mv(k);
    worst = std::max(worst, (wedge(a, hodge_star(b)) - wedge(b, hodge_star(a)))
                                .euclidean_norm());
  }
  for (int i = 0; i < n; ++i) {
    int k = i % 5;
    MultiVector a = random_mv(k);
    MultiVector b = random_mv(k);
    double lhs = induced_inner(a, b);
    double rhs = kSigma * hodge_star(wedge(a, hodge_star(b))).to_scalar();
    worst = std::max(worst, std::fabs(lhs - rhs));
  }
  for (int i = 0; i < n; ++i) {
    int k = i % 5;
    MultiVector a = random_mv(k);
    MultiVector b = random_mv(4 - k);
    double sign = (k * (4 - k)) % 2 == 0 ? 1.0 : -1.0;
    worst = std::max(worst, std::fabs(induced_inner(a, hodge_star(b)) -
                                      sign * induced_inner(hodge_star(a), b)));
  }
  for (int i = 0; i < n; ++i) {
    int k = i % 5;
    MultiVector a = random_mv(k);
    double sign = ((k * (4 - k)) % 2 == 0 ? 1.0 : -1.0) * kSigma;
    worst = std::max(worst,
                     (hodge_star(hodge_star(a)) - a * sign).euclidean_norm());
  }
  double basis_dev = 0.0;
  for (int g = 0; g <= 4; ++g) {
    for (int p = 0; p < MultiVector(g).size(); ++p) {
      MultiVector blade = MultiVector::basis_blade(g, p);
      double sign = ((g * (4 - g)) % 2 == 0 ? 1.0 : -1.0) * kSigma;
      basis_dev = std::max(basis_dev, (hodge_star(hodge_star(blade)) -
                                       blade * sign)
                                          .euclidean_norm());
    }
  }
  bool pass = worst <= 1e-12 && basis_dev == 0.0;
  report(5, "Hodge star identities", pass,
         "worst residual = " + fmt(worst) + " over 4x" + std::to_string(n) +
             " draws, double star on basis exact = " +
             (basis_dev == 0.0 ? "yes" : "no"));
}

void criterion_6_monotonicity() {
  auto start = Clock::now();
  Rng rng(42);
  const int n = 500;
  double sign_margin = -HUGE_VAL;  // max of d_alpha and -d_omega
  double fd_worst = 0.0;
  const double h = 1e-6;
  for (int i = 0; i < n; ++i) {
    SeidelCoords sc = random_interior_region(rng, 0.02);
    VolumeDerivatives vd = volume_derivatives(sc);
    sign_margin = std::max({sign_margin, vd.d_alpha, -vd.d_omega});
    double fd_alpha = (volume({sc.alpha() + h, sc.omega()}) -
                       volume({sc.alpha() - h, sc.omega()})) /
                      (2.0 * h);
    double fd_omega = (volume({sc.alpha(), sc.omega() + h}) -
                       volume({sc.alpha(), sc.omega() - h})) /
                      (2.0 * h);
    fd_worst = std::max(
        {fd_worst, std::fabs(fd_alpha - vd.d_alpha) / std::fabs(vd.d_alpha),
         std::fabs(fd_omega - vd.d_omega) / std::fabs(vd.d_omega)});
  }
  double chord_violation = -HUGE_VAL;
  const int chords = 20, samples = 200;
  for (int j = 1; j <= chords; ++j) {
    double w = kThird + (0.5 - kThird) * j / (chords + 1);
    auto rows = run_sweep({SweepAxis::Omega, w, samples, OutputFormat::Csv});
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
      chord_violation =
          std::max(chord_violation, rows[i + 1].volume - rows[i].volume);
    }
    double a = kRegAlpha - kRegAlpha * j / (chords + 1);
    rows = run_sweep({SweepAxis::Alpha, a, samples, OutputFormat::Csv});
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
      chord_violation =
          std::max(chord_violation, rows[i].volume - rows[i + 1].volume);
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool pass = sign_margin < 0.0 && fd_worst <= 1e-5 &&
              chord_violation <= -1e-12 && secs < 30.0;
  report(6, "volume monotone in determinant and permanent", pass,
         "sign margin = " + fmt(sign_margin) + ", fd rel = " + fmt(fd_worst) +
             ", chord violation = " + fmt(chord_violation) + ", " + fmt(secs) +
             " s");
}

void criterion_7_sweep_endpoints() {
  RegionS b;
  double f1_716 = b.f1(7.0 / 16.0);
  double expected = (14.0 - 5.0 * std::sqrt(10.0)) / 432.0;
  double dev_f1 = std::fabs(f1_716 - expected);

  auto [alo, ahi] = sweep_range(SweepAxis::Omega, 7.0 / 16.0);
  double dev_alpha =
      std::max(std::fabs(alo - expected), std::fabs(ahi - 0.0));

  auto [wlo, whi] = sweep_range(SweepAxis::Alpha, -1.0 / 54.0);
  double dev_omega = std::max(std::fabs(wlo - (6.0 - kSqrt3) / 12.0),
                              std::fabs(whi - 0.375));

  bool pass = dev_f1 <= 1e-12 && dev_alpha <= 1e-10 && dev_omega <= 1e-10;
  report(7, "sweep endpoints hit the boundary constants", pass,
         "f1(7/16) dev = " + fmt(dev_f1) + ", alpha span dev = " +
             fmt(dev_alpha) + ", omega span dev = " + fmt(dev_omega));
}

void criterion_8_extremal() {
  auto start = Clock::now();
  ExtremalScanResult scan = extremal_scan(400);
  double arg_dev = std::max({std::fabs(scan.argmin_per.r() - kThird),
                             std::fabs(scan.argmin_per.s() - kThird),
                             std::fabs(scan.argmin_per.t() - kThird),
                             std::fabs(scan.argmin_det.r() - kThird),
                             std::fabs(scan.argmin_det.s() - kThird),
                             std::fabs(scan.argmin_det.t() - kThird)});
  double val_dev = std::max(std::fabs(scan.min_per - 1.0 / 9.0),
                            std::fabs(scan.min_det + 1.0 / 27.0));
  double min_outside_det = HUGE_VAL;
  const int n = 400;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n - i; ++j) {
      double r = static_cast<double>(i) / n;
      double s = static_cast<double>(j) / n;
      double t = 1.0 - r - s;
      if (r <= s + t && s <= t + r && t <= r + s) continue;
      double det = -(r + s + t) * (-r + s + t) * (r - s + t) * (r + s - t);
      min_outside_det = std::min(min_outside_det, det);
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool pass = arg_dev <= 1e-4 && val_dev <= 1e-6 && min_outside_det >= 0.0 &&
              secs < 10.0;
  report(8, "permanent and determinant minimal at the regular point", pass,
         "argmin dev = " + fmt(arg_dev) + ", value dev = " + fmt(val_dev) +
             ", min outside det = " + fmt(min_outside_det) + ", " + fmt(secs) +
             " s");
}

void criterion_9_kprime() {
  double min_val = HUGE_VAL;
  double series_dev = 0.0;
  const int na = 200, nb = 200;
  for (int i = 1; i <= na; ++i) {
    double a = 1.0 + 99.0 * i / na;
    for (int j = 1; j <= nb; ++j) {
      double b = static_cast<double>(j) / (nb + 1);
      double closed = kprime(a, b);
      min_val = std::min(min_val, closed);
      series_dev =
          std::max(series_dev, std::fabs(closed - kprime_series(a, b)));
    }
  }
  bool pass = min_val > 0.0 && series_dev <= 1e-9;
  report(9, "positivity kernel k' on its domain", pass,
         "min k' = " + fmt(min_val) + ", series dev = " + fmt(series_dev) +
             " over " + std::to_string(na * nb) + " grid points");
}

void criterion_10_lobachevsky() {
  Rng rng(42);
  double worst_sym = 0.0;
  for (int i = 0; i < 10000; ++i) {
    double x = uniform(rng, -10.0, 10.0);
    worst_sym =
        std::max(worst_sym, std::fabs(lobachevsky(x) + lobachevsky(-x)));
    worst_sym = std::max(worst_sym,
                         std::fabs(lobachevsky(x + kPi) - lobachevsky(x)));
  }
  double worst_quad = 0.0;
  const int n = 1000;
  for (int i = 0; i <= n; ++i) {
    double x = kPi * i / n;
    worst_quad = std::max(
        worst_quad, std::fabs(lobachevsky(x) - lobachevsky_quadrature(x, 1e-13)));
  }
  bool pass = worst_sym <= 1e-12 && worst_quad <= 1e-11;
  report(10, "Lobachevsky symmetries and quadrature agreement", pass,
         "symmetry residual = " + fmt(worst_sym) + ", quadrature dev = " +
             fmt(worst_quad));
}

}  // namespace

int main() {
  auto start = Clock::now();
  criterion_1_regular_volume();
  criterion_2_degenerate_vanishing();
  criterion_3_bijectivity();
  criterion_4_dihedral_consistency();
  criterion_5_hodge_identities();
  criterion_6_monotonicity();
  criterion_7_sweep_endpoints();
  criterion_8_extremal();
  criterion_9_kprime();
  criterion_10_lobachevsky();

  int failed = 0;
  for (const auto& c : results) {
    if (!c.pass) ++failed;
    std::printf("criterion %2d [%s] %s (%s)\n", c.id,
                c.pass ? "PASS" : "FAIL", c.label.c_str(), c.detail.c_str());
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("acceptance: %zu/%zu criteria passed in %.1f s\n",
              results.size() - static_cast<size_t>(failed), results.size(),
              secs);
  return failed;
}
