#include "idealtetra/seidel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "idealtetra/errors.hpp"
#include "idealtetra/lobachevsky.hpp"

namespace idealtetra {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;

// Points with |alpha| below this are treated as degenerate (volume 0);
// the pipeline through the dihedral angles loses meaning on the curve
// alpha = 0 itself.
constexpr double kDegenerateAlpha = 1e-13;

// Switch-over ball around (-1/27, 1/3) where the closed-form inverse is
// 0/0; also its loss-of-precision band.
constexpr double kRegularBall = 1e-10;

double clamp_unit(double arg, double tol, ErrorCode code) {
  if (arg > 1.0 || arg < -1.0) {
    if (arg > 1.0 + tol || arg < -1.0 - tol) {
      fail(code, "arccos argument out of range");
    }
    return arg > 1.0 ? 1.0 : -1.0;
  }
  // Snap to the endpoint when rounding left the argument one step inside:
  // arccos amplifies an eps-sized gap into a sqrt(eps)-sized angle, which
  // would push boundary points of the region off their boundary curves.
  if (1.0 - std::fabs(arg) <= 1e-12) return arg > 0.0 ? 1.0 : -1.0;
  return arg;
}

double boundary_curve(double omega, double branch) {
  double u = 6.0 * omega - 2.0;
  if (u < 0.0) u = 0.0;  // domain rounding
  return -(branch * 2.0 * std::pow(u, 1.5) - 3.0 * u + 1.0) / 27.0;
}

// Bisection inverse of a strictly increasing function on [lo, hi].
template <typename F>
double invert_increasing(F&& f, double lo, double hi, double target) {
  double flo = f(lo);
  double fhi = f(hi);
  if (target <= flo) return lo;
  if (target >= fhi) return hi;
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool near_regular_corner(double alpha, double omega) {
  return std::hypot(alpha - RegionS::kRegularAlpha,
                    omega - RegionS::kRegularOmega) < kRegularBall;
}

double per_value(double r, double s, double t) {
  double q = r * r + s * s + t * t;
  return q * q;
}

double det_value(double r, double s, double t) {
  return -(r + s + t) * (-r + s + t) * (r - s + t) * (r + s - t);
}

}  // namespace

SeidelCoords::SeidelCoords(double alpha, double omega)
    : alpha_(alpha), omega_(omega) {
  if (!(std::isfinite(alpha) && std::isfinite(omega))) {
    fail(ErrorCode::OutsideRegion, "coordinates must be finite");
  }
  double slack = 1e-9;
  if (alpha < RegionS::kRegularAlpha - slack || alpha > 0.0 + slack ||
      omega < RegionS::kRegularOmega - slack ||
      omega > RegionS::kSegmentOmega + slack) {
    fail(ErrorCode::OutsideRegion,
         "outside the bounding box [-1/27, 0] x [1/3, 1/2]");
  }
}

double RegionS::f1(double omega) const {
  if (omega < kRegularOmega - 1e-9 || omega > kSegmentOmega + 1e-9) {
    fail(ErrorCode::DomainError, "f1 is defined on [1/3, 1/2]");
  }
  return boundary_curve(std::clamp(omega, kRegularOmega, kSegmentOmega), 1.0);
}

double RegionS::f2(double omega) const {
  if (omega < kRegularOmega - 1e-9 || omega > kSquareOmega + 1e-9) {
    fail(ErrorCode::DomainError, "f2 is defined on [1/3, 3/8]");
  }
  return boundary_curve(std::clamp(omega, kRegularOmega, kSquareOmega), -1.0);
}

double RegionS::f1_inverse(double alpha) const {
  if (alpha < kRegularAlpha - 1e-9 || alpha > 1e-9) {
    fail(ErrorCode::DomainError, "f1 ranges over [-1/27, 0]");
  }
  return invert_increasing([this](double y) { return f1(y); }, kRegularOmega,
                           kSegmentOmega, alpha);
}

double RegionS::f2_inverse(double alpha) const {
  if (alpha < kRegularAlpha - 1e-9 || alpha > 1e-9) {
    fail(ErrorCode::DomainError, "f2 ranges over [-1/27, 0]");
  }
  return invert_increasing([this](double y) { return f2(y); }, kRegularOmega,
                           kSquareOmega, alpha);
}

RegionS region_boundary() { return {}; }

bool region_contains(double alpha, double omega) {
  const double btol = tolerances().arithmetic;
  if (!(std::isfinite(alpha) && std::isfinite(omega))) return false;
  if (omega < RegionS::kRegularOmega - btol ||
      omega > RegionS::kSegmentOmega + btol) {
    return false;
  }
  if (alpha > btol) return false;
  RegionS b;
  double y = std::clamp(omega, RegionS::kRegularOmega, RegionS::kSegmentOmega);
  double lo = b.f1(y);
  double hi = (y <= RegionS::kSquareOmega) ? b.f2(y) : 0.0;
  return alpha >= lo - btol && alpha <= hi + btol;
}

bool region_contains(const SeidelCoords& sc) {
  return region_contains(sc.alpha(), sc.omega());
}

SeidelCoords seidel_forward(const TriangleCoords& coords) {
  double r = coords.r(), s = coords.s(), t = coords.t();
  return {det_value(r, s, t), r * r + s * s + t * t};
}

PlaneCoords seidel_invert(const SeidelCoords& sc) {
  if (!region_contains(sc)) {
    fail(ErrorCode::OutsideRegion, "point not in the coordinate region");
  }
  double alpha = sc.alpha(), omega = sc.omega();
  if (near_regular_corner(alpha, omega)) return {0.0, 0.0};
  double q = std::max(2.0 * omega - 2.0 / 3.0, 0.0);
  double den = 4.0 * kSqrt2 * std::pow(3.0 * omega - 1.0, 1.5);
  double arg = clamp_unit((-27.0 * alpha + 18.0 * omega - 7.0) / den, 1e-9,
                          ErrorCode::ComplexRoots);
  double kappa = std::acos(arg) / 3.0;
  double root = std::sqrt(q);
  return {root * std::sin(kappa), root * std::cos(kappa)};
}

TriangleCoords seidel_invert_cubic(const SeidelCoords& sc) {
  double alpha = sc.alpha(), omega = sc.omega();
  if (near_regular_corner(alpha, omega)) {
    return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  }
  // roots of w^3 - w^2 + c1 w + c0, depressed by w = x + 1/3
  double c1 = (1.0 - omega) / 2.0;
  double c0 = -(alpha - 2.0 * omega + 1.0) / 8.0;
  double a = c1 - 1.0 / 3.0;
  double b = c1 / 3.0 + c0 - 2.0 / 27.0;
  double disc = b * b / 4.0 + a * a * a / 27.0;  // <= 0 inside the region
  double scale = b * b / 4.0 + std::fabs(a * a * a) / 27.0;
  if (disc > 1e-9 * scale + 1e-300) {
    fail(ErrorCode::ComplexRoots,
         "cubic has complex roots; point not in the coordinate region");
  }
  if (-a < 1e-14) {
    return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  }
  double m = 2.0 * std::sqrt(-a / 3.0);
  double carg = clamp_unit(-3.0 * kSqrt3 * b / (2.0 * std::pow(-a, 1.5)), 1e-9,
                           ErrorCode::ComplexRoots);
  double phi = std::acos(carg) / 3.0;
  std::array<double, 3> w;
  for (int k = 0; k < 3; ++k) {
    w[static_cast<size_t>(k)] =
        m * std::cos(phi + 2.0 * k * kPi / 3.0) + 1.0 / 3.0;
  }
  std::sort(w.begin(), w.end());
  for (double& x : w) {
    if (x < 0.0) x = 0.0;  // boundary rounding
  }
  return {w[0], w[1], w[2]};
}

double volume_from_angles(const DihedralAngles& angles) {
  return lobachevsky(angles.theta1()) + lobachevsky(angles.theta2()) +
         lobachevsky(angles.theta3());
}

double volume(const SeidelCoords& sc) {
  if (!region_contains(sc)) {
    fail(ErrorCode::OutsideRegion, "point not in the coordinate region");
  }
  if (std::fabs(sc.alpha()) <= kDegenerateAlpha) return 0.0;
  TriangleCoords rst = plane_to_delta(seidel_invert(sc));
  return volume_from_angles(angles_from_coords(rst));
}

VolumeDerivatives volume_derivatives(const SeidelCoords& sc) {
  if (!region_contains(sc)) {
    fail(ErrorCode::OutsideRegion, "point not in the coordinate region");
  }
  double alpha = sc.alpha();
  if (-alpha <= kDegenerateAlpha) {
    fail(ErrorCode::BoundaryPoint, "derivatives singular on alpha = 0");
  }
  PlaneCoords cd = seidel_invert(sc);
  double c = cd.c(), d = cd.d();
  const double btol = 1e-9;
  if (c <= btol) {
    fail(ErrorCode::BoundaryPoint, "derivatives singular on the curve c = 0");
  }
  if (3.0 * d * d - c * c <= btol) {
    fail(ErrorCode::BoundaryPoint,
         "derivatives singular on the curve 3d^2 = c^2");
  }
  TriangleCoords rst = plane_to_delta(cd);
  double r = rst.r(), s = rst.s(), t = rst.t();

  double M = c * (3.0 * d - kSqrt3) *
             (21.0 * d * d + 4.0 * kSqrt3 * d + 9.0 * c * c - 2.0);
  double N = kSqrt3 * (-27.0 * c * c * c * c +
                       9.0 * c * c * (3.0 * d * d + kSqrt3 * d + 1.0) +
                       d * (18.0 * d * d * d + 9.0 * kSqrt3 * d * d -
                            9.0 * d - 2.0 * kSqrt3));
  double P = 2.0 * c * (kSqrt3 * d - 1.0);
  double Q = -3.0 * c * c + d * (3.0 * d + 2.0 * kSqrt3);

  double log_str2 = std::log(s * t / (r * r));
  double log_ts = std::log(t / s);
  double shared = c * (3.0 * d * d - c * c) * r * s * t;

  VolumeDerivatives out;
  out.d_alpha = kSqrt3 * (M * log_str2 + N * log_ts) /
                (648.0 * shared * std::sqrt(-alpha));
  out.d_omega =
      std::sqrt(-alpha) * (P * log_str2 + Q * log_ts) / (12.0 * shared);
  return out;
}

double kprime(double a, double b) {
  if (!(a > 1.0) || !(b > 0.0) || !(b < 1.0)) {
    fail(ErrorCode::DomainError, "kprime requires a > 1 and 0 < b < 1");
  }
  return (a + b) * (a - 1.0) * std::log(a + b) -
         a * (a + b - 1.0) * std::log(a);
}

double kprime_series(double a, double b, double abs_tol) {
  if (!(a > 1.0) || !(b > 0.0) || !(b < 1.0)) {
    fail(ErrorCode::DomainError, "kprime requires a > 1 and 0 < b < 1");
  }
  double prefactor = (a - 1.0) * (a + b - 1.0);
  double q1 = (a + b - 1.0) / (a + b);
  double q2 = (a - 1.0) / a;
  double p1 = 1.0, p2 = 1.0;  // q^(n-1)
  double acc = 0.0;
  for (long n = 1; n < 100000000L; ++n) {
    double term = (p1 - p2) / static_cast<double>(n);
    acc += term;
    // remaining tail is below q1^n / (n (1-q1))
    double tail = prefactor * p1 * q1 / (static_cast<double>(n) * (1.0 - q1));
    if (tail < abs_tol) break;
    p1 *= q1;
    p2 *= q2;
  }
  return prefactor * acc;
}

ExtremalScanResult extremal_scan(int grid_n) {
  if (grid_n < 10) {
    fail(ErrorCode::DomainError, "grid resolution must be at least 10");
  }
  double best_per = HUGE_VAL, best_det = HUGE_VAL;
  double per_r = 0, per_s = 0, det_r = 0, det_s = 0;
  for (int i = 0; i <= grid_n; ++i) {
    for (int j = 0; j <= grid_n - i; ++j) {
      double r = static_cast<double>(i) / grid_n;
      double s = static_cast<double>(j) / grid_n;
      double t = 1.0 - r - s;
      double p = per_value(r, s, t);
      double d = det_value(r, s, t);
      if (p < best_per) {
        best_per = p;
        per_r = r;
        per_s = s;
      }
      if (d < best_det) {
        best_det = d;
        det_r = r;
        det_s = s;
      }
    }
  }
  // local refinement around the best cells
  auto refine = [&](double& vr, double& vs, double& best, auto&& f) {
    double w = 2.0 / grid_n;
    const int m = 20;
    for (int round = 0; round < 3; ++round) {
      double step = w / m;
      double r0 = vr, s0 = vs;
      for (int i = -m; i <= m; ++i) {
        for (int j = -m; j <= m; ++j) {
          double r = r0 + i * step;
          double s = s0 + j * step;
          double t = 1.0 - r - s;
          if (r < 0.0 || s < 0.0 || t < 0.0) continue;
          double v = f(r, s, t);
          if (v < best) {
            best = v;
            vr = r;
            vs = s;
          }
        }
      }
      w = 2.0 * step;
    }
  };
  refine(per_r, per_s, best_per, per_value);
  refine(det_r, det_s, best_det, det_value);

  auto make_coords = [](double r, double s) {
    double t = 1.0 - r - s;
    return TriangleCoords{std::max(r, 0.0), std::max(s, 0.0),
                          std::max(t, 0.0)};
  };
  return {make_coords(per_r, per_s), best_per, make_coords(det_r, det_s),
          best_det};
}

}  // namespace idealtetra
