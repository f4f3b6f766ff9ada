#include "idealtetra/lobachevsky.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "idealtetra/errors.hpp"

namespace idealtetra {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kZetaTerms = 40;

// zeta(2), zeta(4), ... from the classical recurrence
// (n + 1/2) zeta(2n) = sum_{k=1}^{n-1} zeta(2k) zeta(2n-2k), n >= 2.
const std::array<double, kZetaTerms + 1>& zeta_even() {
  static const std::array<double, kZetaTerms + 1> table = [] {
    std::array<double, kZetaTerms + 1> z{};
    z[1] = kPi * kPi / 6.0;
    for (int n = 2; n <= kZetaTerms; ++n) {
      double acc = 0.0;
      for (int k = 1; k < n; ++k) acc += z[k] * z[n - k];
      z[n] = acc / (n + 0.5);
    }
    return z;
  }();
  return table;
}

// L on [0, pi/2], with the log singularity of the integrand split off:
// L(x) = x - x log(2x) + sum_n zeta(2n)/(n(2n+1)) (x/pi)^{2n} x.
double lob_reduced(double x) {
  if (x == 0.0) return 0.0;
  const auto& z = zeta_even();
  double q = (x / kPi) * (x / kPi);
  double pow = q;
  double acc = 0.0;
  for (int n = 1; n <= kZetaTerms; ++n) {
    double term = z[n] / (n * (2.0 * n + 1.0)) * pow;
    acc += term;
    if (term < 1e-18) break;
    pow *= q;
  }
  return x - x * std::log(2.0 * x) + x * acc;
}

// One tanh-sinh pass over [a, b] summing g(j*h) for j = offset, offset +
// stride, ...; f must be integrable with singularities at the endpoints
// only. Node offsets from the endpoints are formed as r*(1 - |tanh|) to
// keep precision near the singularity.
template <typename F>
double tanh_sinh_level(F&& f, double a, double b, double h, int stride,
                       int offset) {
  const double m = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  const double umax = 3.6;
  double sum = 0.0;
  for (int j = offset;; j += stride) {
    double u = j * h;
    if (u > umax) break;
    double s = 0.5 * kPi * std::sinh(u);
    double w = 0.5 * kPi * std::cosh(u) / (std::cosh(s) * std::cosh(s));
    if (j > 0 && w < 1e-18) break;
    if (j == 0) {
      double fm = f(m);
      if (std::isfinite(fm)) sum += w * fm;
      continue;
    }
    // 1 - tanh(s) = 2 / (e^{2s} + 1), evaluated without cancellation
    double gap = 2.0 / (std::exp(2.0 * s) + 1.0);
    double fp = f(b - r * gap);
    double fm = f(a + r * gap);
    if (std::isfinite(fp)) sum += w * fp;
    if (std::isfinite(fm)) sum += w * fm;
  }
  return r * h * sum;
}

// Tanh-sinh integration of f over [a, b] to abs_tol, halving the step and
// reusing previous nodes.
template <typename F>
double tanh_sinh(F&& f, double a, double b, double abs_tol) {
  double h = 1.0;
  double value = tanh_sinh_level(f, a, b, h, 1, 0);
  for (int level = 1; level <= 12; ++level) {
    h *= 0.5;
    // new nodes are the odd multiples of the halved step
    double refined = 0.5 * value + tanh_sinh_level(f, a, b, h, 2, 1);
    double err = std::fabs(refined - value);
    value = refined;
    if (level >= 3 && err <= 0.25 * abs_tol) {
      return value;
    }
  }
  fail(ErrorCode::ToleranceUnreachable,
       "tanh-sinh refinement did not reach the requested tolerance");
}

double log_2sin(double t) {
  double v = std::fabs(2.0 * std::sin(t));
  if (v == 0.0) return 0.0;  // measure-zero node at a singularity
  return std::log(v);
}

}  // namespace

double lobachevsky(double theta) {
  if (!std::isfinite(theta)) {
    fail(ErrorCode::DomainError, "argument must be finite");
  }
  double x = std::fmod(theta, kPi);
  if (x < 0.0) x += kPi;
  if (x > 0.5 * kPi) return -lob_reduced(kPi - x);
  return lob_reduced(x);
}

double lobachevsky_quadrature(double theta, double abs_tol) {
  if (abs_tol < 1e-14) {
    fail(ErrorCode::ToleranceUnreachable,
         "requested tolerance below the quadrature floor of 1e-14");
  }
  if (!std::isfinite(theta)) {
    fail(ErrorCode::DomainError, "argument must be finite");
  }
  if (theta == 0.0) return 0.0;
  double lo = std::min(0.0, theta);
  double hi = std::max(0.0, theta);
  // split at multiples of pi so the log singularities sit at endpoints
  std::vector<double> cuts{lo};
  for (double k = std::ceil(lo / kPi); k * kPi < hi; k += 1.0) {
    if (k * kPi > lo) cuts.push_back(k * kPi);
  }
  cuts.push_back(hi);
  double integral = 0.0;
  double piece_tol = abs_tol / static_cast<double>(cuts.size() - 1);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    integral += tanh_sinh(log_2sin, cuts[i], cuts[i + 1], piece_tol);
  }
  double signed_integral = (theta > 0.0) ? integral : -integral;
  return -signed_integral;
}

}  // namespace idealtetra
