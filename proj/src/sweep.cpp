#include "idealtetra/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "idealtetra/errors.hpp"

namespace idealtetra {

std::pair<double, double> sweep_range(SweepAxis fixed_axis,
                                      double fixed_value) {
  RegionS b;
  const double btol = tolerances().arithmetic;
  if (fixed_axis == SweepAxis::Omega) {
    if (fixed_value < RegionS::kRegularOmega - btol ||
        fixed_value > RegionS::kSegmentOmega + btol) {
      fail(ErrorCode::EmptyIntersection,
           "the line omega = const misses the region");
    }
    double y = std::clamp(fixed_value, RegionS::kRegularOmega,
                          RegionS::kSegmentOmega);
    double lo = b.f1(y);
    double hi = (y <= RegionS::kSquareOmega) ? b.f2(y) : 0.0;
    return {lo, hi};
  }
  if (fixed_value < RegionS::kRegularAlpha - btol || fixed_value > btol) {
    fail(ErrorCode::EmptyIntersection,
         "the line alpha = const misses the region");
  }
  double a = std::clamp(fixed_value, RegionS::kRegularAlpha, 0.0);
  return {b.f2_inverse(a), b.f1_inverse(a)};
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.sample_count < 2) {
    fail(ErrorCode::DomainError, "sample count must be at least 2");
  }
  auto [lo, hi] = sweep_range(spec.fixed_axis, spec.fixed_value);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<size_t>(spec.sample_count));
  for (int i = 0; i < spec.sample_count; ++i) {
    double x = lo + (hi - lo) * static_cast<double>(i) /
                        static_cast<double>(spec.sample_count - 1);
    if (i == spec.sample_count - 1) x = hi;
    SeidelCoords sc = (spec.fixed_axis == SweepAxis::Omega)
                          ? SeidelCoords{x, spec.fixed_value}
                          : SeidelCoords{spec.fixed_value, x};
    rows.push_back({x, volume(sc)});
  }
  return rows;
}

}  // namespace idealtetra
