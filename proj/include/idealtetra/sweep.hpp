#pragma once

#include <utility>
#include <vector>

#include "idealtetra/seidel.hpp"

namespace idealtetra {

enum class SweepAxis { Alpha, Omega };
enum class OutputFormat { Csv, Json };

// A volume sweep along the intersection of a fixed coordinate line with S.
struct SweepSpec {
  SweepAxis fixed_axis = SweepAxis::Omega;
  double fixed_value = 0.0;
  int sample_count = 100;  // >= 2
  OutputFormat output_format = OutputFormat::Csv;
};

struct SweepRow {
  double coordinate;  // value of the varying coordinate
  double volume;
};

// Endpoints (lo, hi) of the varying coordinate over the intersection of
// the fixed line with S; EmptyIntersection when the line misses S.
std::pair<double, double> sweep_range(SweepAxis fixed_axis,
                                      double fixed_value);

// sample_count rows spanning exactly [lo, hi], endpoints included.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

}  // namespace idealtetra
