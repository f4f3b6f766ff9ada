#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace idealtetra {

// Result of one verified property: the number of cases exercised and the
// worst residual (or margin) observed, against the bound it was held to.
struct PropertyResult {
  std::string name;
  bool pass = false;
  long long cases = 0;
  double worst = 0.0;
  double bound = 0.0;
};

// Deterministic property suites, seeded; used by the CLI `verify` command.
std::vector<PropertyResult> verify_hodge(std::uint64_t seed);
std::vector<PropertyResult> verify_gram(std::uint64_t seed);
std::vector<PropertyResult> verify_lobachevsky(std::uint64_t seed);
std::vector<PropertyResult> verify_roundtrip(std::uint64_t seed);
std::vector<PropertyResult> verify_monotonicity(std::uint64_t seed);
std::vector<PropertyResult> verify_extremal(std::uint64_t seed);
std::vector<PropertyResult> verify_all(std::uint64_t seed);

}  // namespace idealtetra
