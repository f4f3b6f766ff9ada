#pragma once

namespace idealtetra {

// Process-wide tolerance configuration.
//
// classification: relative cutoff for sign classification and for deciding
//                 projective coincidence (|<v,v>| against the Euclidean
//                 norm squared).
// arithmetic:     slack for identities that hold exactly in real arithmetic
//                 (chart membership, sums that must equal 1 or pi).
struct Tolerances {
  double classification = 1e-9;
  double arithmetic = 1e-12;
};

// Mutable singleton. The classification tolerance is seeded from the
// IDEALTETRA_TOL environment variable on first access.
Tolerances& tolerances();

}  // namespace idealtetra
