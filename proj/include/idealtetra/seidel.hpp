#pragma once

#include "idealtetra/tetra.hpp"

namespace idealtetra {

// Determinant / square-root-of-permanent pair of the doubly stochastic
// Gram matrix: the coordinates of the region
//
//   S = {(alpha, omega) | alpha = det G, omega = sqrt(per G)}.
//
// Construction enforces only the bounding box -1/27 <= alpha <= 0,
// 1/3 <= omega <= 1/2; full membership is region_contains().
class SeidelCoords {
 public:
  SeidelCoords(double alpha, double omega);

  double alpha() const { return alpha_; }
  double omega() const { return omega_; }

 private:
  double alpha_, omega_;
};

struct VolumeDerivatives {
  double d_alpha;  // negative on the interior of S
  double d_omega;  // positive on the interior of S
};

// Boundary description of S:
//
//   S = {1/3 <= y <= 3/8, f1(y) <= x <= f2(y)}
//       union {3/8 <= y <= 1/2, f1(y) <= x <= 0}
//
// with f1(y) = -(2(6y-2)^{3/2} - 3(6y-2) + 1)/27 on [1/3, 1/2]  (curve c1)
// and  f2(y) = -(-2(6y-2)^{3/2} - 3(6y-2) + 1)/27 on [1/3, 3/8] (curve c2);
// the segment alpha = 0, 3/8 <= y <= 1/2 is the degenerate curve c3.
struct RegionS {
  static constexpr double kRegularAlpha = -1.0 / 27.0;
  static constexpr double kRegularOmega = 1.0 / 3.0;
  static constexpr double kSquareOmega = 3.0 / 8.0;   // (0, 3/8) corner
  static constexpr double kSegmentOmega = 1.0 / 2.0;  // (0, 1/2) corner

  double f1(double omega) const;
  double f2(double omega) const;

  // Inverses on the monotone branches, by bisection.
  double f1_inverse(double alpha) const;
  double f2_inverse(double alpha) const;
};

RegionS region_boundary();

// Membership in S with boundary tolerance 1e-12. The overload on raw
// values also answers for points outside the bounding box.
bool region_contains(double alpha, double omega);
bool region_contains(const SeidelCoords& sc);

// alpha = -(r+s+t)(-r+s+t)(r-s+t)(r+s-t), omega = r^2+s^2+t^2.
SeidelCoords seidel_forward(const TriangleCoords& coords);

// Closed-form inverse onto the fundamental chart triangle:
//
//   (c,d) = sqrt(2 omega - 2/3) (sin kappa, cos kappa),
//   kappa = (1/3) arccos (-27 alpha + 18 omega - 7)
//                        / (4 sqrt2 (3 omega - 1)^{3/2}),
//
// with the special value (0,0) at (-1/27, 1/3), where the formula is
// 0/0; the switch happens within 1e-10 of that corner, which is also the
// formula's loss-of-precision band. OutsideRegion for non-members.
PlaneCoords seidel_invert(const SeidelCoords& sc);

// Independent inversion route: (r,s,t) are the sorted real roots of
//
//   p(w) = w^3 - w^2 + ((1 - omega)/2) w - (alpha - 2 omega + 1)/8,
//
// solved by the trigonometric method for three real roots.
// ComplexRoots when the discriminant says the point is not in S.
TriangleCoords seidel_invert_cubic(const SeidelCoords& sc);

// Milnor's formula: vol = L(theta1) + L(theta2) + L(theta3).
double volume_from_angles(const DihedralAngles& angles);

// Volume as a function on S, through the chain
// seidel_invert -> plane_to_delta -> angles_from_coords -> Milnor.
// Points with alpha = 0 (within 1e-13) are degenerate and return 0
// exactly, extending the formula by continuity across the curve c3.
double volume(const SeidelCoords& sc);

// Closed-form partial derivatives on the interior of S, evaluated at
// (c,d) = seidel_invert(sc) and (r,s,t) = plane_to_delta(c,d):
//
//   dvol/dalpha = sqrt3 (M log(st/r^2) + N log(t/s))
//                 / (648 c (3d^2-c^2) r s t sqrt(-alpha))
//   dvol/domega = sqrt(-alpha) (P log(st/r^2) + Q log(t/s))
//                 / (12 c (3d^2-c^2) r s t)
//
//   M = c (3d - sqrt3)(21 d^2 + 4 sqrt3 d + 9 c^2 - 2)
//   N = sqrt3 (-27 c^4 + 9 c^2 (3 d^2 + sqrt3 d + 1)
//              + d (18 d^3 + 9 sqrt3 d^2 - 9 d - 2 sqrt3))
//   P = 2 c (sqrt3 d - 1)
//   Q = -3 c^2 + d (3 d + 2 sqrt3)
//
// BoundaryPoint where the formulas are singular (c = 0, 3d^2 = c^2, or
// alpha = 0).
VolumeDerivatives volume_derivatives(const SeidelCoords& sc);

// k' = (a+b)(a-1) log(a+b) - a(a+b-1) log a, strictly positive for
// a > 1, 0 < b < 1; the kernel whose sign drives both monotonicity
// statements. DomainError outside the stated domain.
double kprime(double a, double b);

// Series form of k',
//   (a-1)(a+b-1) sum_{n>=1} (1/n) [((a+b-1)/(a+b))^{n-1} - ((a-1)/a)^{n-1}],
// summed to the requested absolute tail bound; the oracle for kprime().
double kprime_series(double a, double b, double abs_tol = 1e-13);

// Brute-force minimisation of permanent and determinant over the full
// parameter simplex {r+s+t = 1, r,s,t >= 0} of symmetric doubly stochastic
// matrices with vanishing diagonal:
//   per = (r^2+s^2+t^2)^2,
//   det = -(r+s+t)(-r+s+t)(r-s+t)(r+s-t).
// Barycentric grid of resolution 1/grid_n plus local refinement around the
// best cell; both minima sit at (1/3, 1/3, 1/3).
struct ExtremalScanResult {
  TriangleCoords argmin_per;
  double min_per;
  TriangleCoords argmin_det;
  double min_det;
};

ExtremalScanResult extremal_scan(int grid_n);

}  // namespace idealtetra
