#pragma once

#include <array>

#include "idealtetra/minkowski.hpp"
#include "idealtetra/tolerances.hpp"

namespace idealtetra {

// Labelled ideal tetrahedron: an ordered 4-tuple of representatives of
// ideal points. Admissibility (which coincidence patterns are allowed) is
// checked by the operations, not at construction.
struct LabelledTetrahedron {
  std::array<MinkowskiVector, 4> vertices;
};

// Point of the moduli triangle
//   Delta = {(r,s,t) | r+s+t = 1, r <= s+t, s <= t+r, t <= r+s, r,s,t >= 0},
// the parameters of the doubly stochastic Gram matrix
//   [0 r s t; r 0 t s; s t 0 r; t s r 0].
class TriangleCoords {
 public:
  TriangleCoords(double r, double s, double t);

  double r() const { return r_; }
  double s() const { return s_; }
  double t() const { return t_; }

 private:
  double r_, s_, t_;
};

// Planar chart of Delta centred at the regular point: the equilateral
// triangle {d >= -sqrt3/6, d <= -sqrt3 c + sqrt3/3, d <= sqrt3 c + sqrt3/3}.
class PlaneCoords {
 public:
  PlaneCoords(double c, double d);

  double c() const { return c_; }
  double d() const { return d_; }

 private:
  double c_, d_;
};

// Interior angles theta1, theta2, theta3 of the Euclidean triangle with
// side lengths (r,s,t); equal to the dihedral angles of the corresponding
// ideal tetrahedron (theta_i on the two edges of class i). Sums to pi.
class DihedralAngles {
 public:
  DihedralAngles(double theta1, double theta2, double theta3);

  double theta1() const { return t1_; }
  double theta2() const { return t2_; }
  double theta3() const { return t3_; }

 private:
  double t1_, t2_, t3_;
};

// Projective equality of representatives: vanishing pairwise product
// relative to the Euclidean norms plus a proportionality backstop.
bool projectively_equal(const MinkowskiVector& u, const MinkowskiVector& v,
                        double tol = tolerances().classification);

// Rechooses representative signs so that all pairwise products are
// strictly positive (possible for any pairwise-distinct ideal 4-tuple):
// flips v_i (i >= 2) against <v1,v_i>, then verifies the rest.
// CoincidentVertices / SignObstruction on failure.
LabelledTetrahedron sign_normalize(const LabelledTetrahedron& t);

// The unique doubly stochastic Gram triple
//   (r,s,t) = (sqrt(g12 g34), sqrt(g13 g24), sqrt(g14 g23)) / sum,
// invariant under rescaling representatives and under the Klein-four
// relabellings. The coincidence patterns (v,v,v',v'), (v,v',v,v'),
// (v,v',v',v) map to the three vertices of Delta; all other coincidence
// patterns are Inadmissible.
TriangleCoords doubly_stochastic_coords(const LabelledTetrahedron& t);

// Explicit vertices realizing the doubly stochastic Gram matrix of
// (r,s,t), valid away from the vertices of Delta:
//   v1 = b1 + b2
//   v2 = (r/2) b1 - (r/2) b2
//   v3 = (t/r + s/2) b1 + (t/r - s/2) b2 + sqrt(2st/r) b3
//   v4 = (s/r + t/2) b1 + (s/r - t/2) b2
//        + ((-r^2+s^2+t^2)/sqrt(2rst)) b3 + sqrt(-det G / (2rst)) b4
LabelledTetrahedron synthesize(const TriangleCoords& coords);

// Mutually inverse affine bijections between Delta and its planar chart:
// (c,d) corresponds to ((1-sqrt3 d)/3, (2-3c+sqrt3 d)/6, (2+3c+sqrt3 d)/6).
PlaneCoords delta_to_plane(const TriangleCoords& coords);
TriangleCoords plane_to_delta(const PlaneCoords& pc);

// S3-orbit representative with r <= s <= t (the fundamental domain).
TriangleCoords canonicalize(const TriangleCoords& coords);

// Relabelling: result.vertices[i] = t.vertices[p[i]]. The Klein four group
// {id, (12)(34), (13)(24), (14)(23)} leaves the coordinates fixed; general
// permutations act through the S3 quotient by permuting (r,s,t).
using VertexPermutation = std::array<int, 4>;
LabelledTetrahedron permute_vertices(const LabelledTetrahedron& t,
                                     const VertexPermutation& p);

// Dihedral angles from coordinates:
//   cos theta1 = (-r^2+s^2+t^2)/(2st),  cos theta2 = (r^2-s^2+t^2)/(2rt),
//   cos theta3 = (r^2+s^2-t^2)/(2rs),
// clamped near +-1; undefined at the vertices of Delta (DeltaVertex).
DihedralAngles angles_from_coords(const TriangleCoords& coords);

}  // namespace idealtetra
