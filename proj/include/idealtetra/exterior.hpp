#pragma once

#include <array>
#include <cstddef>

#include "idealtetra/minkowski.hpp"

namespace idealtetra {

// Grade-k element of the exterior algebra of V (k = 0..4). Components are
// indexed by strictly increasing index tuples from {1,2,3,4} in
// lexicographic order, so grades 0..4 have 1, 4, 6, 4, 1 components.
class MultiVector {
 public:
  explicit MultiVector(int grade);  // zero element of the given grade

  static MultiVector scalar(double value);
  static MultiVector from_vector(const MinkowskiVector& v);
  // Unit basis blade, position indexing the lexicographic tuple list.
  static MultiVector basis_blade(int grade, int position);

  int grade() const { return grade_; }
  int size() const;

  double operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<size_t>(i)]; }

  double to_scalar() const;          // grade 0 only
  MinkowskiVector to_vector() const; // grade 1 only

  double euclidean_norm() const;
  bool is_zero(double tol = 0.0) const;

  MultiVector operator+(const MultiVector& o) const;
  MultiVector operator-(const MultiVector& o) const;
  MultiVector operator-() const;
  MultiVector operator*(double a) const;

 private:
  int grade_;
  std::array<double, 6> c_;  // first size() entries are used
};

inline MultiVector operator*(double a, const MultiVector& m) { return m * a; }

// <omega,omega> for the fixed volume element; equals -1 because the
// signature has an odd number of negative basis vectors.
inline constexpr double kSigma = -1.0;

// The fixed orientation b1^b2^b3^b4 used by the Hodge star.
MultiVector volume_element();

// Antisymmetric product; GradeOverflow when the grades sum past 4.
MultiVector wedge(const MultiVector& a, const MultiVector& b);

// Bilinear symmetric extension of <v1^...^vk, w1^...^wk> = det[<vi,wj>].
// GradeMismatch when the grades differ.
double induced_inner(const MultiVector& a, const MultiVector& b);

// Linear map of grade k to grade 4-k defined by
// wedge(x, hodge_star(a)) = induced_inner(x, a) * omega for all grade-k x.
MultiVector hodge_star(const MultiVector& a);

// *(v1^v2^v3): representative of the point polar to the plane spanned by
// three independent vectors. DegenerateSpan when the wedge vanishes.
MinkowskiVector polar_point(const MinkowskiVector& v1,
                            const MinkowskiVector& v2,
                            const MinkowskiVector& v3);

// For a plane with polar point u containing p, true iff the normal
// <-,p>u at p points towards the half-space containing v; decided by the
// sign of <u,v><v,p>. PointOnPlane when <u,v> vanishes within tolerance.
bool points_toward(const MinkowskiVector& u, const MinkowskiVector& p,
                   const MinkowskiVector& v);

// Dihedral angle in [0, pi] along the edge (v1,v2) between the planes
// spanned by (v1,v2,v3) and (v1,v2,v4). The four points must be ideal,
// pairwise projectively distinct, with representatives chosen so that all
// pairwise products are positive:
//
//   angle = arccos (g13 g24 + g14 g23 - g12 g34) / (2 sqrt(g23 g31 g24 g41))
//
// The arccos argument is clamped to [-1,1] when within tol of the boundary;
// the values +1/-1 occur exactly for coplanar configurations with v3, v4 on
// the same / opposite half-planes.
double dihedral_angle(const MinkowskiVector& v1, const MinkowskiVector& v2,
                      const MinkowskiVector& v3, const MinkowskiVector& v4,
                      double tol = 1e-9);

}  // namespace idealtetra
