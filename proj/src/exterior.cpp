#include "idealtetra/exterior.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include "idealtetra/errors.hpp"

namespace idealtetra {

namespace {

constexpr int kBinom[5] = {1, 4, 6, 4, 1};

// Basis blades as bitmasks over {b1..b4}, listed per grade in the
// lexicographic order of the index tuples.
constexpr std::uint8_t kMasks[5][6] = {
    {0, 0, 0, 0, 0, 0},
    {1, 2, 4, 8, 0, 0},
    {3, 5, 9, 6, 10, 12},
    {7, 11, 13, 14, 0, 0},
    {15, 0, 0, 0, 0, 0},
};

// Position of a mask within its grade's component list.
constexpr int kPosition[16] = {
    0,       // 0000
    0, 1,    // 0001 0010
    0,       // 0011
    2,       // 0100
    1, 3,    // 0101 0110
    0,       // 0111
    3,       // 1000
    2, 4,    // 1001 1010
    1,       // 1011
    5,       // 1100
    2, 3,    // 1101 1110
    0,       // 1111
};

// Product of the basis signs over the blade: sigma_1 = +1, sigma_2..4 = -1.
double blade_metric(unsigned mask) {
  return (std::popcount(mask & 0xEu) % 2 == 0) ? 1.0 : -1.0;
}

// Sign of merging two disjoint sorted index sets, counting inversions.
int merge_sign(unsigned a, unsigned b) {
  int inversions = 0;
  for (int j = 0; j < 4; ++j) {
    if (b & (1u << j)) inversions += std::popcount(a >> (j + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

void check_grade(int grade) {
  if (grade < 0 || grade > 4) {
    fail(ErrorCode::DomainError, "grade must be in 0..4");
  }
}

}  // namespace

MultiVector::MultiVector(int grade) : grade_(grade), c_{} { check_grade(grade); }

MultiVector MultiVector::scalar(double value) {
  MultiVector m(0);
  m[0] = value;
  return m;
}

MultiVector MultiVector::from_vector(const MinkowskiVector& v) {
  MultiVector m(1);
  for (int i = 0; i < 4; ++i) m[i] = v[i];
  return m;
}

MultiVector MultiVector::basis_blade(int grade, int position) {
  check_grade(grade);
  if (position < 0 || position >= kBinom[grade]) {
    fail(ErrorCode::DomainError, "basis blade position out of range");
  }
  MultiVector m(grade);
  m[position] = 1.0;
  return m;
}

int MultiVector::size() const { return kBinom[grade_]; }

double MultiVector::to_scalar() const {
  if (grade_ != 0) fail(ErrorCode::GradeMismatch, "expected a grade-0 element");
  return c_[0];
}

MinkowskiVector MultiVector::to_vector() const {
  if (grade_ != 1) fail(ErrorCode::GradeMismatch, "expected a grade-1 element");
  return {c_[0], c_[1], c_[2], c_[3]};
}

double MultiVector::euclidean_norm() const {
  double s = 0.0;
  for (int i = 0; i < size(); ++i) s += c_[static_cast<size_t>(i)] * c_[static_cast<size_t>(i)];
  return std::sqrt(s);
}

bool MultiVector::is_zero(double tol) const {
  return euclidean_norm() <= tol;
}

MultiVector MultiVector::operator+(const MultiVector& o) const {
  if (grade_ != o.grade_) fail(ErrorCode::GradeMismatch, "grades differ in +");
  MultiVector m(grade_);
  for (int i = 0; i < size(); ++i) m[i] = (*this)[i] + o[i];
  return m;
}

MultiVector MultiVector::operator-(const MultiVector& o) const {
  if (grade_ != o.grade_) fail(ErrorCode::GradeMismatch, "grades differ in -");
  MultiVector m(grade_);
  for (int i = 0; i < size(); ++i) m[i] = (*this)[i] - o[i];
  return m;
}

MultiVector MultiVector::operator-() const {
  MultiVector m(grade_);
  for (int i = 0; i < size(); ++i) m[i] = -(*this)[i];
  return m;
}

MultiVector MultiVector::operator*(double a) const {
  MultiVector m(grade_);
  for (int i = 0; i < size(); ++i) m[i] = a * (*this)[i];
  return m;
}

MultiVector volume_element() { return MultiVector::basis_blade(4, 0); }

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  int ka = a.grade(), kb = b.grade();
  if (ka + kb > 4) {
    fail(ErrorCode::GradeOverflow, "wedge grades sum past the dimension");
  }
  MultiVector out(ka + kb);
  for (int i = 0; i < kBinom[ka]; ++i) {
    double ai = a[i];
    if (ai == 0.0) continue;
    unsigned ma = kMasks[ka][i];
    for (int j = 0; j < kBinom[kb]; ++j) {
      double bj = b[j];
      if (bj == 0.0) continue;
      unsigned mb = kMasks[kb][j];
      if (ma & mb) continue;
      out[kPosition[ma | mb]] += merge_sign(ma, mb) * ai * bj;
    }
  }
  return out;
}

double induced_inner(const MultiVector& a, const MultiVector& b) {
  if (a.grade() != b.grade()) {
    fail(ErrorCode::GradeMismatch, "induced form requires equal grades");
  }
  double s = 0.0;
  for (int i = 0; i < kBinom[a.grade()]; ++i) {
    s += a[i] * b[i] * blade_metric(kMasks[a.grade()][i]);
  }
  return s;
}

MultiVector hodge_star(const MultiVector& a) {
  int k = a.grade();
  MultiVector out(4 - k);
  for (int i = 0; i < kBinom[k]; ++i) {
    double x = a[i];
    if (x == 0.0) continue;
    unsigned m = kMasks[k][i];
    unsigned comp = ~m & 0xFu;
    out[kPosition[comp]] += merge_sign(m, comp) * blade_metric(m) * x;
  }
  return out;
}

MinkowskiVector polar_point(const MinkowskiVector& v1,
                            const MinkowskiVector& v2,
                            const MinkowskiVector& v3) {
  MultiVector w = wedge(wedge(MultiVector::from_vector(v1),
                              MultiVector::from_vector(v2)),
                        MultiVector::from_vector(v3));
  double scale =
      v1.euclidean_norm() * v2.euclidean_norm() * v3.euclidean_norm();
  if (w.euclidean_norm() <= tolerances().classification * scale) {
    fail(ErrorCode::DegenerateSpan, "polar point of a degenerate span");
  }
  return hodge_star(w).to_vector();
}

bool points_toward(const MinkowskiVector& u, const MinkowskiVector& p,
                   const MinkowskiVector& v) {
  double uv = inner(u, v);
  if (std::fabs(uv) <=
      tolerances().classification * u.euclidean_norm() * v.euclidean_norm()) {
    fail(ErrorCode::PointOnPlane, "point lies on the plane");
  }
  return uv * inner(v, p) < 0.0;
}

double dihedral_angle(const MinkowskiVector& v1, const MinkowskiVector& v2,
                      const MinkowskiVector& v3, const MinkowskiVector& v4,
                      double tol) {
  const MinkowskiVector* v[4] = {&v1, &v2, &v3, &v4};
  for (int i = 0; i < 4; ++i) {
    if (classify(*v[i]) != PointClass::Null) {
      fail(ErrorCode::NotIdeal, "dihedral angle requires ideal vertices");
    }
  }
  double g[4][4];
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      g[i][j] = inner(*v[i], *v[j]);
      double scale = v[i]->euclidean_norm() * v[j]->euclidean_norm();
      // Ideal points with vanishing pairwise product coincide projectively.
      if (std::fabs(g[i][j]) <= tolerances().classification * scale) {
        fail(ErrorCode::CoincidentVertices,
             "vertices coincide projectively");
      }
      if (g[i][j] <= 0.0) {
        fail(ErrorCode::NonPositiveGram,
             "representatives are not sign-normalized");
      }
    }
  }
  double num = g[0][2] * g[1][3] + g[0][3] * g[1][2] - g[0][1] * g[2][3];
  double den = 2.0 * std::sqrt(g[1][2] * g[0][2] * g[1][3] * g[0][3]);
  double arg = num / den;
  if (arg > 1.0 || arg < -1.0) {
    if (arg > 1.0 + tol || arg < -1.0 - tol) {
      fail(ErrorCode::DomainError, "dihedral angle argument out of range");
    }
    arg = arg > 1.0 ? 1.0 : -1.0;
  }
  return std::acos(arg);
}

}  // namespace idealtetra
