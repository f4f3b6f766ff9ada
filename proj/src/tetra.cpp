#include "idealtetra/tetra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "idealtetra/errors.hpp"

namespace idealtetra {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kPi = std::numbers::pi;

double clamp_unit(double arg, double tol) {
  if (arg > 1.0 || arg < -1.0) {
    if (arg > 1.0 + tol || arg < -1.0 - tol) {
      fail(ErrorCode::DomainError, "arccos argument out of range");
    }
    return arg > 1.0 ? 1.0 : -1.0;
  }
  return arg;
}

}  // namespace

TriangleCoords::TriangleCoords(double r, double s, double t)
    : r_(r), s_(s), t_(t) {
  double slack = tolerances().arithmetic;
  if (!(std::isfinite(r) && std::isfinite(s) && std::isfinite(t))) {
    fail(ErrorCode::OutOfChart, "coordinates must be finite");
  }
  if (r < -slack || s < -slack || t < -slack) {
    fail(ErrorCode::OutOfChart, "coordinates must be non-negative");
  }
  if (std::fabs(r + s + t - 1.0) > slack) {
    fail(ErrorCode::OutOfChart, "coordinates must sum to 1");
  }
  if (r > s + t + slack || s > t + r + slack || t > r + s + slack) {
    fail(ErrorCode::OutOfChart, "triangle inequalities violated");
  }
}

PlaneCoords::PlaneCoords(double c, double d) : c_(c), d_(d) {
  double slack = tolerances().classification;
  if (!(std::isfinite(c) && std::isfinite(d))) {
    fail(ErrorCode::OutOfChart, "chart coordinates must be finite");
  }
  if (d < -kSqrt3 / 6.0 - slack || d > -kSqrt3 * c + kSqrt3 / 3.0 + slack ||
      d > kSqrt3 * c + kSqrt3 / 3.0 + slack) {
    fail(ErrorCode::OutOfChart, "point outside the chart triangle");
  }
}

DihedralAngles::DihedralAngles(double theta1, double theta2, double theta3)
    : t1_(theta1), t2_(theta2), t3_(theta3) {
  double slack = tolerances().classification;
  for (double th : {theta1, theta2, theta3}) {
    if (!(th >= -slack && th <= kPi + slack)) {
      fail(ErrorCode::DomainError, "angles must lie in [0, pi]");
    }
  }
  if (std::fabs(theta1 + theta2 + theta3 - kPi) > slack) {
    fail(ErrorCode::DomainError, "angles must sum to pi");
  }
}

bool projectively_equal(const MinkowskiVector& u, const MinkowskiVector& v,
                        double tol) {
  double nu = u.euclidean_norm();
  double nv = v.euclidean_norm();
  if (nu == 0.0 || nv == 0.0) {
    fail(ErrorCode::ZeroVector, "zero vector is not a projective point");
  }
  if (std::fabs(inner(u, v)) > tol * nu * nv) return false;
  // proportionality backstop against rounding in the product
  double same = 0.0, opposite = 0.0;
  for (int i = 0; i < 4; ++i) {
    double a = u[i] / nu, b = v[i] / nv;
    same += (a - b) * (a - b);
    opposite += (a + b) * (a + b);
  }
  return std::min(same, opposite) <= tol * tol;
}

LabelledTetrahedron sign_normalize(const LabelledTetrahedron& t) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (projectively_equal(t.vertices[static_cast<size_t>(i)],
                             t.vertices[static_cast<size_t>(j)])) {
        fail(ErrorCode::CoincidentVertices,
             "vertices must be pairwise projectively distinct");
      }
    }
  }
  LabelledTetrahedron out = t;
  for (size_t i = 1; i < 4; ++i) {
    if (inner(out.vertices[0], out.vertices[i]) < 0.0) {
      out.vertices[i] = -out.vertices[i];
    }
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (inner(out.vertices[static_cast<size_t>(i)],
                out.vertices[static_cast<size_t>(j)]) <= 0.0) {
        fail(ErrorCode::SignObstruction,
             "could not make all pairwise products positive");
      }
    }
  }
  return out;
}

TriangleCoords doubly_stochastic_coords(const LabelledTetrahedron& t) {
  for (const auto& v : t.vertices) {
    if (classify(v) != PointClass::Null) {
      fail(ErrorCode::NotIdeal, "vertices must be ideal points");
    }
  }
  bool eq[4][4] = {};
  int coincidences = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      eq[i][j] = projectively_equal(t.vertices[static_cast<size_t>(i)],
                                    t.vertices[static_cast<size_t>(j)]);
      coincidences += eq[i][j] ? 1 : 0;
    }
  }
  if (coincidences == 0) {
    LabelledTetrahedron n = sign_normalize(t);
    auto g = [&n](int i, int j) {
      return inner(n.vertices[static_cast<size_t>(i)],
                   n.vertices[static_cast<size_t>(j)]);
    };
    double r = std::sqrt(g(0, 1) * g(2, 3));
    double s = std::sqrt(g(0, 2) * g(1, 3));
    double u = std::sqrt(g(0, 3) * g(1, 2));
    double sum = r + s + u;
    return {r / sum, s / sum, u / sum};
  }
  // Two disjoint coincident pairs give the vertices of Delta; every other
  // coincidence pattern admits no doubly stochastic Gram matrix.
  if (coincidences == 2) {
    if (eq[0][1] && eq[2][3]) return {0.0, 0.5, 0.5};
    if (eq[0][2] && eq[1][3]) return {0.5, 0.0, 0.5};
    if (eq[0][3] && eq[1][2]) return {0.5, 0.5, 0.0};
  }
  if (coincidences == 1) {
    fail(ErrorCode::Inadmissible, "exactly two vertices coincide");
  }
  fail(ErrorCode::Inadmissible,
       "coincidence pattern admits no doubly stochastic Gram matrix");
}

LabelledTetrahedron synthesize(const TriangleCoords& coords) {
  double r = coords.r(), s = coords.s(), t = coords.t();
  double slack = tolerances().arithmetic;
  // within Delta a vanishing coordinate happens exactly at a vertex
  if (r <= slack || s <= slack || t <= slack) {
    fail(ErrorCode::DeltaVertex,
         "synthesis is undefined at the vertices of the moduli triangle");
  }
  if (r <= 0.0 || s <= 0.0 || t <= 0.0) {
    fail(ErrorCode::ZeroCoordinate, "coordinates must be positive");
  }
  double neg_det = (r + s + t) * (-r + s + t) * (r - s + t) * (r + s - t);
  if (neg_det < 0.0) neg_det = 0.0;  // boundary rounding
  LabelledTetrahedron out;
  out.vertices[0] = {1.0, 1.0, 0.0, 0.0};
  out.vertices[1] = {r / 2.0, -r / 2.0, 0.0, 0.0};
  out.vertices[2] = {t / r + s / 2.0, t / r - s / 2.0, std::sqrt(2.0 * s * t / r),
                     0.0};
  out.vertices[3] = {s / r + t / 2.0, s / r - t / 2.0,
                     (-r * r + s * s + t * t) / std::sqrt(2.0 * r * s * t),
                     std::sqrt(neg_det / (2.0 * r * s * t))};
  return out;
}

PlaneCoords delta_to_plane(const TriangleCoords& coords) {
  return {coords.t() - coords.s(), (1.0 - 3.0 * coords.r()) / kSqrt3};
}

TriangleCoords plane_to_delta(const PlaneCoords& pc) {
  double c = pc.c(), d = pc.d();
  return {(1.0 - kSqrt3 * d) / 3.0, (2.0 - 3.0 * c + kSqrt3 * d) / 6.0,
          (2.0 + 3.0 * c + kSqrt3 * d) / 6.0};
}

TriangleCoords canonicalize(const TriangleCoords& coords) {
  std::array<double, 3> v{coords.r(), coords.s(), coords.t()};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

LabelledTetrahedron permute_vertices(const LabelledTetrahedron& t,
                                     const VertexPermutation& p) {
  bool seen[4] = {};
  for (int i : p) {
    if (i < 0 || i > 3 || seen[i]) {
      fail(ErrorCode::DomainError, "not a permutation of {0,1,2,3}");
    }
    seen[i] = true;
  }
  LabelledTetrahedron out;
  for (size_t i = 0; i < 4; ++i) {
    out.vertices[i] = t.vertices[static_cast<size_t>(p[i])];
  }
  return out;
}

DihedralAngles angles_from_coords(const TriangleCoords& coords) {
  double r = coords.r(), s = coords.s(), t = coords.t();
  if (r <= tolerances().arithmetic || s <= tolerances().arithmetic ||
      t <= tolerances().arithmetic) {
    fail(ErrorCode::DeltaVertex,
         "angles are undefined at the vertices of the moduli triangle");
  }
  double clamp_tol = 1e-9;
  double a1 = clamp_unit((-r * r + s * s + t * t) / (2.0 * s * t), clamp_tol);
  double a2 = clamp_unit((r * r - s * s + t * t) / (2.0 * r * t), clamp_tol);
  double a3 = clamp_unit((r * r + s * s - t * t) / (2.0 * r * s), clamp_tol);
  return {std::acos(a1), std::acos(a2), std::acos(a3)};
}

}  // namespace idealtetra
