#include "idealtetra/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "idealtetra/errors.hpp"
#include "idealtetra/exterior.hpp"
#include "idealtetra/lobachevsky.hpp"
#include "idealtetra/seidel.hpp"
#include "idealtetra/sweep.hpp"
#include "idealtetra/tetra.hpp"

namespace idealtetra {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

MinkowskiVector random_ideal(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  double x = n(rng), y = n(rng), z = n(rng);
  double len = std::sqrt(x * x + y * y + z * z);
  while (len < 1e-6) {
    x = n(rng);
    y = n(rng);
    z = n(rng);
    len = std::sqrt(x * x + y * y + z * z);
  }
  return {1.0, x / len, y / len, z / len};
}

MultiVector random_multivector(Rng& rng, int grade) {
  MultiVector m(grade);
  for (int i = 0; i < m.size(); ++i) m[i] = uniform(rng, -1.0, 1.0);
  double norm = m.euclidean_norm();
  if (norm < 1e-3) return random_multivector(rng, grade);
  return m * (1.0 / norm);
}

TriangleCoords random_interior_delta(Rng& rng, double margin) {
  for (;;) {
    double r = uniform(rng, 0.0, 1.0);
    double s = uniform(rng, 0.0, 1.0);
    if (r + s > 1.0) {
      r = 1.0 - r;
      s = 1.0 - s;
    }
    double t = 1.0 - r - s;
    double mn = std::min({r, s, t});
    double mx = std::max({r, s, t});
    if (mn < margin) continue;
    if (mx > (1.0 - margin) / 2.0) continue;
    return {r, s, t};
  }
}

// Interior of the fundamental chart triangle with the given margin.
PlaneCoords random_interior_chart(Rng& rng, double margin) {
  for (;;) {
    double c = uniform(rng, 0.0, 0.25);
    double d = uniform(rng, 0.0, kSqrt3 / 3.0);
    if (c < margin) continue;
    if (d < kSqrt3 / 3.0 * c + margin) continue;
    if (d > -kSqrt3 * c + kSqrt3 / 3.0 - margin) continue;
    return {c, d};
  }
}

SeidelCoords random_interior_region(Rng& rng, double margin) {
  return seidel_forward(plane_to_delta(random_interior_chart(rng, margin)));
}

// Barycentric interior grid of the fundamental domain r <= s <= t, corners
// (1/3,1/3,1/3), (1/4,1/4,1/2), (0,1/2,1/2); n = 23 gives 231 points.
std::vector<TriangleCoords> delta1_interior_grid(int n) {
  const double A[3] = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  const double B[3] = {0.25, 0.25, 0.5};
  const double C[3] = {0.0, 0.5, 0.5};
  std::vector<TriangleCoords> out;
  for (int i = 1; i <= n - 2; ++i) {
    for (int j = 1; j <= n - 1 - i; ++j) {
      int k = n - i - j;
      double r = (i * A[0] + j * B[0] + k * C[0]) / n;
      double s = (i * A[1] + j * B[1] + k * C[1]) / n;
      double t = (i * A[2] + j * B[2] + k * C[2]) / n;
      out.emplace_back(r, s, t);
    }
  }
  return out;
}

double brute_immanant(const double g[4][4], bool signed_terms) {
  int idx[4] = {0, 1, 2, 3};
  double acc = 0.0;
  do {
    double term = 1.0;
    for (int i = 0; i < 4; ++i) term *= g[i][idx[i]];
    if (signed_terms) {
      int inv = 0;
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) inv += idx[i] > idx[j] ? 1 : 0;
      }
      if (inv % 2 == 1) term = -term;
    }
    acc += term;
  } while (std::next_permutation(idx, idx + 4));
  return acc;
}

bool solve4(double a[4][4], double b[4], double x[4]) {
  for (int col = 0; col < 4; ++col) {
    int best = col;
    double bv = std::fabs(a[col][col]);
    for (int row = col + 1; row < 4; ++row) {
      if (std::fabs(a[row][col]) > bv) {
        bv = std::fabs(a[row][col]);
        best = row;
      }
    }
    if (bv < 1e-14) return false;
    if (best != col) {
      for (int cc = 0; cc < 4; ++cc) std::swap(a[best][cc], a[col][cc]);
      std::swap(b[best], b[col]);
    }
    for (int row = col + 1; row < 4; ++row) {
      double f = a[row][col] / a[col][col];
      for (int cc = col; cc < 4; ++cc) a[row][cc] -= f * a[col][cc];
      b[row] -= f * b[col];
    }
  }
  for (int row = 3; row >= 0; --row) {
    double s = b[row];
    for (int cc = row + 1; cc < 4; ++cc) s -= a[row][cc] * x[cc];
    x[row] = s / a[row][row];
  }
  return true;
}

// Newton iteration for a diagonal d with row sums of D G D all equal to 1.
bool newton_row_sums(const double g[4][4], double d[4]) {
  for (int it = 0; it < 80; ++it) {
    double f[4];
    double jac[4][4];
    double norm = 0.0;
    for (int i = 0; i < 4; ++i) {
      double s = 0.0;
      for (int j = 0; j < 4; ++j) {
        if (j != i) s += g[i][j] * d[j];
      }
      f[i] = d[i] * s - 1.0;
      norm = std::max(norm, std::fabs(f[i]));
      for (int k = 0; k < 4; ++k) {
        jac[i][k] = (k == i) ? s : d[i] * g[i][k];
      }
    }
    if (norm < 1e-13) return true;
    double rhs[4] = {-f[0], -f[1], -f[2], -f[3]};
    double step[4];
    if (!solve4(jac, rhs, step)) return false;
    for (int i = 0; i < 4; ++i) d[i] += step[i];
  }
  return false;
}

PropertyResult prop(std::string name, double worst, double bound,
                    long long cases) {
  PropertyResult r;
  r.name = std::move(name);
  r.worst = worst;
  r.bound = bound;
  r.cases = cases;
  r.pass = worst <= bound;
  return r;
}

}  // namespace

std::vector<PropertyResult> verify_hodge(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PropertyResult> out;
  const int n = 1000;

  {  // a^*b = b^*a on equal grades
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      int k = i % 5;
      MultiVector a = random_multivector(rng, k);
      MultiVector b = random_multivector(rng, k);
      worst = std::max(
          worst,
          (wedge(a, hodge_star(b)) - wedge(b, hodge_star(a))).euclidean_norm());
    }
    out.push_back(prop("hodge.pairing_symmetry", worst, 1e-12, n));
  }
  {  // <a,b> = sigma * *(a ^ *b)
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      int k = i % 5;
      MultiVector a = random_multivector(rng, k);
      MultiVector b = random_multivector(rng, k);
      double lhs = induced_inner(a, b);
      double rhs = kSigma * hodge_star(wedge(a, hodge_star(b))).to_scalar();
      worst = std::max(worst, std::fabs(lhs - rhs));
    }
    out.push_back(prop("hodge.inner_via_star", worst, 1e-12, n));
  }
  {  // <a,*b> = (-1)^{k(4-k)} <*a,b>
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      int k = i % 5;
      MultiVector a = random_multivector(rng, k);
      MultiVector b = random_multivector(rng, 4 - k);
      double sign = (k * (4 - k)) % 2 == 0 ? 1.0 : -1.0;
      double lhs = induced_inner(a, hodge_star(b));
      double rhs = sign * induced_inner(hodge_star(a), b);
      worst = std::max(worst, std::fabs(lhs - rhs));
    }
    out.push_back(prop("hodge.star_adjoint", worst, 1e-12, n));
  }
  {  // **a = (-1)^{k(4-k)} sigma a, exact on the 16 basis blades
    double worst = 0.0;
    int cases = 0;
    for (int k = 0; k <= 4; ++k) {
      int count = MultiVector(k).size();
      for (int p = 0; p < count; ++p) {
        MultiVector blade = MultiVector::basis_blade(k, p);
        double sign = ((k * (4 - k)) % 2 == 0 ? 1.0 : -1.0) * kSigma;
        MultiVector dev = hodge_star(hodge_star(blade)) - blade * sign;
        worst = std::max(worst, dev.euclidean_norm());
        ++cases;
      }
    }
    out.push_back(prop("hodge.double_star_basis", worst, 0.0, cases));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      int k = i % 5;
      MultiVector a = random_multivector(rng, k);
      double sign = ((k * (4 - k)) % 2 == 0 ? 1.0 : -1.0) * kSigma;
      worst = std::max(
          worst, (hodge_star(hodge_star(a)) - a * sign).euclidean_norm());
    }
    out.push_back(prop("hodge.double_star_random", worst, 1e-12, n));
  }
  {  // the star permutes orthonormal components, so norms are preserved
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      int k = i % 5;
      MultiVector a = random_multivector(rng, k);
      worst = std::max(worst, std::fabs(hodge_star(a).euclidean_norm() -
                                        a.euclidean_norm()));
    }
    out.push_back(prop("hodge.injectivity_norm", worst, 1e-12, n));
  }
  {  // defining identity x ^ *a = <x,a> omega
    double worst = 0.0;
    MultiVector omega = volume_element();
    for (int i = 0; i < n; ++i) {
      int k = i % 5;
      MultiVector x = random_multivector(rng, k);
      MultiVector a = random_multivector(rng, k);
      MultiVector dev =
          wedge(x, hodge_star(a)) - omega * induced_inner(x, a);
      worst = std::max(worst, dev.euclidean_norm());
    }
    out.push_back(prop("hodge.defining_identity", worst, 1e-12, n));
  }
  {
    MultiVector omega = volume_element();
    double worst = std::fabs(induced_inner(omega, omega) - kSigma);
    worst = std::max(worst, std::fabs(hodge_star(omega).to_scalar() - kSigma));
    out.push_back(prop("hodge.volume_element", worst, 0.0, 2));
  }
  {  // polar point is orthogonal to its span
    double worst = 0.0;
    const int cases = 300;
    for (int i = 0; i < cases; ++i) {
      MinkowskiVector v1 = random_ideal(rng);
      MinkowskiVector v2 = random_ideal(rng);
      MinkowskiVector v3 = random_ideal(rng);
      MinkowskiVector u = polar_point(v1, v2, v3);
      for (const auto& v : {v1, v2, v3}) {
        worst = std::max(worst, std::fabs(inner(v, u)) /
                                    (v.euclidean_norm() * u.euclidean_norm()));
      }
    }
    out.push_back(prop("hodge.polar_orthogonality", worst, 1e-10, cases));
  }
  {  // mirror images across a plane land on opposite sides
    const int cases = 200;
    double failures = 0.0;
    for (int i = 0; i < cases; ++i) {
      MinkowskiVector v1 = random_ideal(rng);
      MinkowskiVector v2 = random_ideal(rng);
      MinkowskiVector v3 = random_ideal(rng);
      if (inner(v1, v2) < 0.0) v2 = -v2;
      MinkowskiVector u = polar_point(v1, v2, v3);
      MinkowskiVector p = v1 + v2;  // positive point on the plane
      std::normal_distribution<double> nd(0.0, 1.0);
      double nx = nd(rng), ny = nd(rng), nz = nd(rng);
      double len = std::sqrt(nx * nx + ny * ny + nz * nz) + 1e-300;
      double rho = uniform(rng, 0.0, 0.95);  // keeps the point positive
      MinkowskiVector v{1.0, rho * nx / len, rho * ny / len, rho * nz / len};
      double uv = inner(u, v);
      if (std::fabs(uv) < 1e-6 || std::fabs(inner(v, p)) < 1e-6) {
        --i;
        continue;
      }
      MinkowskiVector mirrored = v - u * (2.0 * uv / inner(u, u));
      if (points_toward(u, p, v) == points_toward(u, p, mirrored)) {
        failures += 1.0;
      }
    }
    out.push_back(prop("hodge.mirror_sides", failures, 0.0, cases));
  }
  return out;
}

std::vector<PropertyResult> verify_gram(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PropertyResult> out;
  // 105 interior grid points of Delta: i+j+k = 32 with 1 <= i,j,k <= 15,
  // which keeps every coordinate strictly below 1/2.
  std::vector<TriangleCoords> grid;
  for (int i = 1; i <= 15; ++i) {
    for (int j = 1; j <= 15; ++j) {
      int k = 32 - i - j;
      if (k < 1 || k > 15) continue;
      grid.emplace_back(i / 32.0, j / 32.0, k / 32.0);
    }
  }

  {  // synthesized vertices reproduce the doubly stochastic pattern
    double worst = 0.0;
    long long cases = 0;
    auto check = [&](const TriangleCoords& x) {
      LabelledTetrahedron t = synthesize(x);
      auto g = [&t](int i, int j) {
        return inner(t.vertices[static_cast<size_t>(i)],
                     t.vertices[static_cast<size_t>(j)]);
      };
      double expected[4][4] = {{0.0, x.r(), x.s(), x.t()},
                               {x.r(), 0.0, x.t(), x.s()},
                               {x.s(), x.t(), 0.0, x.r()},
                               {x.t(), x.s(), x.r(), 0.0}};
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          worst = std::max(worst, std::fabs(g(i, j) - expected[i][j]));
        }
      }
      ++cases;
    };
    for (const auto& x : grid) check(x);
    for (int i = 0; i < 100; ++i) check(random_interior_delta(rng, 0.01));
    out.push_back(prop("gram.synthesize_pattern", worst, 1e-12, cases));
  }
  {  // coordinates of synthesized vertices round-trip
    double worst = 0.0;
    for (const auto& x : grid) {
      TriangleCoords back = doubly_stochastic_coords(synthesize(x));
      worst = std::max({worst, std::fabs(back.r() - x.r()),
                        std::fabs(back.s() - x.s()),
                        std::fabs(back.t() - x.t())});
    }
    out.push_back(
        prop("gram.round_trip", worst, 1e-10,
             static_cast<long long>(grid.size())));
  }
  {  // invariance under independent rescaling of representatives
    double worst = 0.0;
    const int cases = 200;
    for (int i = 0; i < cases; ++i) {
      TriangleCoords x = random_interior_delta(rng, 0.01);
      LabelledTetrahedron t = synthesize(x);
      for (auto& v : t.vertices) {
        double scale = std::exp(uniform(rng, -3.0, 3.0));
        if (uniform(rng, 0.0, 1.0) < 0.5) scale = -scale;
        v = v * scale;
      }
      TriangleCoords back = doubly_stochastic_coords(t);
      worst = std::max({worst, std::fabs(back.r() - x.r()),
                        std::fabs(back.s() - x.s()),
                        std::fabs(back.t() - x.t())});
    }
    out.push_back(prop("gram.scale_invariance", worst, 1e-12, cases));
  }
  {  // the Klein four group fixes the coordinates
    double worst = 0.0;
    const VertexPermutation kH[3] = {
        {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int cases = 100;
    for (int i = 0; i < cases; ++i) {
      TriangleCoords x = random_interior_delta(rng, 0.01);
      LabelledTetrahedron t = synthesize(x);
      for (const auto& p : kH) {
        TriangleCoords back = doubly_stochastic_coords(permute_vertices(t, p));
        worst = std::max({worst, std::fabs(back.r() - x.r()),
                          std::fabs(back.s() - x.s()),
                          std::fabs(back.t() - x.t())});
      }
    }
    out.push_back(prop("gram.klein_four_kernel", worst, 1e-12, 3 * cases));
  }
  {  // transpositions act through the S3 quotient
    double worst = 0.0;
    const int cases = 100;
    for (int i = 0; i < cases; ++i) {
      TriangleCoords x = random_interior_delta(rng, 0.01);
      LabelledTetrahedron t = synthesize(x);
      struct Case {
        VertexPermutation p;
        int expect[3];  // image indices into (r,s,t)
      };
      const Case cs[3] = {
          {{1, 0, 2, 3}, {0, 2, 1}},  // swap v1,v2 -> (r,t,s)
          {{0, 2, 1, 3}, {1, 0, 2}},  // swap v2,v3 -> (s,r,t)
          {{0, 1, 3, 2}, {0, 2, 1}},  // swap v3,v4 -> (r,t,s)
      };
      double in[3] = {x.r(), x.s(), x.t()};
      for (const auto& c : cs) {
        TriangleCoords back =
            doubly_stochastic_coords(permute_vertices(t, c.p));
        double got[3] = {back.r(), back.s(), back.t()};
        for (int k = 0; k < 3; ++k) {
          worst = std::max(worst, std::fabs(got[k] - in[c.expect[k]]));
        }
      }
    }
    out.push_back(prop("gram.s3_quotient_action", worst, 1e-12, 3 * cases));
  }
  {  // numerical search finds no second doubly stochastic Gram form
    double worst = 0.0;
    const int cases = 25;
    for (int i = 0; i < cases; ++i) {
      TriangleCoords x = random_interior_delta(rng, 0.03);
      LabelledTetrahedron t = synthesize(x);
      for (auto& v : t.vertices) {
        double scale = std::exp(uniform(rng, -1.0, 1.0));
        if (uniform(rng, 0.0, 1.0) < 0.5) scale = -scale;
        v = v * scale;
      }
      double g[4][4];
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          g[a][b] = inner(t.vertices[static_cast<size_t>(a)],
                          t.vertices[static_cast<size_t>(b)]);
        }
      }
      double expected[4][4] = {{0.0, x.r(), x.s(), x.t()},
                               {x.r(), 0.0, x.t(), x.s()},
                               {x.s(), x.t(), 0.0, x.r()},
                               {x.t(), x.s(), x.r(), 0.0}};
      for (int attempt = 0; attempt < 64; ++attempt) {
        double d[4];
        for (double& v : d) {
          v = uniform(rng, 0.1, 2.0) * (uniform(rng, 0.0, 1.0) < 0.5 ? -1 : 1);
        }
        if (!newton_row_sums(g, d)) continue;
        double min_entry = 0.0;
        for (int a = 0; a < 4; ++a) {
          for (int b = a + 1; b < 4; ++b) {
            min_entry = std::min(min_entry, d[a] * g[a][b] * d[b]);
          }
        }
        if (min_entry < -1e-9) continue;  // row sums 1 but not non-negative
        for (int a = 0; a < 4; ++a) {
          for (int b = 0; b < 4; ++b) {
            double entry = (a == b) ? 0.0 : d[a] * g[a][b] * d[b];
            worst = std::max(worst, std::fabs(entry - expected[a][b]));
          }
        }
      }
    }
    out.push_back(prop("gram.doubly_stochastic_unique", worst, 1e-8, cases));
  }
  {  // law of sines against the Euclidean triangle with sides (r,s,t)
    double worst = 0.0;
    const int cases = 200;
    for (int i = 0; i < cases; ++i) {
      TriangleCoords x = random_interior_delta(rng, 0.01);
      DihedralAngles a = angles_from_coords(x);
      double q1 = x.r() / std::sin(a.theta1());
      double q2 = x.s() / std::sin(a.theta2());
      double q3 = x.t() / std::sin(a.theta3());
      worst = std::max(
          {worst, std::fabs(q1 - q2) / q1, std::fabs(q1 - q3) / q1});
    }
    out.push_back(prop("gram.law_of_sines", worst, 1e-9, cases));
  }
  {
    double worst = 0.0;
    const int cases = 200;
    for (int i = 0; i < cases; ++i) {
      TriangleCoords x = random_interior_delta(rng, 0.005);
      DihedralAngles a = angles_from_coords(x);
      worst = std::max(
          worst, std::fabs(a.theta1() + a.theta2() + a.theta3() - kPi));
    }
    out.push_back(prop("gram.angle_sum", worst, 1e-10, cases));
  }
  {  // vertex-formula dihedral angles match the coordinate formulas
    double worst = 0.0;
    const int cases = 100;
    for (int i = 0; i < cases; ++i) {
      TriangleCoords x = random_interior_delta(rng, 0.02);
      LabelledTetrahedron t = synthesize(x);
      const auto& v = t.vertices;
      DihedralAngles a = angles_from_coords(x);
      double e12 = dihedral_angle(v[0], v[1], v[2], v[3]);
      double e13 = dihedral_angle(v[0], v[2], v[1], v[3]);
      double e14 = dihedral_angle(v[0], v[3], v[1], v[2]);
      double e34 = dihedral_angle(v[2], v[3], v[0], v[1]);
      worst = std::max({worst, std::fabs(e12 - a.theta1()),
                        std::fabs(e13 - a.theta2()),
                        std::fabs(e14 - a.theta3()),
                        std::fabs(e34 - a.theta1())});
    }
    out.push_back(prop("gram.dihedral_pipeline", worst, 1e-9, 4 * cases));
  }
  {  // dihedral angle is invariant under positive rescaling
    double worst = 0.0;
    const int cases = 100;
    for (int i = 0; i < cases; ++i) {
      TriangleCoords x = random_interior_delta(rng, 0.02);
      LabelledTetrahedron t = synthesize(x);
      double base =
          dihedral_angle(t.vertices[0], t.vertices[1], t.vertices[2],
                         t.vertices[3]);
      for (auto& v : t.vertices) v = v * std::exp(uniform(rng, -2.0, 2.0));
      double scaled =
          dihedral_angle(t.vertices[0], t.vertices[1], t.vertices[2],
                         t.vertices[3]);
      worst = std::max(worst, std::fabs(base - scaled));
    }
    out.push_back(prop("gram.dihedral_scale_invariance", worst, 1e-12, cases));
  }
  {  // the allowed coincidence patterns land on the triangle's vertices
    double worst = 0.0;
    MinkowskiVector v = random_ideal(rng);
    MinkowskiVector w = random_ideal(rng);
    auto dev = [](const TriangleCoords& got, double r, double s, double t) {
      return std::max({std::fabs(got.r() - r), std::fabs(got.s() - s),
                       std::fabs(got.t() - t)});
    };
    worst = std::max(
        worst, dev(doubly_stochastic_coords({{v, v, w, w}}), 0.0, 0.5, 0.5));
    worst = std::max(
        worst, dev(doubly_stochastic_coords({{v, w, v, w}}), 0.5, 0.0, 0.5));
    worst = std::max(
        worst, dev(doubly_stochastic_coords({{v, w, w, v}}), 0.5, 0.5, 0.0));
    bool threw = false;
    try {
      doubly_stochastic_coords({{v, v, w, random_ideal(rng)}});
    } catch (const Error& e) {
      threw = e.code() == ErrorCode::Inadmissible;
    }
    if (!threw) worst = std::max(worst, 1.0);
    threw = false;
    try {
      doubly_stochastic_coords({{v, v, v, w}});
    } catch (const Error& e) {
      threw = e.code() == ErrorCode::Inadmissible;
    }
    if (!threw) worst = std::max(worst, 1.0);
    out.push_back(prop("gram.coincidence_patterns", worst, 1e-15, 5));
  }
  return out;
}

std::vector<PropertyResult> verify_lobachevsky(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PropertyResult> out;
  {
    double worst = 0.0;
    const int cases = 2000;
    for (int i = 0; i < cases; ++i) {
      double x = uniform(rng, -10.0, 10.0);
      worst = std::max(worst, std::fabs(lobachevsky(x) + lobachevsky(-x)));
    }
    out.push_back(prop("lobachevsky.oddness", worst, 1e-12, cases));
  }
  {
    double worst = 0.0;
    const int cases = 2000;
    for (int i = 0; i < cases; ++i) {
      double x = uniform(rng, -10.0, 10.0);
      worst =
          std::max(worst, std::fabs(lobachevsky(x + kPi) - lobachevsky(x)));
    }
    out.push_back(prop("lobachevsky.pi_periodicity", worst, 1e-12, cases));
  }
  {
    double worst = 0.0;
    const int cases = 201;
    for (int i = 0; i < cases; ++i) {
      double x = kPi * static_cast<double>(i) / (cases - 1);
      worst = std::max(worst, std::fabs(lobachevsky(x) -
                                        lobachevsky_quadrature(x, 1e-13)));
    }
    out.push_back(prop("lobachevsky.quadrature_agreement", worst, 1e-11,
                       cases));
  }
  {
    double violations = 0.0;
    const int cases = 500;
    for (int i = 1; i < cases; ++i) {
      double x = kPi * static_cast<double>(i) / cases;
      double v = lobachevsky(x);
      bool ok = (x < 0.5 * kPi)   ? v > 0.0
                : (x > 0.5 * kPi) ? v < 0.0
                                  : true;
      if (!ok) violations += 1.0;
    }
    out.push_back(prop("lobachevsky.sign_structure", violations, 0.0,
                       cases - 1));
  }
  {
    double worst = std::fabs(lobachevsky(0.0));
    worst = std::max(worst, std::fabs(lobachevsky(0.5 * kPi)));
    worst = std::max(worst, std::fabs(lobachevsky(kPi)));
    out.push_back(prop("lobachevsky.zeros", worst, 1e-12, 3));
  }
  return out;
}

std::vector<PropertyResult> verify_roundtrip(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PropertyResult> out;
  std::vector<TriangleCoords> grid = delta1_interior_grid(23);

  {
    double worst = 0.0;
    for (const auto& x : grid) {
      TriangleCoords back =
          plane_to_delta(seidel_invert(seidel_forward(x)));
      TriangleCoords cx = canonicalize(x);
      TriangleCoords cb = canonicalize(back);
      worst = std::max({worst, std::fabs(cb.r() - cx.r()),
                        std::fabs(cb.s() - cx.s()),
                        std::fabs(cb.t() - cx.t())});
    }
    out.push_back(prop("seidel.round_trip", worst, 1e-9,
                       static_cast<long long>(grid.size())));
  }
  {
    double worst = 0.0;
    for (const auto& x : grid) {
      SeidelCoords sc = seidel_forward(x);
      TriangleCoords roots = seidel_invert_cubic(sc);
      TriangleCoords pipeline =
          canonicalize(plane_to_delta(seidel_invert(sc)));
      worst = std::max({worst, std::fabs(roots.r() - pipeline.r()),
                        std::fabs(roots.s() - pipeline.s()),
                        std::fabs(roots.t() - pipeline.t())});
    }
    out.push_back(prop("seidel.cubic_oracle_agreement", worst, 1e-9,
                       static_cast<long long>(grid.size())));
  }
  {  // the inverse satisfies both defining equations
    double worst = 0.0;
    for (const auto& x : grid) {
      SeidelCoords sc = seidel_forward(x);
      PlaneCoords cd = seidel_invert(sc);
      double c = cd.c(), d = cd.d();
      double eq1 = (2.0 * kSqrt3 * d + 1.0) *
                       (9.0 * c * c - (kSqrt3 * d - 1.0) * (kSqrt3 * d - 1.0)) /
                       27.0 -
                   sc.alpha();
      double eq2 = (3.0 * c * c + 3.0 * d * d + 2.0) / 6.0 - sc.omega();
      worst = std::max({worst, std::fabs(eq1), std::fabs(eq2)});
    }
    out.push_back(prop("seidel.inverse_equations", worst, 1e-10,
                       static_cast<long long>(grid.size())));
  }
  {  // closed forms against brute-force determinant and permanent
    double worst = 0.0;
    const int cases = 200;
    for (int i = 0; i < cases; ++i) {
      TriangleCoords x = random_interior_delta(rng, 0.005);
      double g[4][4] = {{0.0, x.r(), x.s(), x.t()},
                        {x.r(), 0.0, x.t(), x.s()},
                        {x.s(), x.t(), 0.0, x.r()},
                        {x.t(), x.s(), x.r(), 0.0}};
      SeidelCoords sc = seidel_forward(x);
      worst = std::max(worst, std::fabs(brute_immanant(g, true) - sc.alpha()));
      worst = std::max(worst, std::fabs(brute_immanant(g, false) -
                                        sc.omega() * sc.omega()));
    }
    out.push_back(prop("seidel.immanant_brute_force", worst, 1e-12,
                       2 * cases));
  }
  {  // the forward map lands inside the region, boundary included
    double failures = 0.0;
    const int cases = 500;
    for (int i = 0; i < cases; ++i) {
      TriangleCoords x = random_interior_delta(rng, 0.001);
      if (!region_contains(seidel_forward(x))) failures += 1.0;
    }
    for (const auto& x :
         {TriangleCoords{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
          TriangleCoords{0.0, 0.5, 0.5}, TriangleCoords{0.25, 0.25, 0.5},
          TriangleCoords{0.2, 0.3, 0.5}}) {
      if (!region_contains(seidel_forward(x))) failures += 1.0;
    }
    out.push_back(prop("seidel.forward_in_region", failures, 0.0, cases + 4));
  }
  {  // discriminant identity b0^2/4 + a0^3/27 = -27 c^2 (3d^2-c^2)^2
    double worst = 0.0;
    const int cases = 500;
    for (int i = 0; i < cases; ++i) {
      // sample the full chart triangle, not only the fundamental domain
      double u1 = uniform(rng, 0.0, 1.0);
      double u2 = uniform(rng, 0.0, 1.0);
      if (u1 + u2 > 1.0) {
        u1 = 1.0 - u1;
        u2 = 1.0 - u2;
      }
      double w0 = 1.0 - u1 - u2;
      double c = u1 * 0.0 + u2 * 0.5 + w0 * (-0.5);
      double d =
          (u1 * 2.0 * kSqrt3 / 6.0 - (u2 + w0) * kSqrt3 / 6.0);
      double alpha = (2.0 * kSqrt3 * d + 1.0) *
                     (9.0 * c * c - (kSqrt3 * d - 1.0) * (kSqrt3 * d - 1.0)) /
                     27.0;
      double omega = (3.0 * c * c + 3.0 * d * d + 2.0) / 6.0;
      double a0 = 6.0 * (1.0 - 3.0 * omega);
      double b0 = 27.0 * alpha - 18.0 * omega + 7.0;
      double lhs = b0 * b0 / 4.0 + a0 * a0 * a0 / 27.0;
      double rhs = -27.0 * c * c * (3.0 * d * d - c * c) *
                   (3.0 * d * d - c * c);
      worst = std::max(worst, std::fabs(lhs - rhs));
      if (lhs > 1e-10) worst = std::max(worst, lhs);
    }
    out.push_back(prop("seidel.discriminant_identity", worst, 1e-10, cases));
  }
  return out;
}

std::vector<PropertyResult> verify_monotonicity(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PropertyResult> out;
  {
    double worst = -HUGE_VAL;  // max of d_alpha and -d_omega; must stay < 0
    const int cases = 500;
    for (int i = 0; i < cases; ++i) {
      SeidelCoords sc = random_interior_region(rng, 0.02);
      VolumeDerivatives vd = volume_derivatives(sc);
      worst = std::max({worst, vd.d_alpha, -vd.d_omega});
    }
    out.push_back(prop("seidel.derivative_signs", worst, 0.0, 2 * cases));
  }
  {
    double worst = 0.0;
    const int cases = 50;
    const double h = 1e-6;
    for (int i = 0; i < cases; ++i) {
      SeidelCoords sc = random_interior_region(rng, 0.02);
      VolumeDerivatives vd = volume_derivatives(sc);
      double fd_alpha = (volume({sc.alpha() + h, sc.omega()}) -
                         volume({sc.alpha() - h, sc.omega()})) /
                        (2.0 * h);
      double fd_omega = (volume({sc.alpha(), sc.omega() + h}) -
                         volume({sc.alpha(), sc.omega() - h})) /
                        (2.0 * h);
      worst = std::max(worst,
                       std::fabs(fd_alpha - vd.d_alpha) / std::fabs(vd.d_alpha));
      worst = std::max(worst,
                       std::fabs(fd_omega - vd.d_omega) / std::fabs(vd.d_omega));
    }
    out.push_back(prop("seidel.finite_difference", worst, 1e-5, 2 * cases));
  }
  {  // volume strictly decreasing in alpha along horizontal chords
    double worst = -HUGE_VAL;  // max adjacent increment; must be < -1e-12
    const int chords = 20, samples = 200;
    for (int j = 1; j <= chords; ++j) {
      double w = 1.0 / 3.0 + (1.0 / 6.0) * j / (chords + 1);
      SweepSpec spec{SweepAxis::Omega, w, samples, OutputFormat::Csv};
      auto rows = run_sweep(spec);
      for (size_t i = 0; i + 1 < rows.size(); ++i) {
        worst = std::max(worst, rows[i + 1].volume - rows[i].volume);
      }
    }
    out.push_back(prop("seidel.monotone_in_alpha", worst, -1e-12,
                       chords * (samples - 1)));
  }
  {  // volume strictly increasing in omega along vertical chords
    double worst = -HUGE_VAL;
    const int chords = 20, samples = 200;
    for (int j = 1; j <= chords; ++j) {
      double a = -1.0 / 27.0 + (1.0 / 27.0) * j / (chords + 1);
      SweepSpec spec{SweepAxis::Alpha, a, samples, OutputFormat::Csv};
      auto rows = run_sweep(spec);
      for (size_t i = 0; i + 1 < rows.size(); ++i) {
        worst = std::max(worst, rows[i].volume - rows[i + 1].volume);
      }
    }
    out.push_back(prop("seidel.monotone_in_omega", worst, -1e-12,
                       chords * (samples - 1)));
  }
  {
    double min_value = HUGE_VAL;
    const int na = 100, nb = 100;
    for (int i = 1; i <= na; ++i) {
      double a = 1.0 + 99.0 * i / na;
      for (int j = 1; j <= nb; ++j) {
        double b = static_cast<double>(j) / (nb + 1);
        min_value = std::min(min_value, kprime(a, b));
      }
    }
    out.push_back(prop("seidel.kprime_positive", -min_value, 0.0, na * nb));
  }
  {
    double worst = 0.0;
    const int na = 50, nb = 50;
    for (int i = 1; i <= na; ++i) {
      double a = 1.0 + 99.0 * i / na;
      for (int j = 1; j <= nb; ++j) {
        double b = static_cast<double>(j) / (nb + 1);
        worst = std::max(worst,
                         std::fabs(kprime(a, b) - kprime_series(a, b)));
      }
    }
    out.push_back(prop("seidel.kprime_series_match", worst, 1e-9, na * nb));
  }
  return out;
}

std::vector<PropertyResult> verify_extremal(std::uint64_t seed) {
  (void)seed;  // the scan is deterministic
  std::vector<PropertyResult> out;
  ExtremalScanResult scan = extremal_scan(400);
  {
    double worst = std::max({std::fabs(scan.argmin_per.r() - 1.0 / 3.0),
                             std::fabs(scan.argmin_per.s() - 1.0 / 3.0),
                             std::fabs(scan.argmin_per.t() - 1.0 / 3.0)});
    out.push_back(prop("extremal.permanent_argmin", worst, 1e-4, 1));
    out.push_back(prop("extremal.permanent_value",
                       std::fabs(scan.min_per - 1.0 / 9.0), 1e-6, 1));
  }
  {
    double worst = std::max({std::fabs(scan.argmin_det.r() - 1.0 / 3.0),
                             std::fabs(scan.argmin_det.s() - 1.0 / 3.0),
                             std::fabs(scan.argmin_det.t() - 1.0 / 3.0)});
    out.push_back(prop("extremal.determinant_argmin", worst, 1e-4, 1));
    out.push_back(prop("extremal.determinant_value",
                       std::fabs(scan.min_det + 1.0 / 27.0), 1e-6, 1));
  }
  {  // outside the triangle inequalities the determinant is non-negative
    double min_det = HUGE_VAL;
    long long cases = 0;
    const int n = 400;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n - i; ++j) {
        double r = static_cast<double>(i) / n;
        double s = static_cast<double>(j) / n;
        double t = 1.0 - r - s;
        if (r <= s + t && s <= t + r && t <= r + s) continue;
        double det =
            -(r + s + t) * (-r + s + t) * (r - s + t) * (r + s - t);
        min_det = std::min(min_det, det);
        ++cases;
      }
    }
    out.push_back(prop("extremal.det_nonneg_outside", -min_det, 0.0, cases));
  }
  {  // volume stays within [0, vol(regular)] over a dense grid of the region
    double vmax = volume({RegionS::kRegularAlpha, RegionS::kRegularOmega});
    double excess = -HUGE_VAL;
    double min_volume = HUGE_VAL;
    RegionS b;
    const int nw = 100, na = 100;
    long long cases = 0;
    for (int i = 0; i <= nw; ++i) {
      double w = 1.0 / 3.0 + (1.0 / 6.0) * i / nw;
      double lo = b.f1(w);
      double hi = (w <= RegionS::kSquareOmega) ? b.f2(w) : 0.0;
      for (int j = 0; j <= na; ++j) {
        double a = lo + (hi - lo) * j / na;
        double v = volume({a, w});
        excess = std::max(excess, v - vmax);
        min_volume = std::min(min_volume, v);
        ++cases;
      }
    }
    out.push_back(prop("extremal.volume_maximality", excess, 1e-12, cases));
    out.push_back(prop("extremal.volume_nonnegative", -min_volume, 0.0,
                       cases));
  }
  return out;
}

std::vector<PropertyResult> verify_all(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  for (auto* suite : {&verify_hodge, &verify_gram, &verify_lobachevsky,
                      &verify_roundtrip, &verify_monotonicity,
                      &verify_extremal}) {
    auto part = (*suite)(seed);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace idealtetra
