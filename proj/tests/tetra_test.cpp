#include <cmath>
#include <numbers>

#include "doctest.h"
#include "idealtetra/tetra.hpp"
#include "test_util.hpp"

using namespace idealtetra;
using testutil::Rng;
using testutil::random_ideal;
using testutil::random_interior_delta;
using testutil::thrown_code;
using testutil::uniform;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

double coord_dev(const TriangleCoords& a, const TriangleCoords& b) {
  return std::max({std::fabs(a.r() - b.r()), std::fabs(a.s() - b.s()),
                   std::fabs(a.t() - b.t())});
}

}  // namespace

TEST_CASE("tetra: sign normalization") {
  Rng rng(21);
  TriangleCoords x = random_interior_delta(rng, 0.05);
  LabelledTetrahedron t = synthesize(x);

  // already positive Gram: unchanged
  LabelledTetrahedron n = sign_normalize(t);
  for (size_t i = 0; i < 4; ++i) {
    CHECK((n.vertices[i] - t.vertices[i]).euclidean_norm() == 0.0);
  }

  // negating one vertex is undone up to the allowed global signs
  LabelledTetrahedron flipped = t;
  flipped.vertices[1] = -flipped.vertices[1];
  LabelledTetrahedron back = sign_normalize(flipped);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      CHECK(inner(back.vertices[static_cast<size_t>(i)],
                  back.vertices[static_cast<size_t>(j)]) > 0.0);
    }
  }

  // random sign patterns always normalize for synthesized vertices
  for (int k = 0; k < 50; ++k) {
    LabelledTetrahedron scrambled = synthesize(random_interior_delta(rng, 0.02));
    for (auto& v : scrambled.vertices) {
      if (uniform(rng, 0, 1) < 0.5) v = -v;
    }
    LabelledTetrahedron fixed = sign_normalize(scrambled);
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        CHECK(inner(fixed.vertices[static_cast<size_t>(i)],
                    fixed.vertices[static_cast<size_t>(j)]) > 0.0);
      }
    }
  }

  MinkowskiVector v = random_ideal(rng);
  LabelledTetrahedron bad{{v, v * 2.0, random_ideal(rng), random_ideal(rng)}};
  CHECK(thrown_code([&] { sign_normalize(bad); }) ==
        ErrorCode::CoincidentVertices);
}

TEST_CASE("tetra: doubly stochastic coordinates") {
  // round trip at the regular point
  TriangleCoords third{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  CHECK(coord_dev(doubly_stochastic_coords(synthesize(third)), third) <=
        1e-14);

  // Gram products (4, 1, 1) normalize to (1/2, 1/4, 1/4): build it by
  // scaling the synthesized representative of that very triple
  TriangleCoords half{0.5, 0.25, 0.25};
  LabelledTetrahedron t = synthesize(half);
  Rng rng(22);
  for (auto& v : t.vertices) v = v * std::exp(uniform(rng, -1.0, 1.0));
  CHECK(coord_dev(doubly_stochastic_coords(t), half) <= 1e-13);

  // coincidence patterns map to the vertices of the moduli triangle
  MinkowskiVector a = random_ideal(rng);
  MinkowskiVector b = random_ideal(rng);
  CHECK(coord_dev(doubly_stochastic_coords({{a, a, b, b}}),
                  TriangleCoords{0.0, 0.5, 0.5}) == 0.0);
  CHECK(coord_dev(doubly_stochastic_coords({{a, b, a, b}}),
                  TriangleCoords{0.5, 0.0, 0.5}) == 0.0);
  CHECK(coord_dev(doubly_stochastic_coords({{a, b, b, a}}),
                  TriangleCoords{0.5, 0.5, 0.0}) == 0.0);

  // inadmissible patterns
  MinkowskiVector c = random_ideal(rng);
  CHECK(thrown_code([&] { doubly_stochastic_coords({{a, a, b, c}}); }) ==
        ErrorCode::Inadmissible);
  CHECK(thrown_code([&] { doubly_stochastic_coords({{a, a, a, b}}); }) ==
        ErrorCode::Inadmissible);
  CHECK(thrown_code([&] {
          doubly_stochastic_coords(
              {{MinkowskiVector::basis(1), a, b, c}});
        }) == ErrorCode::NotIdeal);
}

TEST_CASE("tetra: round trip on an interior grid") {
  double worst = 0.0;
  int count = 0;
  for (int i = 1; i <= 15; ++i) {
    for (int j = 1; j <= 15; ++j) {
      int k = 32 - i - j;
      if (k < 1 || k > 15) continue;
      TriangleCoords x{i / 32.0, j / 32.0, k / 32.0};
      worst = std::max(worst, coord_dev(doubly_stochastic_coords(synthesize(x)), x));
      ++count;
    }
  }
  CHECK(count >= 100);
  CHECK(worst <= 1e-10);
}

TEST_CASE("tetra: scale invariance of the coordinates") {
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    TriangleCoords x = random_interior_delta(rng, 0.01);
    LabelledTetrahedron t = synthesize(x);
    for (auto& v : t.vertices) {
      double s = std::exp(uniform(rng, -3.0, 3.0));
      if (uniform(rng, 0, 1) < 0.5) s = -s;
      v = v * s;
    }
    CHECK(coord_dev(doubly_stochastic_coords(t), x) <= 1e-12);
  }
}

TEST_CASE("tetra: synthesize reproduces the Gram pattern") {
  // perturbed example near (1/4, 1/4, 1/2)
  double eps = 1e-3;
  TriangleCoords x{0.25, 0.25 + eps / 2.0, 0.5 - eps / 2.0};
  LabelledTetrahedron t = synthesize(x);
  auto g = [&t](int i, int j) {
    return inner(t.vertices[static_cast<size_t>(i)],
                 t.vertices[static_cast<size_t>(j)]);
  };
  double expected[4][4] = {{0, x.r(), x.s(), x.t()},
                           {x.r(), 0, x.t(), x.s()},
                           {x.s(), x.t(), 0, x.r()},
                           {x.t(), x.s(), x.r(), 0}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(std::fabs(g(i, j) - expected[i][j]) <= 1e-12);
    }
  }
  // all four synthesized vertices are null, including the b4-coefficient one
  for (const auto& v : t.vertices) {
    CHECK(classify(v) == PointClass::Null);
  }

  CHECK(thrown_code([] { synthesize({0.0, 0.5, 0.5}); }) ==
        ErrorCode::DeltaVertex);
}

TEST_CASE("tetra: chart conversions") {
  PlaneCoords origin = delta_to_plane({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  CHECK(std::fabs(origin.c()) <= 1e-15);
  CHECK(std::fabs(origin.d()) <= 1e-15);

  PlaneCoords vertex = delta_to_plane({0.0, 0.5, 0.5});
  CHECK(std::fabs(vertex.c()) <= 1e-15);
  CHECK(std::fabs(vertex.d() - kSqrt3 / 3.0) <= 1e-15);

  TriangleCoords back = plane_to_delta(PlaneCoords{0.0, kSqrt3 / 3.0});
  CHECK(coord_dev(back, TriangleCoords{0.0, 0.5, 0.5}) <= 1e-15);

  Rng rng(24);
  for (int k = 0; k < 200; ++k) {
    TriangleCoords x = random_interior_delta(rng, 0.002);
    CHECK(coord_dev(plane_to_delta(delta_to_plane(x)), x) <= 1e-15);
  }

  CHECK(thrown_code([] { PlaneCoords{0.4, 0.5}; }) == ErrorCode::OutOfChart);
}

TEST_CASE("tetra: canonicalize") {
  CHECK(coord_dev(canonicalize({0.5, 0.25, 0.25}),
                  TriangleCoords{0.25, 0.25, 0.5}) == 0.0);
  TriangleCoords reg{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  CHECK(coord_dev(canonicalize(reg), reg) == 0.0);

  // all six permutations share one canonical representative
  double v[3] = {0.2, 0.3, 0.5};
  int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& p : perm) {
    TriangleCoords c = canonicalize({v[p[0]], v[p[1]], v[p[2]]});
    CHECK(coord_dev(c, TriangleCoords{0.2, 0.3, 0.5}) == 0.0);
  }
}

TEST_CASE("tetra: vertex permutations") {
  TriangleCoords x{0.2, 0.3, 0.5};
  LabelledTetrahedron t = synthesize(x);

  LabelledTetrahedron id = permute_vertices(t, {0, 1, 2, 3});
  for (size_t i = 0; i < 4; ++i) {
    CHECK((id.vertices[i] - t.vertices[i]).euclidean_norm() == 0.0);
  }

  // Klein four group preserves the coordinates
  CHECK(coord_dev(doubly_stochastic_coords(permute_vertices(t, {1, 0, 3, 2})),
                  x) <= 1e-13);
  CHECK(coord_dev(doubly_stochastic_coords(permute_vertices(t, {2, 3, 0, 1})),
                  x) <= 1e-13);
  CHECK(coord_dev(doubly_stochastic_coords(permute_vertices(t, {3, 2, 1, 0})),
                  x) <= 1e-13);

  // the transposition (3 4) swaps s and t
  CHECK(coord_dev(doubly_stochastic_coords(permute_vertices(t, {0, 1, 3, 2})),
                  TriangleCoords{0.2, 0.5, 0.3}) <= 1e-13);

  CHECK(thrown_code([&] { permute_vertices(t, {0, 0, 2, 3}); }) ==
        ErrorCode::DomainError);
}

TEST_CASE("tetra: angles from coordinates") {
  DihedralAngles reg = angles_from_coords({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  CHECK(std::fabs(reg.theta1() - kPi / 3.0) <= 1e-15);
  CHECK(std::fabs(reg.theta2() - kPi / 3.0) <= 1e-15);
  CHECK(std::fabs(reg.theta3() - kPi / 3.0) <= 1e-15);

  DihedralAngles degenerate = angles_from_coords({0.25, 0.25, 0.5});
  CHECK(degenerate.theta1() == 0.0);
  CHECK(degenerate.theta2() == 0.0);
  CHECK(degenerate.theta3() == kPi);

  CHECK(thrown_code([] { angles_from_coords({0.0, 0.5, 0.5}); }) ==
        ErrorCode::DeltaVertex);

  Rng rng(25);
  for (int k = 0; k < 200; ++k) {
    TriangleCoords x = random_interior_delta(rng, 0.01);
    DihedralAngles a = angles_from_coords(x);
    CHECK(std::fabs(a.theta1() + a.theta2() + a.theta3() - kPi) <= 1e-10);
    // law of sines against the Euclidean triangle with sides (r,s,t)
    double q1 = x.r() / std::sin(a.theta1());
    double q2 = x.s() / std::sin(a.theta2());
    double q3 = x.t() / std::sin(a.theta3());
    CHECK(std::fabs(q1 - q2) <= 1e-9 * q1);
    CHECK(std::fabs(q1 - q3) <= 1e-9 * q1);
  }
}
