#include <random>
#include <set>
#include "doctest.h"
#include "eqehr/errors.hpp"
#include "eqehr/polytope.hpp"

using namespace eqehr;

namespace {

RatVector rv(std::vector<long> v) {
  RatVector r;
  for (long x : v) r.x.emplace_back(x);
  return r;
}

RatVector rq(std::vector<Rat> v) { return RatVector(std::move(v)); }

std::vector<RatVector> unit_square() {
  return {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})};
}

}  // namespace

TEST_CASE("hull") {
  SUBCASE("unit square with a redundant center point") {
    auto pts = unit_square();
    pts.push_back(rq({Rat(1, 2), Rat(1, 2)}));
    auto P = hull(pts);
    CHECK(P.dim == 2);
    CHECK(P.vertices.size() == 4);
    CHECK(P.facets.size() == 4);
    // faces: 4 vertices + 4 edges + 1 full
    CHECK(P.faces.size() == 9);
  }
  SUBCASE("simplex is its own hull") {
    auto P = hull({rv({0, 0}), rv({1, 0}), rv({0, 1})});
    CHECK(P.vertices.size() == 3);
    CHECK(P.is_simplex());
  }
  SUBCASE("lower-dimensional hull keeps its affine hull") {
    auto P = hull({rv({0, 0, 1}), rv({2, 0, 1}), rv({1, 0, 1})});
    CHECK(P.dim == 1);
    CHECK(P.vertices.size() == 2);
    CHECK(P.contains(rv({1, 0, 1})));
    CHECK(!P.contains(rv({1, 1, 1})));
    CHECK(P.in_relative_interior(rv({1, 0, 1})));
    CHECK(!P.in_relative_interior(rv({2, 0, 1})));
  }
  SUBCASE("point") {
    auto P = hull({rq({Rat(1, 2), Rat(1, 2)})});
    CHECK(P.dim == 0);
    CHECK(P.contains(rq({Rat(1, 2), Rat(1, 2)})));
    CHECK(!P.contains(rv({0, 0})));
  }
}

TEST_CASE("fixed polytopes") {
  auto P = hull(unit_square());
  SUBCASE("identity fixes everything") {
    auto F = fixed_polytope(P, AffineMap::identity(2));
    CHECK(F.vertices == P.vertices);
  }
  SUBCASE("90 degree rotation about the center fixes only the center") {
    AffineMap g(IntMatrix{{0, -1}, {1, 0}}, {Int(1), Int(0)});
    auto F = fixed_polytope(P, g);
    CHECK(F.dim == 0);
    CHECK(F.vertices[0] == rq({Rat(1, 2), Rat(1, 2)}));
  }
  SUBCASE("swap fixes the diagonal") {
    AffineMap g(IntMatrix{{0, 1}, {1, 0}}, {Int(0), Int(0)});
    auto F = fixed_polytope(P, g);
    CHECK(F.dim == 1);
    CHECK(F.vertices[0] == rv({0, 0}));
    CHECK(F.vertices[1] == rv({1, 1}));
  }
  SUBCASE("non-invariant map is rejected") {
    AffineMap g(IntMatrix::identity(2), {Int(1), Int(0)});
    CHECK_THROWS_AS(fixed_polytope(P, g), NotInvariant);
  }
}

TEST_CASE("volumes") {
  SUBCASE("unit simplex has volume 1") {
    CHECK(normalized_volume(hull({rv({0, 0}), rv({1, 0}), rv({0, 1})})) == 1);
  }
  SUBCASE("unit square has volume 2") {
    CHECK(normalized_volume(hull(unit_square())) == 2);
  }
  SUBCASE("cube has volume 6") {
    std::vector<RatVector> pts;
    for (long a : {0, 1})
      for (long b : {0, 1})
        for (long c : {0, 1}) pts.push_back(rv({a, b, c}));
    CHECK(normalized_volume(hull(pts)) == 6);
  }
  SUBCASE("lower-dimensional faces use their affine lattice") {
    auto F = hull({rv({0, 0, 5}), rv({1, 0, 5}), rv({0, 1, 5}), rv({1, 1, 5})});
    CHECK_THROWS_AS(normalized_volume(F), DimensionMismatch);
    CHECK(normalized_volume_in_affine_lattice(F) == 2);
    // a segment of lattice length 3
    auto S = hull({rv({0, 0}), rv({3, 3})});
    CHECK(normalized_volume_in_affine_lattice(S) == 3);
  }
}

TEST_CASE("lattice point enumeration") {
  auto P = hull(unit_square());
  SUBCASE("unit square counts") {
    CHECK(count_lattice_points(P, 1) == 4);
    CHECK(count_lattice_points(P, 2) == 9);
    CHECK(count_lattice_points(P, 3) == 16);
  }
  SUBCASE("interior counts") {
    CHECK(interior_lattice_points_in_dilate(P, 1).empty());
    CHECK(interior_lattice_points_in_dilate(P, 2).size() == 1);
    CHECK(interior_lattice_points_in_dilate(P, 3).size() == 4);
  }
  SUBCASE("permutahedron slice: hull of the S_3 orbit of (1,2,3)") {
    std::vector<RatVector> pts = {rv({1, 2, 3}), rv({1, 3, 2}), rv({2, 1, 3}),
                                  rv({2, 3, 1}), rv({3, 1, 2}), rv({3, 2, 1})};
    auto H = hull(pts);
    CHECK(H.dim == 2);
    CHECK(count_lattice_points(H, 1) == 7);
  }
  SUBCASE("lower-dimensional with empty slices") {
    auto S = hull({rq({Rat(1, 2), Rat(0)}), rq({Rat(1, 2), Rat(1)})});
    // the line x = 1/2 has no integer points
    CHECK(count_lattice_points(S, 1) == 0);
    CHECK(count_lattice_points(S, 2) == 3);
  }
  SUBCASE("monotonicity of counts for polytopes with a lattice vertex") {
    auto T = hull({rv({0, 0}), rv({2, 1}), rv({1, 2})});
    Int prev = 0;
    for (long m = 1; m <= 5; ++m) {
      Int c = count_lattice_points(T, m);
      CHECK(c >= prev);
      Int ci = Int(static_cast<long>(interior_lattice_points_in_dilate(T, m).size()));
      CHECK(ci <= c);
      prev = c;
    }
  }
}

TEST_CASE("codegree") {
  SUBCASE("unit simplex in Z^2 has codegree 3") {
    CHECK(codegree(hull({rv({0, 0}), rv({1, 0}), rv({0, 1})})) == 3);
  }
  SUBCASE("unit square has codegree 2") { CHECK(codegree(hull(unit_square())) == 2); }
  SUBCASE("polytope with interior lattice point has codegree 1") {
    CHECK(codegree(hull({rv({-1, 0}), rv({1, 0}), rv({0, -1}), rv({0, 1})})) == 1);
  }
}

TEST_CASE("pulling triangulation") {
  SUBCASE("square splits into two triangles") {
    auto P = hull(unit_square());
    auto T = pulling_triangulation(P);
    CHECK(T.size() == 2);
    for (const auto& s : T) CHECK(s.size() == 3);
  }
  SUBCASE("cube splits into simplices of total volume 6") {
    std::vector<RatVector> pts;
    for (long a : {0, 1})
      for (long b : {0, 1})
        for (long c : {0, 1}) pts.push_back(rv({a, b, c}));
    auto P = hull(pts);
    auto T = pulling_triangulation(P);
    Rat vol(0);
    for (const auto& s : T) {
      RatMatrix E(3, 3);
      for (int i = 1; i <= 3; ++i)
        for (int j = 0; j < 3; ++j) E.at(i - 1, j) = P.vertices[s[i]][j] - P.vertices[s[0]][j];
      Rat d = E.det();
      vol += d < 0 ? Rat(-d) : d;
    }
    CHECK(vol == 6);
  }
}

TEST_CASE("fixed polytopes commute with random conjugation") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> d(-1, 1);
  auto P = hull({rv({1, 0}), rv({-1, 0}), rv({0, 1}), rv({0, -1})});
  AffineMap g(IntMatrix{{-1, 0}, {0, -1}}, {Int(0), Int(0)});
  for (int trial = 0; trial < 15; ++trial) {
    // random unimodular h = product of elementary shears and a translation
    IntMatrix m = IntMatrix::identity(2);
    for (int k = 0; k < 3; ++k) {
      IntMatrix e = IntMatrix::identity(2);
      if (rng() % 2)
        e.at(0, 1) = d(rng);
      else
        e.at(1, 0) = d(rng);
      m = m * e;
    }
    AffineMap h(m, {Int(d(rng)), Int(d(rng))});
    AffineMap conj = h.compose(g).compose(h.inverse());
    // transported polytope and transported fixed locus
    std::vector<RatVector> hp;
    for (const auto& v : P.vertices) hp.push_back(h.apply(v));
    auto Ph = hull(hp);
    auto F1 = fixed_polytope(Ph, conj);
    auto F2 = fixed_polytope(P, g);
    std::set<RatVector> want;
    for (const auto& v : F2.vertices) want.insert(h.apply(v));
    std::set<RatVector> got(F1.vertices.begin(), F1.vertices.end());
    CHECK(got == want);
  }
}

TEST_CASE("fixed polytope conjugation equivariance") {
  auto P = hull(unit_square());
  AffineMap g(IntMatrix{{0, 1}, {1, 0}}, {Int(0), Int(0)});       // swap
  AffineMap h(IntMatrix{{0, -1}, {1, 0}}, {Int(1), Int(0)});      // rotation, preserves P
  AffineMap conj = h.compose(g).compose(h.inverse());
  auto F1 = fixed_polytope(P, conj);
  auto F2 = fixed_polytope(P, g);
  // F1 = h(F2)
  std::set<RatVector> want;
  for (const auto& v : F2.vertices) want.insert(h.apply(v));
  std::set<RatVector> got(F1.vertices.begin(), F1.vertices.end());
  CHECK(got == want);
}
