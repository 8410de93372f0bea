#include <set>

#include "doctest.h"
#include "eqehr/ehrhart.hpp"
#include "eqehr/errors.hpp"
#include "eqehr/fixtures.hpp"

using namespace eqehr;

namespace {

RatVector rv(std::vector<long> v) {
  RatVector r;
  for (long x : v) r.x.emplace_back(x);
  return r;
}

RatVector rq(std::vector<Rat> v) { return RatVector(std::move(v)); }

RatFunc ratfunc_1_over(const std::vector<unsigned long>& ks) {
  std::vector<std::pair<DenFactor, unsigned>> den;
  for (auto k : ks) den.emplace_back(DenFactor{Cyclo(1L), k}, 1u);
  return RatFunc(Poly::one(), std::move(den));
}

}  // namespace

TEST_CASE("box points") {
  SUBCASE("unimodular cone has only the origin") {
    IntMatrix rays{{1, 0}, {0, 1}};
    auto b = box_points(rays, {false, false}, {Int(1), Int(1)});
    REQUIRE(b.size() == 1);
    CHECK(b[0].point == std::vector<Int>{0, 0});
  }
  SUBCASE("zero cone conventions") {
    IntMatrix rays(0, 2);
    auto closed = box_points(rays, {}, {});
    CHECK(closed.size() == 1);
    auto open = box_points(rays, {}, {}, true);
    CHECK(open.size() == 1);  // BBox-degree of the zero cone is {0}
  }
  SUBCASE("cone over the segment [0,2] has a box point at height 1") {
    // rays (0,1) and (2,1), grading by the last coordinate
    IntMatrix rays{{0, 1}, {2, 1}};
    auto b = box_points(rays, {false, false}, {Int(0), Int(1)});
    REQUIRE(b.size() == 2);
    CHECK(b[0].point == std::vector<Int>{0, 0});
    CHECK(b[1].point == std::vector<Int>{1, 1});
    CHECK(b[1].height == 1);
  }
  SUBCASE("open variant drops boundary points") {
    IntMatrix rays{{0, 1}, {2, 1}};
    auto b = box_points(rays, {}, {Int(0), Int(1)}, true);
    REQUIRE(b.size() == 1);
    CHECK(b[0].point == std::vector<Int>{1, 1});
  }
  SUBCASE("half-open shifts lattice points off removed facets") {
    IntMatrix rays{{1, 0}, {0, 1}};
    auto b = box_points(rays, {true, false}, {Int(1), Int(1)});
    REQUIRE(b.size() == 1);
    CHECK(b[0].point == std::vector<Int>{1, 0});  // origin shifted by the strict ray
  }
  SUBCASE("count equals the index (determinant)") {
    IntMatrix rays{{2, 1}, {1, 3}};
    auto b = box_points(rays, {false, false}, {Int(1), Int(1)});
    CHECK(b.size() == 5);  // |det| = 5
  }
  SUBCASE("dependent rays are rejected") {
    IntMatrix rays{{1, 1}, {2, 2}};
    CHECK_THROWS_AS(box_points(rays, {false, false}, {Int(1), Int(1)}), NotSimplicial);
  }
}

TEST_CASE("simplex series") {
  SUBCASE("unit segment: 1/(1-t)^2") {
    auto f = simplex_ehr_series({rv({0}), rv({1})});
    CHECK(f == ratfunc_1_over({1, 1}));
  }
  SUBCASE("point at (1/2,1/2): 1/(1-t^2)") {
    RatVector half(std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
    auto f = simplex_ehr_series({half});
    CHECK(f == ratfunc_1_over({2}));
  }
  SUBCASE("circuit fixed simplex of the d+2 family") {
    // d = 4, r = 3, a = (1,1,1), single block partition I = {1,2,3}:
    // Q has one vertex (1/6) sum (e_i + f_i); Ehr = (1 + t^3)/(1 - t^6)
    auto q = quotient_by({Int(1), Int(1), Int(1), Int(-1), Int(-1), Int(-1)});
    RatVector s(5);
    {
      RatVector sum(5);
      for (int i = 0; i < 6; ++i) {
        std::vector<long> e(6, 0);
        e[i] = 1;
        sum = sum + q.apply(rv(e));
      }
      s = sum * Rat(1, 6);
    }
    auto f = simplex_ehr_series({s});
    RatFunc want(Poly::from_int_coeffs({Int(1), Int(0), Int(0), Int(1)}),
                 {{DenFactor{Cyclo(1L), 6}, 1u}});
    CHECK(f == want);
  }
  SUBCASE("non-simplex input throws") {
    CHECK_THROWS_AS(simplex_ehr_series({rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})}),
                    NotSimplex);
  }
}

TEST_CASE("polytope series") {
  SUBCASE("unit square is (1+t)/(1-t)^3") {
    auto P = hull({rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})});
    auto f = polytope_ehr_series(P);
    RatFunc want(Poly::from_int_coeffs({Int(1), Int(1)}),
                 {{DenFactor{Cyclo(1L), 1}, 3u}});
    CHECK(f == want);
  }
  SUBCASE("series coefficients match brute-force counts") {
    std::vector<RationalPolytope> polys = {
        hull({rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})}),
        hull({rv({0, 0}), rv({2, 1}), rv({1, 2})}),
        hull({rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1}), rv({1, 1, 1})}),
        hull({RatVector(std::vector<Rat>{Rat(1, 2), Rat(0)}),
              RatVector(std::vector<Rat>{Rat(1, 2), Rat(1)})}),
    };
    for (const auto& P : polys) {
      auto f = polytope_ehr_series(P);
      auto s = f.series(6);
      CHECK(s[0] == Cyclo(1L));
      for (long m = 1; m <= 6; ++m)
        CHECK(s[m] == Cyclo(count_lattice_points(P, Int(m))));
    }
  }
  SUBCASE("half-open assembly is independent of the triangulation") {
    // the two diagonal triangulations of the square give the same reduced
    // rational function; vertices lex-sorted: (0,0),(0,2),(2,0),(2,2)
    auto P = hull({rv({0, 0}), rv({2, 0}), rv({0, 2}), rv({2, 2})});
    std::vector<std::vector<uint32_t>> diag1 = {{0, 1, 3}, {0, 2, 3}};
    std::vector<std::vector<uint32_t>> diag2 = {{0, 1, 2}, {1, 2, 3}};
    auto f1 = polytope_ehr_series(P, &diag1);
    auto f2 = polytope_ehr_series(P, &diag2);
    CHECK(f1 == f2);
    CHECK(f1 == polytope_ehr_series(P));
    // and the same on a rational fixed polytope
    auto F = hull({rq({Rat(1, 2), Rat(0)}), rq({Rat(1, 2), Rat(2)}), rq({Rat(5, 2), Rat(0)}),
                   rq({Rat(5, 2), Rat(2)})});
    std::vector<std::vector<uint32_t>> d1 = {{0, 1, 3}, {0, 2, 3}};
    std::vector<std::vector<uint32_t>> d2 = {{0, 1, 2}, {1, 2, 3}};
    CHECK(polytope_ehr_series(F, &d1) == polytope_ehr_series(F, &d2));
    auto s = f1.series(4);
    CHECK(s[0] == Cyclo(1L));
    for (long m = 1; m <= 4; ++m) CHECK(s[m] == Cyclo(count_lattice_points(P, Int(m))));
  }
  SUBCASE("pole order at t=1 equals dim + 1") {
    auto P = hull({rv({0, 0, 5}), rv({1, 0, 5}), rv({0, 1, 5}), rv({1, 1, 5})});
    auto f = polytope_ehr_series(P);
    auto red = f.reduced();
    // multiplicity of (1-t) in the denominator
    Poly den = red.den;
    int mult = 0;
    Poly one_minus_t = Poly::from_int_coeffs({Int(1), Int(-1)});
    while (true) {
      Poly q, r;
      Poly::divmod(den, one_minus_t, q, r);
      if (!r.is_zero()) break;
      den = q;
      ++mult;
    }
    CHECK(mult == P.dim + 1);
  }
}

TEST_CASE("equivariant series") {
  SUBCASE("trivial group reduces to the ordinary series") {
    auto G = close_group({}, 2);
    auto P = hull({rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})});
    auto S = equivariant_ehr(P, G);
    CHECK(S.per_class.size() == 1);
    CHECK(S.per_class[0] == polytope_ehr_series(P));
  }
  SUBCASE("swap action on the unit square") {
    auto inst = square_swap();
    auto S = equivariant_ehr(inst.P, inst.G);
    CHECK(S.per_class[0] == polytope_ehr_series(inst.P));
    // swap class: the diagonal, Ehr = 1/(1-t)^2
    CHECK(S.per_class[1] == ratfunc_1_over({1, 1}));
  }
  SUBCASE("coefficients equal fixed-point counts (oracle)") {
    for (auto inst : {square_swap(), z3_prism(), cross_polytope_2()}) {
      auto S = equivariant_ehr(inst.P, inst.G);
      for (long m = 0; m <= 6; ++m) {
        ClassFunction implied = S.coefficient(static_cast<std::size_t>(m));
        ClassFunction counted = m == 0 ? ClassFunction::trivial(inst.G)
                                       : equivariant_L(inst.P, inst.G, Int(m));
        CHECK(implied == counted);
      }
    }
  }
  SUBCASE("non-invariant polytope is rejected") {
    auto G = close_group({AffineMap(IntMatrix{{0, 1}, {1, 0}}, {Int(0), Int(0)})}, 2);
    auto P = hull({rv({0, 0}), rv({2, 0}), rv({0, 1})});
    CHECK_THROWS_AS(equivariant_ehr(P, G), NotInvariant);
  }
}

TEST_CASE("equivariant L") {
  auto inst = klein_four_cube();
  auto chi = equivariant_L(inst.P, inst.G, Int(1));
  CHECK(chi == ClassFunction::regular(inst.G).scale(Cyclo(2L)));
}
