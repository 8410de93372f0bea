#pragma once

#include "eqehr/class_function.hpp"
#include "eqehr/polytope.hpp"
#include "eqehr/ratfunc.hpp"

namespace eqehr {

// A lattice point of the fundamental (half-open) parallelepiped of a
// simplicial cone, together with its barycentric coordinates in the ray
// generators.
struct BoxPoint {
  std::vector<Int> point;    // in the cone's lattice coordinates
  std::vector<Rat> lambdas;  // point = sum lambda_j ray_j
  Int height;                // grading value
};

// Lattice points u = sum lambda_j u_j of the parallelepiped of the rays
// (rows of `rays`, linearly independent, any corank), with
// lambda_j in [0,1), or (0,1] at positions where `strict` is set (half-open
// cone with those facets removed). With `open_all` every lambda is required
// in (0,1) instead (the BBox-degree variant used by the Stanley-Reisner
// formula). heights[j] = grading of ray j; box point heights are computed
// from the grading vector `grading` (dot product).
std::vector<BoxPoint> box_points(const IntMatrix& rays, const std::vector<bool>& strict,
                                 const std::vector<Int>& grading, bool open_all = false);

// Ehrhart series of a rational simplex with respect to Z^d via the
// fundamental-parallelepiped formula. Throws NotSimplex.
RatFunc simplex_ehr_series(const std::vector<RatVector>& simplex_vertices);

// Ehrhart series of an arbitrary rational polytope with respect to Z^d:
// triangulates P by its vertices and sums half-open simplex contributions;
// the half-open decomposition is taken with respect to the lexicographically
// perturbed barycenter, so the result is triangulation independent. An
// explicit triangulation (maximal simplices as vertex index sets) may be
// supplied instead of the internal pulling triangulation.
RatFunc polytope_ehr_series(const RationalPolytope& P,
                            const std::vector<std::vector<uint32_t>>* triangulation = nullptr);

struct EquivariantSeries {
  const FiniteGroup* group = nullptr;
  std::vector<RatFunc> per_class;

  ClassFunction coefficient(std::size_t m) const;  // series coefficient as a class function
  std::vector<ClassFunction> coefficients(std::size_t up_to) const;
};

// class [g] -> Ehr(P^g; t), computed in the affine lattice of the fixed
// polytope. P must be an invariant lattice polytope.
EquivariantSeries equivariant_ehr(const RationalPolytope& P, const FiniteGroup& G);

// permutation character of G acting on P cap (1/m) Z^d
ClassFunction equivariant_L(const RationalPolytope& P, const FiniteGroup& G, const Int& m);
ClassFunction equivariant_L_interior(const RationalPolytope& P, const FiniteGroup& G, const Int& m);

}  // namespace eqehr
