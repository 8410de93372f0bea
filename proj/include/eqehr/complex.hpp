#pragma once

#include <set>

#include "eqehr/polytope.hpp"

namespace eqehr {

// Height function on a finite point set, the certificate language for
// regular subdivisions. A refinement chain omega_0, then omega_1, ... means
// S(omega_0 + eps omega_1 + eps^2 omega_2 + ...) for infinitesimal eps.
struct HeightFunction {
  std::vector<RatVector> points;
  std::vector<Rat> heights;

  std::optional<Rat> at(const RatVector& p) const;
};

// Polytopal complex: global vertex list plus the set of all nonempty faces as
// sorted vertex-index sets, closed under taking faces.
struct PolyComplex {
  std::vector<RatVector> verts;
  std::set<std::vector<uint32_t>> faces;
  std::vector<HeightFunction> height_stack;  // regularity certificate chain

  uint32_t vertex_index(const RatVector& p);        // adds when missing
  std::optional<uint32_t> find_vertex(const RatVector& p) const;

  std::vector<std::vector<uint32_t>> facets() const;  // maximal faces
  int dim_of(const std::vector<uint32_t>& f) const;
  int dim() const;
  bool is_triangulation() const;  // every facet a simplex w.r.t. its dimension

  // cached hull of a face (by vertex-index set)
  const RationalPolytope& face_polytope(const std::vector<uint32_t>& f) const;
  bool face_contains(const std::vector<uint32_t>& f, const RatVector& p) const;

  std::vector<uint32_t> map_face(const std::vector<uint32_t>& f, const AffineMap& g) const;
  bool is_invariant(const FiniteGroup& G) const;

  // all faces contained (as sets) in the given vertex set
  std::vector<std::vector<uint32_t>> subfaces_of(const std::vector<uint32_t>& f) const;

 private:
  mutable std::map<std::vector<uint32_t>, RationalPolytope> hull_cache_;
};

// trivial subdivision: the face lattice of P
PolyComplex trivial_subdivision(const RationalPolytope& P);

// build a complex from explicit maximal cells (closure under faces)
PolyComplex complex_from_facets(const std::vector<std::vector<RatVector>>& cells);

// S(omega): regular subdivision of P by heights on A (A must contain the
// vertices of P); computed as an exact lower hull.
PolyComplex regular_subdivision(const RationalPolytope& P, const HeightFunction& omega);

// regular refinement of S by omega (domain must contain the vertices of S)
PolyComplex regular_refinement(const PolyComplex& S, const HeightFunction& omega);

// pulling refinement S_J (omega = -1 on J, 0 elsewhere)
PolyComplex pulling_refinement(const PolyComplex& S, const std::vector<RatVector>& J);

// single-point pulling via the local recursive rule; used as an independent
// oracle against pulling_refinement
PolyComplex pull_point_local(const PolyComplex& S, const RatVector& u);

// structural checks: closure under faces, pairwise intersections are common
// faces, support volume (when support is provided). Throws CheckFailed.
void verify_complex(const PolyComplex& S);
void verify_subdivision_of(const PolyComplex& S, const RationalPolytope& P);

}  // namespace eqehr
