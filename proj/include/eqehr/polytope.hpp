#pragma once

#include <cstdint>
#include <optional>

#include "eqehr/group.hpp"
#include "eqehr/matrix.hpp"

namespace eqehr {

// A face recorded as a sorted list of vertex indices.
struct FaceId {
  std::vector<uint32_t> verts;
  int dim = -1;

  bool operator==(const FaceId& o) const { return verts == o.verts; }
  bool operator<(const FaceId& o) const {
    if (dim != o.dim) return dim < o.dim;
    return verts < o.verts;
  }
};

// Rational polytope with exact V- and H-description and full face lattice.
// Geometry is kept in intrinsic coordinates of the affine hull, so
// lower-dimensional polytopes work uniformly.
struct RationalPolytope {
  std::vector<RatVector> vertices;  // irredundant, lex sorted; ambient coords
  int dim = -1;

  RatVector aff_point;     // ambient base point of the affine hull
  RatMatrix directions;    // rows: basis of the direction space (dim many)
  std::vector<RatVector> vert_intr;  // intrinsic coordinates of the vertices

  struct Facet {
    std::vector<Int> normal;  // intrinsic, primitive integer
    Rat offset;               // normal . y >= offset on the polytope
  };
  std::vector<Facet> facets;

  std::vector<FaceId> faces;  // all nonempty faces, sorted by (dim, verts)

  std::size_t ambient_dim() const { return aff_point.dim(); }

  // intrinsic coordinates, or nullopt when x is outside the affine hull
  std::optional<RatVector> intrinsic(const RatVector& x) const;
  RatVector ambient(const RatVector& y) const;

  bool contains(const RatVector& x) const;
  bool in_relative_interior(const RatVector& x) const;
  RatVector barycenter() const;

  // faces of a face: members of the lattice whose vertex set is contained
  std::vector<const FaceId*> facets_of_face(const FaceId& f) const;
  const FaceId& full_face() const { return faces.back(); }

  bool is_lattice_polytope() const;
  bool is_simplex() const { return static_cast<long>(vertices.size()) == dim + 1; }
};

// Exact convex hull; input points may be redundant. Lower-dimensional hulls
// are carried with their affine hull.
RationalPolytope hull(const std::vector<RatVector>& points);

// P^g = { x in P : g x = x } = conv of <g>-orbit averages of the vertices.
// Throws NotInvariant unless g P = P.
RationalPolytope fixed_polytope(const RationalPolytope& P, const AffineMap& g);
// fixed locus of a whole subgroup (element list must be closed)
RationalPolytope fixed_polytope(const RationalPolytope& P, const std::vector<AffineMap>& subgroup);

bool is_invariant(const RationalPolytope& P, const AffineMap& g);
bool is_invariant(const RationalPolytope& P, const FiniteGroup& G);

// Normalized volume dim! * vol w.r.t. the lattice Z^d; requires a
// full-dimensional polytope (DimensionMismatch otherwise).
Int normalized_volume(const RationalPolytope& P);
// Normalized volume of a (possibly lower-dimensional) lattice polytope with
// respect to the affine lattice (affine span) cap Z^d.
Int normalized_volume_in_affine_lattice(const RationalPolytope& P);

// points of P cap (1/m) Z^d, returned as points of P (lex sorted)
std::vector<RatVector> lattice_points_in_dilate(const RationalPolytope& P, const Int& m);
std::vector<RatVector> interior_lattice_points_in_dilate(const RationalPolytope& P, const Int& m);
Int count_lattice_points(const RationalPolytope& P, const Int& m);

// smallest m >= 1 with an interior point in (1/m) Z^d; the search is bounded
// by dim + 1
Int codegree(const RationalPolytope& P);
inline Int degree_of(const RationalPolytope& P) { return Int(P.dim) + 1 - codegree(P); }

// maximal simplices (vertex index sets) of the pulling triangulation of P at
// its vertices, pulling in lex order
std::vector<std::vector<uint32_t>> pulling_triangulation(const RationalPolytope& P);

// exact emptiness test for the intersection of two rational polytopes
// (Fourier-Motzkin elimination)
bool polytopes_intersect(const RationalPolytope& A, const RationalPolytope& B);

}  // namespace eqehr
