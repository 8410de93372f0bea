#pragma once

#include "eqehr/complex.hpp"
#include <array>

#include "eqehr/hstar.hpp"

namespace eqehr {

// Coordinates for an affine sublattice offset + rowspan(basis) of an ambient
// Z^D; converts points and maps into intrinsic lattice coordinates.
struct AffineCoords {
  IntMatrix basis;   // rows: d x D, independent
  RatVector offset;  // length D

  RatVector to_local(const RatVector& ambient) const;
  // conjugate an ambient affine map that preserves the affine sublattice
  AffineMap to_local(const IntMatrix& A, const std::vector<Int>& b) const;
};

// coordinates on the slice { x : psi . x = c } of Z^n
AffineCoords slice_coords(const std::vector<Int>& psi, const Int& c);

// projection Z^n -> Z^n/Zv realized in coordinates Z^{n-1}
struct QuotientLattice {
  IntMatrix proj;  // (n-1) x n
  IntMatrix sec;   // n x (n-1), proj * sec = I

  std::vector<Int> apply(const std::vector<Int>& x) const { return proj.apply(x); }
  RatVector apply(const RatVector& x) const;
  // induced matrix on the quotient; requires A v = +-v
  IntMatrix induced(const IntMatrix& A) const;
};
QuotientLattice quotient_by(const std::vector<Int>& v);

// ----- worked example instances, in standard lattice coordinates -----

// Z/2 swapping the coordinates of the unit square
Instance square_swap();
// Klein four group of 180-degree rotations on [-1,1]^3 over the lattice of
// odd points (converted to the unit cube over Z^3)
Instance klein_four_cube();
// Z/5 cycling Z^5/Z(e_1+...+e_5); 4-dimensional reflexive polytope with 10
// vertices
Instance p5_reflexive();
// its invariant non-regular boundary triangulation joined with the origin
PolyComplex p5_fixture_triangulation(const Instance& inst);
// Z/3 cycling the triangle factor of prism = triangle x [0,1]
Instance z3_prism();
// circuit polytope with d = 4: conv(e_i, f_i) in Z^6/Z(sum a_i (e_i - f_i))
// sliced at psi = 1, with Z/2 swapping e_i <-> f_i
Instance circuit_d4(const std::array<long, 3>& a);
// Sym_d acting on the prism conv(e_1..e_d) x [0,1] in the slice sum = 1
Instance sym_prism(unsigned d);
// Sym_{d+1} on the (d+1)-permutahedron
Instance permutahedron(unsigned d);
// central symmetry on conv(+-e_1, +-e_2)
Instance cross_polytope_2();
// bipyramid over an invariant unit square with a reflection through an
// affine hyperplane (two minimal invariant subdivisions, only one a
// triangulation)
Instance bipyramid_reflection();
// segment [0,1] with x -> 1 - x
Instance segment_reflection();

// class of the elements of cycle type `type` (partition of n) in a group
// isomorphic to S_n with n <= 5; classes there are separated by element
// order plus class size
uint32_t class_of_cycle_type(const FiniteGroup& G, unsigned n, const std::vector<unsigned>& type);

}  // namespace eqehr
