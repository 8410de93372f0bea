#pragma once

#include "eqehr/complex.hpp"
#include "eqehr/hstar.hpp"

namespace eqehr {

// Fan over the faces of a lattice triangulation of P x {1} in Mtilde, with
// the induced group action on rays.
struct SimplicialFan {
  IntMatrix rays;            // rows: primitive generators in Z^{d+1}
  std::vector<Int> heights;  // HT of each ray
  std::vector<std::vector<uint32_t>> cones;  // sorted ray index sets, including the empty cone
  std::vector<std::vector<uint32_t>> ray_action;  // per group element

  bool cone_in_fan(const std::vector<uint32_t>& c) const;
  std::vector<uint32_t> map_cone(const std::vector<uint32_t>& c, uint32_t g) const;
};

SimplicialFan fan_over_triangulation(const PolyComplex& T, const FiniteGroup& G);

// A G-orbit of interior box points: representative u in the open fundamental
// parallelepiped of its minimal cone, with the stabilizer of u in G.
struct BoxOrbit {
  std::vector<Int> rep;
  std::vector<uint32_t> cone;  // ray indices of C_u
  Int height;
  std::vector<uint32_t> stabilizer;  // element indices of Stab_G(u); stabilizes C_u setwise
  std::size_t orbit_size = 0;
};

std::vector<BoxOrbit> box_orbits(const SimplicialFan& fan, const FiniteGroup& G);

// Character value at g of the Hilbert series of the Stanley-Reisner ring of
// Star(C): sum over g-fixed cones C' containing C of
// prod over ray-orbits o of g on rays(C') - rays(C) of t^{|o|}/(1 - t^{|o|}).
// Throws NotStabilized unless g C = C.
RatFunc star_sr_hilbert_at(const SimplicialFan& fan, const std::vector<uint32_t>& cone,
                           const FiniteGroup& G, uint32_t g);

// det(I - q(g) t) where q(g) is the action induced on Mtilde / span(C)
Poly link_det_factor(const SimplicialFan& fan, const std::vector<uint32_t>& cone,
                     const FiniteGroup& G, uint32_t g);

// Hilb at g of the l.s.o.p. quotient of SR(lk(C)) = star Hilbert times the
// det factor of the quotient lattice
RatFunc link_hilbert_at_g(const SimplicialFan& fan, const std::vector<uint32_t>& cone,
                          const FiniteGroup& G, uint32_t g);

// h*(P, rho; t) from a G-invariant lattice triangulation via box-point
// orbits and link data; independent of the direct computation.
HStarSeries hstar_via_triangulation(const RationalPolytope& P, const FiniteGroup& G,
                                    const PolyComplex& T);

}  // namespace eqehr
