#include "eqehr/sr.hpp"

#include <algorithm>
#include <map>

#include "eqehr/ehrhart.hpp"
#include "eqehr/errors.hpp"
#include "eqehr/lattice.hpp"
#include "eqehr/normal_form.hpp"

namespace eqehr {

bool SimplicialFan::cone_in_fan(const std::vector<uint32_t>& c) const {
  return std::binary_search(cones.begin(), cones.end(), c);
}

std::vector<uint32_t> SimplicialFan::map_cone(const std::vector<uint32_t>& c, uint32_t g) const {
  std::vector<uint32_t> img;
  img.reserve(c.size());
  for (auto r : c) img.push_back(ray_action[g][r]);
  std::sort(img.begin(), img.end());
  return img;
}

SimplicialFan fan_over_triangulation(const PolyComplex& T, const FiniteGroup& G) {
  if (!T.is_triangulation()) throw NotSimplicial("fan needs a triangulation");
  if (!T.is_invariant(G)) throw NotInvariant();
  std::size_t d = T.verts.empty() ? 0 : T.verts[0].dim();
  SimplicialFan fan;
  fan.rays = IntMatrix(T.verts.size(), d + 1);
  fan.heights.resize(T.verts.size());
  for (std::size_t i = 0; i < T.verts.size(); ++i) {
    RatVector w(d + 1);
    for (std::size_t j = 0; j < d; ++j) w[j] = T.verts[i][j];
    w[d] = 1;
    auto prim = clear_denominators(w);
    for (std::size_t j = 0; j <= d; ++j) fan.rays.at(i, j) = prim[j];
    fan.heights[i] = prim[d];
  }
  fan.cones.emplace_back();  // the zero cone
  for (const auto& f : T.faces) fan.cones.push_back(f);
  std::sort(fan.cones.begin(), fan.cones.end());
  fan.ray_action.resize(G.order());
  for (uint32_t g = 0; g < G.order(); ++g) {
    fan.ray_action[g].resize(T.verts.size());
    for (uint32_t r = 0; r < T.verts.size(); ++r) {
      auto img = T.find_vertex(G.elements[g].apply(T.verts[r]));
      if (!img) throw NotInvariant("ray image outside the fan");
      fan.ray_action[g][r] = *img;
    }
  }
  return fan;
}

std::vector<BoxOrbit> box_orbits(const SimplicialFan& fan, const FiniteGroup& G) {
  std::size_t n1 = fan.rays.cols;
  // collect all open box points with their minimal cones
  std::map<std::vector<Int>, std::vector<uint32_t>> points;  // point -> cone
  for (const auto& cone : fan.cones) {
    IntMatrix rays(cone.size(), n1);
    for (std::size_t i = 0; i < cone.size(); ++i)
      for (std::size_t j = 0; j < n1; ++j) rays.at(i, j) = fan.rays.at(cone[i], j);
    std::vector<Int> grading(n1, Int(0));
    grading[n1 - 1] = 1;
    for (auto& b : box_points(rays, {}, grading, /*open_all=*/true)) points[b.point] = cone;
  }
  // group into orbits
  std::vector<BoxOrbit> orbits;
  std::set<std::vector<Int>> seen;
  for (const auto& [pt, cone] : points) {
    if (seen.count(pt)) continue;
    BoxOrbit orb;
    orb.rep = pt;
    orb.cone = cone;
    orb.height = pt[n1 - 1];
    std::set<std::vector<Int>> members;
    for (uint32_t g = 0; g < G.order(); ++g) {
      IntMatrix ext = G.elements[g].extended();
      std::vector<Int> img = ext.apply(pt);
      if (img == pt) orb.stabilizer.push_back(g);
      members.insert(img);
    }
    for (const auto& m : members) {
      if (!points.count(m)) throw Error("box point orbit leaves the box set");
      seen.insert(m);
    }
    orb.orbit_size = members.size();
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

RatFunc star_sr_hilbert_at(const SimplicialFan& fan, const std::vector<uint32_t>& cone,
                           const FiniteGroup& G, uint32_t g) {
  if (fan.map_cone(cone, g) != cone) throw NotStabilized();
  RatFunc total;
  for (const auto& cprime : fan.cones) {
    if (!std::includes(cprime.begin(), cprime.end(), cone.begin(), cone.end())) continue;
    if (fan.map_cone(cprime, g) != cprime) continue;
    // ray orbits of g on rays(C') - rays(C)
    std::vector<uint32_t> extra;
    std::set_difference(cprime.begin(), cprime.end(), cone.begin(), cone.end(),
                        std::back_inserter(extra));
    std::set<uint32_t> left(extra.begin(), extra.end());
    RatFunc term = RatFunc(Poly::one());
    while (!left.empty()) {
      uint32_t r = *left.begin();
      unsigned long len = 0;
      uint32_t cur = r;
      do {
        left.erase(cur);
        cur = fan.ray_action[g][cur];
        ++len;
      } while (cur != r);
      term = term * RatFunc(Poly::monomial(Cyclo(1L), len),
                            {{DenFactor{Cyclo(1L), len}, 1u}});
    }
    total += term;
  }
  return total;
}

Poly link_det_factor(const SimplicialFan& fan, const std::vector<uint32_t>& cone,
                     const FiniteGroup& G, uint32_t g) {
  std::size_t n1 = fan.rays.cols;
  IntMatrix ext = G.elements[g].extended();
  if (cone.empty()) {
    auto cp = char_poly(ext);
    std::vector<Int> rev(cp.rbegin(), cp.rend());
    return Poly::from_int_coeffs(rev);
  }
  // quotient by the saturated span of the cone rays
  IntMatrix crows(cone.size(), n1);
  for (std::size_t i = 0; i < cone.size(); ++i)
    for (std::size_t j = 0; j < n1; ++j) crows.at(i, j) = fan.rays.at(cone[i], j);
  IntMatrix B = saturate_rows(crows);
  std::size_t k = B.rows;
  if (k == n1) return Poly::one();
  auto s = snf(B);
  // rows of V^{-1} form a basis with the first k rows spanning sat(B);
  // quotient coordinates are the last n1-k entries of V^T x
  IntMatrix Vt = s.V.transpose();
  RatMatrix Vinv = rat_inverse(RatMatrix::from_int(s.V));
  IntMatrix proj(n1 - k, n1), sec(n1, n1 - k);
  for (std::size_t i = k; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      proj.at(i - k, j) = Vt.at(i, j);
      if (!is_integer(Vinv.at(i, j))) throw Error("quotient basis not integral");
      sec.at(j, i - k) = Vinv.at(i, j).get_num();
    }
  IntMatrix Q = proj * ext * sec;
  if (!(proj * ext == Q * proj)) throw Error("group element does not descend to the link lattice");
  auto cp = char_poly(Q);
  std::vector<Int> rev(cp.rbegin(), cp.rend());
  return Poly::from_int_coeffs(rev);
}

RatFunc link_hilbert_at_g(const SimplicialFan& fan, const std::vector<uint32_t>& cone,
                          const FiniteGroup& G, uint32_t g) {
  return star_sr_hilbert_at(fan, cone, G, g).mul_poly(link_det_factor(fan, cone, G, g));
}

HStarSeries hstar_via_triangulation(const RationalPolytope& P, const FiniteGroup& G,
                                    const PolyComplex& T) {
  if (!P.is_lattice_polytope()) throw NotLatticePolytope();
  for (const auto& v : T.verts)
    if (!v.is_integral()) throw NotLatticePolytope("triangulation has non-lattice vertices");
  verify_subdivision_of(T, P);
  SimplicialFan fan = fan_over_triangulation(T, G);
  auto orbits = box_orbits(fan, G);

  std::vector<RatFunc> per_class(G.num_classes());
  for (const auto& orb : orbits) {
    Subgroup H = make_subgroup(G, orb.stabilizer);
    // value of the link Hilbert series at each element of the stabilizer
    std::vector<RatFunc> f(H.group.order());
    for (uint32_t h = 0; h < H.group.order(); ++h)
      f[h] = link_hilbert_at_g(fan, orb.cone, G, H.elems[h]);
    // induce to G at the level of class values
    std::vector<long> back(G.order(), -1);
    for (uint32_t i = 0; i < H.elems.size(); ++i) back[H.elems[i]] = i;
    for (std::size_t c = 0; c < G.num_classes(); ++c) {
      uint32_t gg = G.class_rep(c);
      RatFunc sum;
      for (uint32_t x = 0; x < G.order(); ++x) {
        uint32_t conj = G.mult[G.mult[G.inverse_of[x]][gg]][x];
        if (back[conj] >= 0) sum += f[static_cast<uint32_t>(back[conj])];
      }
      if (sum.is_zero()) continue;
      sum = sum.mul_poly(Poly::constant_poly(Cyclo(Rat(1, static_cast<long>(H.group.order())))));
      per_class[c] += sum.mul_poly(Poly::monomial(Cyclo(1L), orb.height.get_ui()));
    }
  }
  HStarSeries h = make_hstar_series(G, std::move(per_class), default_truncation(P.dim));
  if (!h.polynomial) throw Error("triangulation formula produced a non-polynomial series");
  return h;
}

}  // namespace eqehr
