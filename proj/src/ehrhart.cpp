#include "eqehr/ehrhart.hpp"

#include <algorithm>
#include <set>

#include "eqehr/errors.hpp"
#include "eqehr/lattice.hpp"
#include "eqehr/normal_form.hpp"

namespace eqehr {

namespace {

// integer inverse of a unimodular matrix
IntMatrix unimodular_inverse(const IntMatrix& V) {
  RatMatrix inv = rat_inverse(RatMatrix::from_int(V));
  IntMatrix out(V.rows, V.cols);
  for (std::size_t i = 0; i < V.rows; ++i)
    for (std::size_t j = 0; j < V.cols; ++j) {
      if (!is_integer(inv.at(i, j))) throw Error("matrix is not unimodular");
      out.at(i, j) = inv.at(i, j).get_num();
    }
  return out;
}

}  // namespace

std::vector<BoxPoint> box_points(const IntMatrix& rays, const std::vector<bool>& strict,
                                 const std::vector<Int>& grading, bool open_all) {
  std::size_t s = rays.rows, n = rays.cols;
  if (s == 0) {
    // the zero cone: single box point 0 (both conventions)
    BoxPoint b;
    b.point.assign(n, Int(0));
    b.height = 0;
    return {b};
  }
  if (RatMatrix::from_int(rays).rank() != s) throw NotSimplicial("rays are dependent");

  // Work inside the saturated lattice L' = span(rays) cap Z^n.
  IntMatrix L = saturate_rows(rays);  // s x n, basis rows
  // rays in L'-coordinates
  IntMatrix U(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    RatVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = Rat(rays.at(i, j));
    auto c = coords_in_basis(L, row);
    if (!c || !c->is_integral()) throw Error("ray outside its saturation");
    for (std::size_t j = 0; j < s; ++j) U.at(i, j) = (*c)[j].get_num();
  }
  // Z^s / rowspan(U): snf U = Us * U * Vs diagonal D; Lambda = rowspan(D W)
  // with W = Vs^{-1}, so coset reps are sum r_i w_i with r_i in [0, d_i).
  auto sr = snf(U);
  IntMatrix W = unimodular_inverse(sr.V);
  std::vector<Int> d = sr.diag;

  // iterate over coset representatives
  std::vector<BoxPoint> out;
  std::vector<Int> r(s, Int(0));
  RatMatrix Ut(s, s);  // for solving U^T lambda = x
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) Ut.at(j, i) = Rat(U.at(i, j));
  while (true) {
    // x = sum r_i w_i in L'-coordinates
    RatVector x(s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) x[j] += Rat(r[i]) * Rat(W.at(i, j));
    auto lam = solve_rational(Ut, x);
    if (!lam) throw Error("box point solve failed");
    std::vector<Rat> lambda(s);
    bool keep = true;
    for (std::size_t j = 0; j < s; ++j) {
      Rat f = (*lam)[j] - Rat(floor((*lam)[j]));
      if (open_all) {
        if (f == 0) {
          keep = false;
          break;
        }
      } else if (strict.size() > j && strict[j] && f == 0) {
        f = 1;
      }
      lambda[j] = f;
    }
    if (keep) {
      // point in ambient Z^n coordinates: sum lambda_j ray_j
      std::vector<Int> pt(n, Int(0));
      for (std::size_t j2 = 0; j2 < n; ++j2) {
        Rat v(0);
        for (std::size_t i = 0; i < s; ++i) v += lambda[i] * Rat(rays.at(i, j2));
        if (!is_integer(v)) throw Error("box point is not integral");
        pt[j2] = v.get_num();
      }
      BoxPoint b;
      b.point = std::move(pt);
      b.lambdas = std::move(lambda);
      b.height = grading.empty() ? Int(0) : dot(grading, b.point);
      out.push_back(std::move(b));
    }
    // odometer over r_i in [0, d_i)
    std::size_t i = 0;
    while (i < s) {
      r[i] += 1;
      if (r[i] < d[i]) break;
      r[i] = 0;
      ++i;
    }
    if (i == s) break;
  }
  std::sort(out.begin(), out.end(),
            [](const BoxPoint& a, const BoxPoint& b) { return a.point < b.point; });
  return out;
}

namespace {

// Shared engine: Ehrhart series of the half-open simplex spanned by the given
// vertices (ambient rational coordinates), where open_facets[j] removes the
// facet opposite vertex j. Lattice points live in the saturated lattice of
// the cone over the simplex inside Z^{d+1}.
RatFunc half_open_simplex_series(const std::vector<RatVector>& verts,
                                 const std::vector<bool>& open_facets) {
  std::size_t d = verts[0].dim();
  std::size_t s = verts.size();
  // lattice L = saturation of span{(v,1)}
  IntMatrix lift(s, d + 1);
  for (std::size_t i = 0; i < s; ++i) {
    RatVector w(d + 1);
    for (std::size_t j = 0; j < d; ++j) w[j] = verts[i][j];
    w[d] = 1;
    auto iw = clear_denominators(w);
    for (std::size_t j = 0; j <= d; ++j) lift.at(i, j) = iw[j];
  }
  IntMatrix L = saturate_rows(lift);
  std::size_t k1 = L.rows;  // = dim simplex + 1
  // grading on L-coordinates: height of basis vector i = last ambient coord
  std::vector<Int> grading(k1);
  for (std::size_t i = 0; i < k1; ++i) grading[i] = L.at(i, d);
  // primitive ray generators in L-coordinates
  IntMatrix rays(s, k1);
  std::vector<Int> ray_heights(s);
  for (std::size_t i = 0; i < s; ++i) {
    RatVector w(d + 1);
    for (std::size_t j = 0; j < d; ++j) w[j] = verts[i][j];
    w[d] = 1;
    auto c = coords_in_basis(L, w);
    if (!c) throw Error("lifted vertex outside lattice span");
    auto prim = clear_denominators(*c);
    // orient along the cone (heights positive)
    Int h = dot(grading, prim);
    if (h < 0) {
      for (auto& v : prim) v = -v;
      h = -h;
    }
    if (h <= 0) throw Error("ray with nonpositive height");
    for (std::size_t j = 0; j < k1; ++j) rays.at(i, j) = prim[j];
    ray_heights[i] = h;
  }
  if (s != k1) throw NotSimplex();
  auto boxes = box_points(rays, open_facets, grading);
  Poly num;
  for (const auto& b : boxes) {
    if (b.height < 0) throw Error("negative box height");
    num += Poly::monomial(Cyclo(1L), b.height.get_ui());
  }
  std::vector<std::pair<DenFactor, unsigned>> den;
  for (std::size_t i = 0; i < s; ++i)
    den.emplace_back(DenFactor{Cyclo(1L), ray_heights[i].get_ui()}, 1u);
  return RatFunc(std::move(num), std::move(den));
}

}  // namespace

RatFunc simplex_ehr_series(const std::vector<RatVector>& simplex_vertices) {
  // verify the vertices are affinely independent
  std::set<RatVector> uniq(simplex_vertices.begin(), simplex_vertices.end());
  std::vector<RatVector> verts(uniq.begin(), uniq.end());
  if (verts.size() >= 2) {
    RatMatrix diff(verts.size() - 1, verts[0].dim());
    for (std::size_t i = 1; i < verts.size(); ++i)
      for (std::size_t j = 0; j < verts[0].dim(); ++j)
        diff.at(i - 1, j) = verts[i][j] - verts[0][j];
    if (diff.rank() != verts.size() - 1) throw NotSimplex();
  }
  return half_open_simplex_series(verts, std::vector<bool>(verts.size(), false));
}

RatFunc polytope_ehr_series(const RationalPolytope& P,
                            const std::vector<std::vector<uint32_t>>* supplied) {
  std::size_t k = static_cast<std::size_t>(P.dim);
  if (k == 0) return simplex_ehr_series(P.vertices);
  auto triangulation = supplied ? *supplied : pulling_triangulation(P);

  // reference point: barycenter, lexicographically perturbed in intrinsic
  // coordinates. sign of (c . b_eps - gamma) = first nonzero of
  // (c.b - gamma, c_1, ..., c_k).
  RatVector bary_intr(k);
  {
    auto y = P.intrinsic(P.barycenter());
    if (!y) throw Error("barycenter outside affine hull");
    bary_intr = *y;
  }
  auto eps_sign = [&](const std::vector<Int>& c, const Rat& gamma) -> int {
    Rat v = dot(c, bary_intr) - gamma;
    if (v != 0) return v > 0 ? 1 : -1;
    for (std::size_t i = 0; i < k; ++i)
      if (c[i] != 0) return c[i] > 0 ? 1 : -1;
    throw Error("zero facet normal");
  };

  RatFunc total;
  for (const auto& simplex : triangulation) {
    std::vector<RatVector> verts, intr;
    for (auto vi : simplex) {
      verts.push_back(P.vertices[vi]);
      intr.push_back(P.vert_intr[vi]);
    }
    std::vector<bool> open_facets(simplex.size(), false);
    for (std::size_t j = 0; j < simplex.size(); ++j) {
      // hyperplane through all intrinsic vertices except j
      RatMatrix diff(k - 1, k);
      std::size_t r = 0;
      std::size_t base = (j == 0) ? 1 : 0;
      for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (i == j || i == base) continue;
        for (std::size_t col = 0; col < k; ++col)
          diff.at(r, col) = intr[i][col] - intr[base][col];
        ++r;
      }
      RatMatrix ker = rat_kernel(diff);
      if (ker.rows != 1) throw Error("degenerate simplex facet");
      RatVector nr(k);
      for (std::size_t col = 0; col < k; ++col) nr[col] = ker.at(0, col);
      std::vector<Int> c = clear_denominators(nr);
      Rat gamma = dot(c, intr[base]);
      // orient inward: vertex j strictly inside
      Rat vj = dot(c, intr[j]) - gamma;
      if (vj == 0) throw Error("simplex facet through opposite vertex");
      if (vj < 0) {
        for (auto& x : c) x = -x;
        gamma = -gamma;
      }
      // remove the facet iff the reference point is strictly outside
      open_facets[j] = eps_sign(c, gamma) < 0;
    }
    total += half_open_simplex_series(verts, open_facets);
  }
  return total;
}

ClassFunction EquivariantSeries::coefficient(std::size_t m) const {
  std::vector<Cyclo> vals(group->num_classes());
  for (std::size_t c = 0; c < per_class.size(); ++c) vals[c] = per_class[c].series(m)[m];
  return ClassFunction(*group, std::move(vals));
}

std::vector<ClassFunction> EquivariantSeries::coefficients(std::size_t up_to) const {
  std::vector<std::vector<Cyclo>> per(up_to + 1,
                                      std::vector<Cyclo>(group->num_classes()));
  for (std::size_t c = 0; c < per_class.size(); ++c) {
    auto s = per_class[c].series(up_to);
    for (std::size_t m = 0; m <= up_to; ++m) per[m][c] = s[m];
  }
  std::vector<ClassFunction> out;
  out.reserve(up_to + 1);
  for (auto& v : per) out.emplace_back(*group, std::move(v));
  return out;
}

EquivariantSeries equivariant_ehr(const RationalPolytope& P, const FiniteGroup& G) {
  if (!is_invariant(P, G)) throw NotInvariant();
  if (!P.is_lattice_polytope()) throw NotLatticePolytope("equivariant series needs a lattice polytope");
  EquivariantSeries S;
  S.group = &G;
  S.per_class.reserve(G.num_classes());
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    RationalPolytope F = fixed_polytope(P, G.elements[G.class_rep(c)]);
    S.per_class.push_back(polytope_ehr_series(F));
  }
  return S;
}

ClassFunction equivariant_L(const RationalPolytope& P, const FiniteGroup& G, const Int& m) {
  if (!is_invariant(P, G)) throw NotInvariant();
  return perm_character_on_points(G, lattice_points_in_dilate(P, m));
}

ClassFunction equivariant_L_interior(const RationalPolytope& P, const FiniteGroup& G,
                                     const Int& m) {
  if (!is_invariant(P, G)) throw NotInvariant();
  return perm_character_on_points(G, interior_lattice_points_in_dilate(P, m));
}

}  // namespace eqehr
