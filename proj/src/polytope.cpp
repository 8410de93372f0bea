#include "eqehr/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eqehr/errors.hpp"
#include "eqehr/lattice.hpp"
#include "eqehr/normal_form.hpp"

namespace eqehr {

namespace {

// next k-combination of indices in [0, n)
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

int affine_rank(const std::vector<RatVector>& pts) {
  if (pts.empty()) return -1;
  RatMatrix diff(pts.size() - 1, pts[0].dim());
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts[0].dim(); ++j) diff.at(i - 1, j) = pts[i][j] - pts[0][j];
  return static_cast<int>(diff.rank());
}

}  // namespace

std::optional<RatVector> RationalPolytope::intrinsic(const RatVector& x) const {
  // solve directions^T y = x - aff_point
  RatMatrix A(ambient_dim(), directions.rows);
  for (std::size_t i = 0; i < directions.rows; ++i)
    for (std::size_t j = 0; j < ambient_dim(); ++j) A.at(j, i) = directions.at(i, j);
  RatVector rhs = x - aff_point;
  auto y = solve_rational(A, rhs);
  if (!y) return std::nullopt;
  // consistency (solve_rational zero-fills free vars; verify exactly)
  RatVector back(ambient_dim());
  for (std::size_t j = 0; j < ambient_dim(); ++j) {
    Rat s = aff_point[j];
    for (std::size_t i = 0; i < directions.rows; ++i) s += directions.at(i, j) * (*y)[i];
    back[j] = s;
  }
  if (!(back == x)) return std::nullopt;
  return y;
}

RatVector RationalPolytope::ambient(const RatVector& y) const {
  RatVector x = aff_point;
  for (std::size_t i = 0; i < directions.rows; ++i)
    for (std::size_t j = 0; j < ambient_dim(); ++j) x[j] += directions.at(i, j) * y[i];
  return x;
}

bool RationalPolytope::contains(const RatVector& x) const {
  auto y = intrinsic(x);
  if (!y) return false;
  for (const auto& f : facets)
    if (dot(f.normal, *y) < f.offset) return false;
  return true;
}

bool RationalPolytope::in_relative_interior(const RatVector& x) const {
  auto y = intrinsic(x);
  if (!y) return false;
  for (const auto& f : facets)
    if (dot(f.normal, *y) <= f.offset) return false;
  return true;
}

RatVector RationalPolytope::barycenter() const {
  RatVector b(ambient_dim());
  for (const auto& v : vertices) b = b + v;
  return b * Rat(1, static_cast<long>(vertices.size()));
}

std::vector<const FaceId*> RationalPolytope::facets_of_face(const FaceId& f) const {
  std::vector<const FaceId*> out;
  for (const auto& g : faces) {
    if (g.dim != f.dim - 1) continue;
    if (std::includes(f.verts.begin(), f.verts.end(), g.verts.begin(), g.verts.end()))
      out.push_back(&g);
  }
  return out;
}

bool RationalPolytope::is_lattice_polytope() const {
  return std::all_of(vertices.begin(), vertices.end(),
                     [](const RatVector& v) { return v.is_integral(); });
}

RationalPolytope hull(const std::vector<RatVector>& points) {
  if (points.empty()) throw InputError("hull of empty point set");
  std::set<RatVector> uniq(points.begin(), points.end());
  std::vector<RatVector> pts(uniq.begin(), uniq.end());

  RationalPolytope P;
  P.aff_point = pts[0];
  std::size_t d = pts[0].dim();

  // greedy basis of the direction space
  std::vector<RatVector> dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVector cand = pts[i] - pts[0];
    RatMatrix test(dirs.size() + 1, d);
    for (std::size_t r = 0; r < dirs.size(); ++r)
      for (std::size_t j = 0; j < d; ++j) test.at(r, j) = dirs[r][j];
    for (std::size_t j = 0; j < d; ++j) test.at(dirs.size(), j) = cand[j];
    if (test.rank() == dirs.size() + 1) dirs.push_back(cand);
  }
  std::size_t k = dirs.size();
  P.dim = static_cast<int>(k);
  P.directions = RatMatrix(k, d);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < d; ++j) P.directions.at(r, j) = dirs[r][j];

  // intrinsic coordinates of all candidate points
  std::vector<RatVector> intr;
  intr.reserve(pts.size());
  for (const auto& p : pts) {
    auto y = P.intrinsic(p);
    if (!y) throw Error("hull: point outside computed affine hull");
    intr.push_back(*y);
  }

  if (k == 0) {
    P.vertices = {pts[0]};
    P.vert_intr = {RatVector(0)};
    P.faces = {FaceId{{0}, 0}};
    return P;
  }

  // exhaustive supporting-hyperplane search over k-subsets
  struct FacetCand {
    std::vector<Int> normal;
    Rat offset;
    std::vector<std::size_t> on;  // point indices on the hyperplane
  };
  std::vector<FacetCand> found;
  std::set<std::pair<std::vector<Int>, Rat>> seen;
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  std::size_t n = pts.size();
  if (n < k) throw Error("hull: inconsistent dimension");
  do {
    // hyperplane through intr[comb[0..k-1]]: normal = kernel of difference rows
    RatMatrix diff(k - 1, k);
    for (std::size_t i = 1; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        diff.at(i - 1, j) = intr[comb[i]][j] - intr[comb[0]][j];
    RatMatrix ker = rat_kernel(diff);
    if (ker.rows != 1) continue;  // points affinely dependent
    RatVector nr(k);
    for (std::size_t j = 0; j < k; ++j) nr[j] = ker.at(0, j);
    std::vector<Int> normal = clear_denominators(nr);
    Rat offset = dot(normal, intr[comb[0]]);
    // orientation: all points on >= side (flip if needed); reject if mixed
    int side = 0;
    bool valid = true;
    for (std::size_t i = 0; i < n && valid; ++i) {
      Rat v = dot(normal, intr[i]) - offset;
      if (v == 0) continue;
      int s = v > 0 ? 1 : -1;
      if (side == 0)
        side = s;
      else if (side != s)
        valid = false;
    }
    if (!valid || side == 0) continue;
    if (side < 0) {
      for (auto& c : normal) c = -c;
      offset = -offset;
    }
    if (seen.count({normal, offset})) continue;
    seen.insert({normal, offset});
    FacetCand fc;
    fc.normal = normal;
    fc.offset = offset;
    for (std::size_t i = 0; i < n; ++i)
      if (dot(normal, intr[i]) == offset) fc.on.push_back(i);
    // facet iff the points on the hyperplane span it affinely
    std::vector<RatVector> onpts;
    for (auto i : fc.on) onpts.push_back(intr[i]);
    if (affine_rank(onpts) == static_cast<int>(k) - 1) found.push_back(std::move(fc));
  } while (next_combination(comb, n));

  // vertices: points where the active facet normals span the whole space
  std::vector<bool> is_vertex(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Int>> normals;
    for (const auto& fc : found)
      if (std::find(fc.on.begin(), fc.on.end(), i) != fc.on.end()) normals.push_back(fc.normal);
    RatMatrix A(normals.size(), k);
    for (std::size_t r = 0; r < normals.size(); ++r)
      for (std::size_t j = 0; j < k; ++j) A.at(r, j) = Rat(normals[r][j]);
    if (A.rank() == k) is_vertex[i] = true;
  }

  std::vector<std::size_t> vidx;
  for (std::size_t i = 0; i < n; ++i)
    if (is_vertex[i]) vidx.push_back(i);
  // pts are lex sorted already (set ordering)
  for (auto i : vidx) {
    P.vertices.push_back(pts[i]);
    P.vert_intr.push_back(intr[i]);
  }
  // re-anchor intrinsic coords on the first vertex for determinism
  for (const auto& fc : found) {
    RationalPolytope::Facet f;
    f.normal = fc.normal;
    f.offset = fc.offset;
    P.facets.push_back(std::move(f));
  }

  // face lattice: meet-closure of facet vertex sets
  std::map<std::size_t, std::size_t> old_to_new;
  for (std::size_t v = 0; v < vidx.size(); ++v) old_to_new[vidx[v]] = v;
  std::set<std::vector<uint32_t>> facesets;
  std::vector<uint32_t> all;
  for (uint32_t v = 0; v < vidx.size(); ++v) all.push_back(v);
  facesets.insert(all);
  std::vector<std::vector<uint32_t>> facet_sets;
  for (const auto& fc : found) {
    std::vector<uint32_t> fs;
    for (auto i : fc.on)
      if (old_to_new.count(i)) fs.push_back(static_cast<uint32_t>(old_to_new[i]));
    std::sort(fs.begin(), fs.end());
    facet_sets.push_back(fs);
    facesets.insert(fs);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<uint32_t>> current(facesets.begin(), facesets.end());
    for (const auto& f : current)
      for (const auto& g : facet_sets) {
        std::vector<uint32_t> inter;
        std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(inter));
        if (!inter.empty() && !facesets.count(inter)) {
          facesets.insert(inter);
          grew = true;
        }
      }
  }
  for (const auto& fs : facesets) {
    std::vector<RatVector> fpts;
    for (auto v : fs) fpts.push_back(P.vert_intr[v]);
    P.faces.push_back(FaceId{fs, affine_rank(fpts)});
  }
  std::sort(P.faces.begin(), P.faces.end());
  return P;
}

bool is_invariant(const RationalPolytope& P, const AffineMap& g) {
  std::set<RatVector> vs(P.vertices.begin(), P.vertices.end());
  for (const auto& v : P.vertices)
    if (!vs.count(g.apply(v))) return false;
  return true;
}

bool is_invariant(const RationalPolytope& P, const FiniteGroup& G) {
  return std::all_of(G.elements.begin(), G.elements.end(),
                     [&](const AffineMap& g) { return is_invariant(P, g); });
}

RationalPolytope fixed_polytope(const RationalPolytope& P, const AffineMap& g) {
  std::vector<AffineMap> subgroup;
  AffineMap p = AffineMap::identity(g.dim());
  do {
    subgroup.push_back(p);
    p = g.compose(p);
  } while (!(p == subgroup[0]) && subgroup.size() <= 4096);
  return fixed_polytope(P, subgroup);
}

RationalPolytope fixed_polytope(const RationalPolytope& P, const std::vector<AffineMap>& subgroup) {
  for (const auto& g : subgroup)
    if (!is_invariant(P, g)) throw NotInvariant();
  std::vector<RatVector> averages;
  Rat inv(1, static_cast<long>(subgroup.size()));
  for (const auto& v : P.vertices) {
    RatVector s(P.ambient_dim());
    for (const auto& g : subgroup) s = s + g.apply(v);
    averages.push_back(s * inv);
  }
  RationalPolytope F = hull(averages);
  // sanity: every vertex of the fixed polytope is fixed by the subgroup
  for (const auto& g : subgroup)
    for (const auto& v : F.vertices)
      if (!(g.apply(v) == v)) throw Error("fixed polytope vertex not fixed");
  return F;
}

namespace {

std::vector<std::vector<uint32_t>> pulling_triangulation_of_face(
    const RationalPolytope& P, const FaceId& face,
    std::map<std::vector<uint32_t>, std::vector<std::vector<uint32_t>>>& memo) {
  auto it = memo.find(face.verts);
  if (it != memo.end()) return it->second;
  std::vector<std::vector<uint32_t>> out;
  if (static_cast<long>(face.verts.size()) == face.dim + 1) {
    out = {face.verts};
  } else {
    uint32_t v = face.verts.front();  // least vertex: lex-least by vertex order
    for (const FaceId* G : P.facets_of_face(face)) {
      if (std::binary_search(G->verts.begin(), G->verts.end(), v)) continue;
      for (auto simplex : pulling_triangulation_of_face(P, *G, memo)) {
        simplex.push_back(v);
        std::sort(simplex.begin(), simplex.end());
        out.push_back(std::move(simplex));
      }
    }
  }
  memo[face.verts] = out;
  return out;
}

}  // namespace

std::vector<std::vector<uint32_t>> pulling_triangulation(const RationalPolytope& P) {
  std::map<std::vector<uint32_t>, std::vector<std::vector<uint32_t>>> memo;
  return pulling_triangulation_of_face(P, P.full_face(), memo);
}

Int normalized_volume(const RationalPolytope& P) {
  if (P.dim < 0 || static_cast<std::size_t>(P.dim) != P.ambient_dim())
    throw DimensionMismatch("normalized_volume needs a full-dimensional polytope");
  if (P.dim == 0) return 1;
  Rat vol(0);
  for (const auto& simplex : pulling_triangulation(P)) {
    RatMatrix E(P.dim, P.dim);
    for (int i = 1; i <= P.dim; ++i)
      for (int j = 0; j < P.dim; ++j)
        E.at(i - 1, j) = P.vertices[simplex[i]][j] - P.vertices[simplex[0]][j];
    Rat d = E.det();
    vol += d < 0 ? Rat(-d) : d;
  }
  if (!is_integer(vol)) throw Error("normalized volume of a non-lattice polytope is fractional");
  return vol.get_num();
}

Int normalized_volume_in_affine_lattice(const RationalPolytope& P) {
  if (!P.is_lattice_polytope()) throw NotLatticePolytope();
  if (P.dim == 0) return 1;
  std::size_t d = P.ambient_dim();
  // saturated basis of the direction lattice
  IntMatrix dirs(P.vertices.size() - 1, d);
  for (std::size_t i = 1; i < P.vertices.size(); ++i)
    for (std::size_t j = 0; j < d; ++j)
      dirs.at(i - 1, j) = Rat(P.vertices[i][j] - P.vertices[0][j]).get_num();
  IntMatrix B = saturate_rows(dirs);
  Rat vol(0);
  for (const auto& simplex : pulling_triangulation(P)) {
    RatMatrix E(P.dim, P.dim);
    for (int i = 1; i <= P.dim; ++i) {
      RatVector diff = P.vertices[simplex[i]] - P.vertices[simplex[0]];
      auto c = coords_in_basis(B, diff);
      if (!c) throw Error("face direction outside its lattice");
      for (int j = 0; j < P.dim; ++j) E.at(i - 1, j) = (*c)[j];
    }
    Rat dd = E.det();
    vol += dd < 0 ? Rat(-dd) : dd;
  }
  if (!is_integer(vol)) throw Error("normalized volume fractional");
  return vol.get_num();
}

namespace {

std::vector<RatVector> enumerate_points(const RationalPolytope& P, const Int& m, bool interior) {
  if (m < 1) throw InputError("dilate must be a positive integer");
  std::size_t d = P.ambient_dim();
  std::vector<RatVector> out;
  auto test = [&](const RatVector& x) {
    return interior ? P.in_relative_interior(x) : P.contains(x);
  };

  if (static_cast<std::size_t>(P.dim) == d) {
    // bounding box of m*P
    std::vector<Int> lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
      Rat mn = P.vertices[0][j], mx = mn;
      for (const auto& v : P.vertices) {
        if (v[j] < mn) mn = v[j];
        if (v[j] > mx) mx = v[j];
      }
      lo[j] = ceil(mn * Rat(m));
      hi[j] = floor(mx * Rat(m));
      if (lo[j] > hi[j]) return {};
    }
    std::vector<Int> z = lo;
    while (true) {
      RatVector x(d);
      for (std::size_t j = 0; j < d; ++j) x[j] = Rat(z[j]) / Rat(m);
      if (test(x)) out.push_back(x);
      std::size_t j = 0;
      while (j < d) {
        ++z[j];
        if (z[j] <= hi[j]) break;
        z[j] = lo[j];
        ++j;
      }
      if (j == d) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // lower-dimensional: solve for the affine lattice of aff(m P)
  // equations: N (x) = m * N p0 where rows of N span the normal space
  RatMatrix Ndirs = rat_kernel(P.directions);  // rows orthogonal to directions
  std::size_t ne = Ndirs.rows;
  IntMatrix E(ne, d);
  std::vector<Int> rhs(ne);
  for (std::size_t i = 0; i < ne; ++i) {
    RatVector row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = Ndirs.at(i, j);
    Rat off(0);
    for (std::size_t j = 0; j < d; ++j) off += row[j] * P.aff_point[j];
    off *= Rat(m);
    Int den(1);
    for (std::size_t j = 0; j < d; ++j) den = lcm(den, Int(row[j].get_den()));
    den = lcm(den, Int(off.get_den()));
    for (std::size_t j = 0; j < d; ++j) E.at(i, j) = Rat(row[j] * Rat(den)).get_num();
    Rat r = off * Rat(den);
    if (!is_integer(r)) return {};
    rhs[i] = r.get_num();
  }
  auto x0 = solve_integer(E, rhs);
  if (!x0) return {};
  IntMatrix D = integer_kernel(E);  // saturated direction lattice, rank = P.dim
  std::size_t kk = D.rows;
  if (kk == 0) {
    RatVector x(d);
    for (std::size_t j = 0; j < d; ++j) x[j] = Rat((*x0)[j]) / Rat(m);
    if (test(x)) out.push_back(x);
    return out;
  }
  // z-box: each z-coordinate is a linear functional on m*P, so its range is
  // spanned by the vertex values
  std::vector<Rat> mn(kk), mx(kk);
  bool first = true;
  for (const auto& v : P.vertices) {
    RatVector w(d);
    for (std::size_t j = 0; j < d; ++j) w[j] = v[j] * Rat(m) - Rat((*x0)[j]);
    auto c = coords_in_basis(D, w);
    if (!c) throw Error("vertex outside affine-lattice span");
    for (std::size_t i = 0; i < kk; ++i) {
      if (first || (*c)[i] < mn[i]) mn[i] = (*c)[i];
      if (first || (*c)[i] > mx[i]) mx[i] = (*c)[i];
    }
    first = false;
  }
  std::vector<Int> lo(kk), hi(kk);
  for (std::size_t i = 0; i < kk; ++i) {
    lo[i] = ceil(mn[i]);
    hi[i] = floor(mx[i]);
    if (lo[i] > hi[i]) return {};
  }
  std::vector<Int> z = lo;
  while (true) {
    RatVector x(d);
    for (std::size_t j = 0; j < d; ++j) {
      Rat s((*x0)[j]);
      for (std::size_t i = 0; i < kk; ++i) s += Rat(D.at(i, j)) * Rat(z[i]);
      x[j] = s / Rat(m);
    }
    if (test(x)) out.push_back(x);
    std::size_t i = 0;
    while (i < kk) {
      ++z[i];
      if (z[i] <= hi[i]) break;
      z[i] = lo[i];
      ++i;
    }
    if (i == kk) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<RatVector> lattice_points_in_dilate(const RationalPolytope& P, const Int& m) {
  return enumerate_points(P, m, false);
}

std::vector<RatVector> interior_lattice_points_in_dilate(const RationalPolytope& P, const Int& m) {
  return enumerate_points(P, m, true);
}

Int count_lattice_points(const RationalPolytope& P, const Int& m) {
  return Int(static_cast<long>(lattice_points_in_dilate(P, m).size()));
}

Int codegree(const RationalPolytope& P) {
  for (long m = 1; m <= P.dim + 1; ++m)
    if (!interior_lattice_points_in_dilate(P, Int(m)).empty()) return Int(m);
  throw Error("codegree: no interior point found up to dim+1");
}

namespace {

struct LinExpr {
  RatVector a;  // coefficient vector
  Rat b;        // a . x >= b (inequality) or a . x = b (equation)
};

// ambient constraint system of a polytope: equations for the affine hull and
// one inequality per facet
void ambient_constraints(const RationalPolytope& P, std::vector<LinExpr>& eqs,
                         std::vector<LinExpr>& ineqs) {
  std::size_t d = P.ambient_dim();
  // x in aff(P): N (x - p0) = 0 for N spanning the normal space
  RatMatrix N = rat_kernel(P.directions.rows ? P.directions : RatMatrix(0, d));
  if (P.dim == 0) {
    // point: x = p0
    for (std::size_t j = 0; j < d; ++j) {
      LinExpr e;
      e.a = RatVector(d);
      e.a[j] = 1;
      e.b = P.aff_point[j];
      eqs.push_back(e);
    }
    return;
  }
  for (std::size_t i = 0; i < N.rows; ++i) {
    LinExpr e;
    e.a = RatVector(d);
    Rat b(0);
    for (std::size_t j = 0; j < d; ++j) {
      e.a[j] = N.at(i, j);
      b += N.at(i, j) * P.aff_point[j];
    }
    e.b = b;
    eqs.push_back(e);
  }
  // intrinsic facet c . y >= gamma with y = M (x - p0), M = (D D^T)^{-1} D
  RatMatrix D = P.directions;
  RatMatrix DDt = D * D.transpose();
  RatMatrix M = rat_inverse(DDt) * D;  // dim x d
  for (const auto& f : P.facets) {
    LinExpr e;
    e.a = RatVector(d);
    Rat shift(0);
    for (std::size_t r = 0; r < M.rows; ++r) {
      for (std::size_t j = 0; j < d; ++j) e.a[j] += Rat(f.normal[r]) * M.at(r, j);
      for (std::size_t j = 0; j < d; ++j) shift += Rat(f.normal[r]) * M.at(r, j) * P.aff_point[j];
    }
    e.b = f.offset + shift;
    ineqs.push_back(e);
  }
}

}  // namespace

bool polytopes_intersect(const RationalPolytope& A, const RationalPolytope& B) {
  std::size_t d = A.ambient_dim();
  std::vector<LinExpr> eqs, ineqs;
  ambient_constraints(A, eqs, ineqs);
  ambient_constraints(B, eqs, ineqs);
  // eliminate variables, equations first
  std::size_t nvars = d;
  std::vector<bool> eliminated(nvars, false);
  for (std::size_t round = 0; round < nvars; ++round) {
    // pick a variable appearing in an equation
    long var = -1;
    std::size_t eq_idx = 0;
    for (std::size_t e = 0; e < eqs.size() && var < 0; ++e)
      for (std::size_t j = 0; j < nvars; ++j)
        if (!eliminated[j] && eqs[e].a[j] != 0) {
          var = static_cast<long>(j);
          eq_idx = e;
          break;
        }
    if (var < 0) break;
    LinExpr pivot = eqs[eq_idx];
    eqs.erase(eqs.begin() + static_cast<long>(eq_idx));
    Rat pc = pivot.a[var];
    auto substitute = [&](LinExpr& e) {
      if (e.a[var] == 0) return;
      Rat f = e.a[var] / pc;
      for (std::size_t j = 0; j < nvars; ++j) e.a[j] -= f * pivot.a[j];
      e.b -= f * pivot.b;
    };
    for (auto& e : eqs) substitute(e);
    for (auto& e : ineqs) substitute(e);
    eliminated[var] = true;
  }
  // leftover equations with all-zero coefficients must have b = 0
  for (const auto& e : eqs) {
    bool zero = true;
    for (std::size_t j = 0; j < nvars; ++j)
      if (!eliminated[j] && e.a[j] != 0) zero = false;
    if (zero && e.b != 0) return false;
  }
  // Fourier-Motzkin on the remaining inequalities
  for (std::size_t j = 0; j < nvars; ++j) {
    if (eliminated[j]) continue;
    std::vector<LinExpr> pos, neg, rest;
    for (const auto& e : ineqs) {
      if (e.a[j] > 0)
        pos.push_back(e);
      else if (e.a[j] < 0)
        neg.push_back(e);
      else
        rest.push_back(e);
    }
    // a.x >= b with a_j > 0 gives x_j >= (b - a'.x')/a_j; with a_j < 0 gives
    // x_j <= ...; combine each (pos, neg) pair
    for (const auto& p : pos)
      for (const auto& n : neg) {
        LinExpr e;
        e.a = RatVector(nvars);
        // p: a_j x_j >= b_p - sum; n: a_j x_j >= b_n - sum with a_j < 0
        // scale: e = p / p.a[j] + n / (-n.a[j]) flips nothing since both
        // normalized to x_j >= lower and -x_j >= -upper => upper >= lower
        Rat cp = p.a[j], cn = -n.a[j];
        for (std::size_t l = 0; l < nvars; ++l) e.a[l] = p.a[l] / cp + n.a[l] / cn;
        e.b = p.b / cp + n.b / cn;
        e.a[j] = 0;
        rest.push_back(e);
      }
    ineqs = std::move(rest);
    eliminated[j] = true;
    // dedup to keep the system small
    std::sort(ineqs.begin(), ineqs.end(), [](const LinExpr& x, const LinExpr& y) {
      if (x.a.x != y.a.x) return x.a.x < y.a.x;
      return x.b < y.b;
    });
    ineqs.erase(std::unique(ineqs.begin(), ineqs.end(),
                            [](const LinExpr& x, const LinExpr& y) {
                              return x.a.x == y.a.x && x.b == y.b;
                            }),
                ineqs.end());
  }
  for (const auto& e : ineqs)
    if (e.b > 0) return false;  // 0 >= b > 0 infeasible
  return true;
}

}  // namespace eqehr
