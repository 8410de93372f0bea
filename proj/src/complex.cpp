#include "eqehr/complex.hpp"

#include <algorithm>

#include "eqehr/errors.hpp"

namespace eqehr {

std::optional<Rat> HeightFunction::at(const RatVector& p) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == p) return heights[i];
  return std::nullopt;
}

uint32_t PolyComplex::vertex_index(const RatVector& p) {
  auto i = find_vertex(p);
  if (i) return *i;
  verts.push_back(p);
  return static_cast<uint32_t>(verts.size() - 1);
}

std::optional<uint32_t> PolyComplex::find_vertex(const RatVector& p) const {
  for (uint32_t i = 0; i < verts.size(); ++i)
    if (verts[i] == p) return i;
  return std::nullopt;
}

std::vector<std::vector<uint32_t>> PolyComplex::facets() const {
  std::vector<std::vector<uint32_t>> out;
  for (const auto& f : faces) {
    bool maximal = true;
    for (const auto& g : faces) {
      if (&g == &f || g.size() <= f.size()) continue;
      if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

int PolyComplex::dim_of(const std::vector<uint32_t>& f) const {
  if (f.empty()) return -1;
  RatMatrix diff(f.size() - 1, verts[f[0]].dim());
  for (std::size_t i = 1; i < f.size(); ++i)
    for (std::size_t j = 0; j < verts[f[0]].dim(); ++j)
      diff.at(i - 1, j) = verts[f[i]][j] - verts[f[0]][j];
  return static_cast<int>(diff.rank());
}

int PolyComplex::dim() const {
  int d = -1;
  for (const auto& f : faces) d = std::max(d, dim_of(f));
  return d;
}

bool PolyComplex::is_triangulation() const {
  for (const auto& f : facets())
    if (static_cast<long>(f.size()) != dim_of(f) + 1) return false;
  return true;
}

const RationalPolytope& PolyComplex::face_polytope(const std::vector<uint32_t>& f) const {
  auto it = hull_cache_.find(f);
  if (it != hull_cache_.end()) return it->second;
  std::vector<RatVector> pts;
  for (auto v : f) pts.push_back(verts[v]);
  return hull_cache_.emplace(f, hull(pts)).first->second;
}

bool PolyComplex::face_contains(const std::vector<uint32_t>& f, const RatVector& p) const {
  return face_polytope(f).contains(p);
}

std::vector<uint32_t> PolyComplex::map_face(const std::vector<uint32_t>& f,
                                            const AffineMap& g) const {
  std::vector<uint32_t> out;
  out.reserve(f.size());
  for (auto v : f) {
    auto i = find_vertex(g.apply(verts[v]));
    if (!i) throw NotInvariant("image vertex not in the complex");
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PolyComplex::is_invariant(const FiniteGroup& G) const {
  for (const auto& g : G.elements)
    for (const auto& f : faces) {
      std::vector<uint32_t> img;
      img.reserve(f.size());
      for (auto v : f) {
        auto i = find_vertex(g.apply(verts[v]));
        if (!i) return false;
        img.push_back(*i);
      }
      std::sort(img.begin(), img.end());
      if (!faces.count(img)) return false;
    }
  return true;
}

std::vector<std::vector<uint32_t>> PolyComplex::subfaces_of(const std::vector<uint32_t>& f) const {
  std::vector<std::vector<uint32_t>> out;
  for (const auto& g : faces)
    if (std::includes(f.begin(), f.end(), g.begin(), g.end())) out.push_back(g);
  return out;
}

PolyComplex trivial_subdivision(const RationalPolytope& P) {
  PolyComplex S;
  S.verts = P.vertices;
  for (const auto& f : P.faces) S.faces.insert(f.verts);
  return S;
}

namespace {

// All faces (vertex sets, global indices) of the polytope spanned by the
// given global vertex indices.
void insert_face_lattice(PolyComplex& S, const std::vector<uint32_t>& cell) {
  const RationalPolytope& C = S.face_polytope(cell);
  // map local vertex indices back to global ones
  std::vector<uint32_t> glob(C.vertices.size());
  for (std::size_t i = 0; i < C.vertices.size(); ++i) {
    auto gi = S.find_vertex(C.vertices[i]);
    if (!gi) throw Error("cell vertex missing from complex");
    glob[i] = *gi;
  }
  for (const auto& f : C.faces) {
    std::vector<uint32_t> gf;
    gf.reserve(f.verts.size());
    for (auto v : f.verts) gf.push_back(glob[v]);
    std::sort(gf.begin(), gf.end());
    S.faces.insert(gf);
  }
}

// lower-hull cells of a lifted point configuration inside the polytope cell
// `C` (intrinsic dim k); returns subsets of point indices
std::vector<std::vector<std::size_t>> lower_hull_cells(const RationalPolytope& C,
                                                       const std::vector<RatVector>& pts,
                                                       const std::vector<Rat>& w) {
  std::size_t k = static_cast<std::size_t>(C.dim);
  std::size_t n = pts.size();
  // intrinsic coordinates + height
  std::vector<RatVector> lifted(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto y = C.intrinsic(pts[i]);
    if (!y) throw Error("lower hull: point outside the cell's affine hull");
    RatVector l(k + 1);
    for (std::size_t j = 0; j < k; ++j) l[j] = (*y)[j];
    l[k] = w[i];
    lifted[i] = l;
  }
  // degenerate lift: heights affine in the points -> single cell
  {
    RatMatrix diff(n - 1, k + 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j <= k; ++j) diff.at(i - 1, j) = lifted[i][j] - lifted[0][j];
    std::size_t r = diff.rank();
    if (r < k) throw Error("lower hull: cell points do not span the cell");
    if (r == k) {
      std::vector<std::size_t> all(n);
      for (std::size_t i = 0; i < n; ++i) all[i] = i;
      return {all};
    }
  }
  // exhaustive lower-facet search: hyperplanes a.q + a_h w = beta with
  // a_h > 0 and all lifted points on the >= side
  std::vector<std::vector<std::size_t>> cells;
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> comb(k + 1);
  for (std::size_t i = 0; i <= k; ++i) comb[i] = i;
  auto next_comb = [&](std::vector<std::size_t>& c) {
    std::size_t kk = c.size();
    for (std::size_t i = kk; i-- > 0;) {
      if (c[i] < n - kk + i) {
        ++c[i];
        for (std::size_t j = i + 1; j < kk; ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    RatMatrix diff(k, k + 1);
    for (std::size_t i = 1; i <= k; ++i)
      for (std::size_t j = 0; j <= k; ++j)
        diff.at(i - 1, j) = lifted[comb[i]][j] - lifted[comb[0]][j];
    RatMatrix ker = rat_kernel(diff);
    if (ker.rows != 1) continue;
    RatVector nr(k + 1);
    for (std::size_t j = 0; j <= k; ++j) nr[j] = ker.at(0, j);
    std::vector<Int> a = clear_denominators(nr);
    if (a[k] == 0) continue;  // vertical hyperplane
    if (a[k] < 0)
      for (auto& c : a) c = -c;
    Rat beta = dot(a, lifted[comb[0]]);
    bool valid = true;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < n && valid; ++i) {
      Rat v = dot(a, lifted[i]) - beta;
      if (v < 0) valid = false;
      else if (v == 0) on.push_back(i);
    }
    if (!valid) continue;
    if (seen.count(on)) continue;
    seen.insert(on);
    cells.push_back(on);
  } while (next_comb(comb));
  if (cells.empty()) throw Error("lower hull produced no cells");
  return cells;
}

}  // namespace

PolyComplex complex_from_facets(const std::vector<std::vector<RatVector>>& cells) {
  PolyComplex S;
  for (const auto& cell : cells) {
    RationalPolytope C = hull(cell);
    std::vector<uint32_t> idx;
    for (const auto& v : C.vertices) idx.push_back(S.vertex_index(v));
    std::sort(idx.begin(), idx.end());
    insert_face_lattice(S, idx);
  }
  return S;
}

PolyComplex regular_refinement(const PolyComplex& S, const HeightFunction& omega) {
  PolyComplex out;
  out.verts = S.verts;  // keep original indices stable
  out.height_stack = S.height_stack;
  out.height_stack.push_back(omega);
  for (const auto& facet : S.facets()) {
    const RationalPolytope& C = S.face_polytope(facet);
    // collect the domain points lying in this facet
    std::vector<RatVector> pts;
    std::vector<Rat> w;
    for (auto v : facet) {
      pts.push_back(S.verts[v]);
      auto h = omega.at(S.verts[v]);
      w.push_back(h ? *h : Rat(0));
    }
    for (std::size_t i = 0; i < omega.points.size(); ++i) {
      const RatVector& p = omega.points[i];
      if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
      if (C.contains(p)) {
        pts.push_back(p);
        w.push_back(omega.heights[i]);
      }
    }
    for (const auto& cell : lower_hull_cells(C, pts, w)) {
      std::vector<RatVector> cellpts;
      for (auto i : cell) cellpts.push_back(pts[i]);
      RationalPolytope CP = hull(cellpts);
      std::vector<uint32_t> cellidx;
      for (const auto& v : CP.vertices) cellidx.push_back(out.vertex_index(v));
      std::sort(cellidx.begin(), cellidx.end());
      insert_face_lattice(out, cellidx);
    }
  }
  return out;
}

PolyComplex regular_subdivision(const RationalPolytope& P, const HeightFunction& omega) {
  for (const auto& v : P.vertices)
    if (!omega.at(v)) throw PreconditionFailed("height function must cover the vertices of P");
  return regular_refinement(trivial_subdivision(P), omega);
}

PolyComplex pulling_refinement(const PolyComplex& S, const std::vector<RatVector>& J) {
  HeightFunction omega;
  for (const auto& v : S.verts) {
    omega.points.push_back(v);
    omega.heights.emplace_back(0);
  }
  for (const auto& p : J) {
    auto h = omega.at(p);
    if (h) {
      // p is a vertex of S: set its height to -1
      for (std::size_t i = 0; i < omega.points.size(); ++i)
        if (omega.points[i] == p) omega.heights[i] = Rat(-1);
    } else {
      omega.points.push_back(p);
      omega.heights.emplace_back(-1);
    }
  }
  return regular_refinement(S, omega);
}

PolyComplex pull_point_local(const PolyComplex& S, const RatVector& u) {
  PolyComplex out;
  out.verts = S.verts;
  uint32_t ui = out.vertex_index(u);
  for (const auto& facet : S.facets()) {
    if (!S.face_contains(facet, u)) {
      insert_face_lattice(out, facet);
      continue;
    }
    const RationalPolytope& C = S.face_polytope(facet);
    // facets of S_u restricted to this cell: conv(F', u) over facets F' of
    // the cell not containing u
    std::vector<uint32_t> glob(C.vertices.size());
    for (std::size_t i = 0; i < C.vertices.size(); ++i) glob[i] = *out.find_vertex(C.vertices[i]);
    if (C.dim == 0) {
      insert_face_lattice(out, facet);
      continue;
    }
    for (const auto& f : C.faces) {
      if (f.dim != C.dim - 1) continue;
      std::vector<RatVector> fpts;
      for (auto v : f.verts) fpts.push_back(C.vertices[v]);
      if (hull(fpts).contains(u)) continue;
      std::vector<uint32_t> cone;
      for (auto v : f.verts) cone.push_back(glob[v]);
      cone.push_back(ui);
      std::sort(cone.begin(), cone.end());
      insert_face_lattice(out, cone);
    }
  }
  return out;
}

void verify_complex(const PolyComplex& S) {
  // closure under faces
  for (const auto& f : S.faces) {
    const RationalPolytope& C = S.face_polytope(f);
    if (C.vertices.size() != f.size()) throw CheckFailed("face with redundant vertex list");
    for (const auto& sub : C.faces) {
      std::vector<uint32_t> gf;
      for (auto v : sub.verts) {
        auto gi = S.find_vertex(C.vertices[v]);
        if (!gi) throw CheckFailed("face vertex missing");
        gf.push_back(*gi);
      }
      std::sort(gf.begin(), gf.end());
      if (!S.faces.count(gf)) throw CheckFailed("complex not closed under faces");
    }
  }
  // pairwise intersections are common faces
  std::vector<std::vector<uint32_t>> fs = S.facets();
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      const RationalPolytope& A = S.face_polytope(fs[i]);
      const RationalPolytope& B = S.face_polytope(fs[j]);
      // the geometric intersection must equal the face spanned by common
      // vertices lying in both
      std::vector<uint32_t> common;
      std::set_intersection(fs[i].begin(), fs[i].end(), fs[j].begin(), fs[j].end(),
                            std::back_inserter(common));
      if (!common.empty() && !S.faces.count(common))
        throw CheckFailed("facet intersection is not a face");
      // spot check: the barycenter of the common face lies in both facets,
      // and no vertex of one facet interior to the other is missed
      for (auto v : fs[i]) {
        if (B.contains(S.verts[v]) &&
            !std::binary_search(common.begin(), common.end(), v))
          throw CheckFailed("vertex of one facet lies in another without being shared");
      }
      for (auto v : fs[j]) {
        if (A.contains(S.verts[v]) &&
            !std::binary_search(common.begin(), common.end(), v))
          throw CheckFailed("vertex of one facet lies in another without being shared");
      }
    }
}

void verify_subdivision_of(const PolyComplex& S, const RationalPolytope& P) {
  verify_complex(S);
  // support check: every used vertex inside P, facet volumes sum to vol(P)
  std::set<uint32_t> used;
  for (const auto& f : S.faces)
    for (auto v : f) used.insert(v);
  for (auto v : used)
    if (!P.contains(S.verts[v])) throw CheckFailed("complex vertex outside the support polytope");
  // scale to a common denominator so volumes are integers
  Int den(1);
  for (auto v : used) den = lcm(den, S.verts[v].denominator());
  for (const auto& v : P.vertices) den = lcm(den, v.denominator());
  auto scale_poly = [&](const RationalPolytope& Q) {
    std::vector<RatVector> pts;
    for (const auto& v : Q.vertices) pts.push_back(v * Rat(den));
    return hull(pts);
  };
  RationalPolytope Pscaled = scale_poly(P);
  Int total(0);
  for (const auto& f : S.facets()) {
    if (S.dim_of(f) != P.dim) throw CheckFailed("facet of lower dimension than the support");
    total += normalized_volume_in_affine_lattice(scale_poly(S.face_polytope(f)));
  }
  if (total != normalized_volume_in_affine_lattice(Pscaled))
    throw CheckFailed("facet volumes do not fill the support");
}

}  // namespace eqehr
