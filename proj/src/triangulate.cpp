#include "eqehr/triangulate.hpp"

#include <algorithm>

#include "eqehr/errors.hpp"

namespace eqehr {

namespace {

std::vector<RatVector> orbit_of(const FiniteGroup& G, const RatVector& p) {
  std::set<RatVector> s;
  for (const auto& g : G.elements) s.insert(g.apply(p));
  return std::vector<RatVector>(s.begin(), s.end());
}

// faces of the starting complex disjoint from all points pulled so far
std::vector<std::vector<uint32_t>> t_complex(const PolyComplex& S,
                                             const std::vector<RatVector>& pulled) {
  std::vector<std::vector<uint32_t>> out;
  for (const auto& f : S.faces) {
    bool hit = false;
    for (const auto& p : pulled)
      if (S.face_contains(f, p)) {
        hit = true;
        break;
      }
    if (!hit) out.push_back(f);
  }
  return out;
}

}  // namespace

TriangulationResult orbit_pull_triangulate(const PolyComplex& S0, const FiniteGroup& G,
                                           const std::vector<RatVector>& points) {
  if (!S0.is_invariant(G)) throw NotInvariant("starting subdivision is not invariant");
  PullCertificate cert;
  PolyComplex S = S0;
  std::vector<RatVector> pulled;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto orb = orbit_of(G, points[i]);
    auto T_prev = t_complex(S0, pulled);
    PullCertificate::Step step;
    step.point = points[i];
    step.orbit_size = orb.size();
    // u_i in |T(i-1)|
    step.in_support = false;
    for (const auto& f : T_prev)
      if (S0.face_contains(f, points[i])) {
        step.in_support = true;
        break;
      }
    // |F cap G.u_i| <= 1 for all F in T(i-1)
    step.orbit_condition = true;
    std::vector<uint32_t> bad_face;
    for (const auto& f : T_prev) {
      int count = 0;
      for (const auto& p : orb)
        if (S0.face_contains(f, p)) ++count;
      if (count > 1) {
        step.orbit_condition = false;
        bad_face = f;
        break;
      }
    }
    cert.steps.push_back(step);
    if (!step.in_support)
      throw HypothesisViolated(static_cast<int>(i + 1),
                               "pull point " + points[i].str() + " misses the support of T(" +
                                   std::to_string(i) + ")");
    if (!step.orbit_condition)
      throw HypothesisViolated(static_cast<int>(i + 1),
                               "orbit of " + points[i].str() + " meets a face of T(" +
                                   std::to_string(i) + ") more than once");
    S = pulling_refinement(S, orb);
    for (const auto& p : orb) pulled.push_back(p);
  }
  // condition (1): every face of T(r) is a simplex
  for (const auto& f : t_complex(S0, pulled)) {
    std::vector<RatVector> pts;
    for (auto v : f) pts.push_back(S0.verts[v]);
    if (static_cast<long>(f.size()) != S0.dim_of(f) + 1) {
      cert.final_faces_simplices = false;
      throw HypothesisViolated(static_cast<int>(points.size()),
                               "a face untouched by the pulls is not a simplex");
    }
  }
  if (!S.is_triangulation()) throw Error("orbit pulls did not produce a triangulation");
  TriangulationResult res;
  res.complex = std::move(S);
  res.certificate = std::move(cert);
  return res;
}

TriangulationResult orbit_pull_triangulate(const RationalPolytope& P, const FiniteGroup& G,
                                           const std::vector<RatVector>& points) {
  return orbit_pull_triangulate(trivial_subdivision(P), G, points);
}

namespace {

// lex-least point of a list
RatVector lex_least(const std::vector<RatVector>& pts) {
  return *std::min_element(pts.begin(), pts.end());
}

}  // namespace

InvariantTriangulation invariant_triangulation(const RationalPolytope& P, const FiniteGroup& G,
                                               unsigned long N) {
  InvariantTriangulation out;
  if (!is_invariant(P, G)) throw NotInvariant();
  if (!P.is_lattice_polytope()) throw NotLatticePolytope();
  PolyComplex S0 = trivial_subdivision(P);
  std::vector<RatVector> seq;
  std::vector<RatVector> pulled;
  Int Nz(static_cast<long>(N));

  auto in_scaled_lattice = [&](const RatVector& p) { return Nz % p.denominator() == 0; };

  // u_1: a G-fixed point of P in (1/N) Z^d; orbit averages of lattice points
  // provide candidates
  {
    std::optional<RatVector> best;
    for (const auto& u : lattice_points_in_dilate(P, 1)) {
      RatVector avg(P.ambient_dim());
      auto orb = orbit_of(G, u);
      for (const auto& q : orb) avg = avg + q;
      avg = avg * Rat(1, static_cast<long>(orb.size()));
      if (!in_scaled_lattice(avg)) continue;
      if (!best || avg < *best) best = avg;
    }
    if (!best) {
      out.ok = false;
      out.failure = "no G-fixed point of P lies in (1/" + std::to_string(N) + ") of the lattice";
      return out;
    }
    seq.push_back(*best);
    for (const auto& p : orbit_of(G, *best)) pulled.push_back(p);
  }

  while (true) {
    auto T_prev = t_complex(S0, pulled);
    if (T_prev.empty()) break;
    // u: lex-least lattice point in the support of T(i-1)
    std::optional<RatVector> u;
    for (const auto& f : T_prev) {
      auto pts = lattice_points_in_dilate(S0.face_polytope(f), 1);
      for (const auto& p : pts)
        if (!u || p < *u) u = p;
    }
    if (!u) {
      out.ok = false;
      out.failure = "support of the untouched subcomplex has no lattice point";
      return out;
    }
    auto orb_u = orbit_of(G, *u);
    // m = max |Q cap G u| over untouched faces; choose the smallest face
    // attaining it (then the minimal face of P containing the intersection)
    long m = 0;
    std::vector<uint32_t> Qface;
    for (const auto& f : T_prev) {
      long c = 0;
      for (const auto& p : orb_u)
        if (S0.face_contains(f, p)) ++c;
      if (c > m || (c == m && c > 0 && (Qface.empty() || f < Qface))) {
        m = c;
        Qface = f;
      }
    }
    if (m == 0) {
      out.ok = false;
      out.failure = "lattice point orbit misses the untouched subcomplex";
      return out;
    }
    // shrink to the smallest face of P containing Qface cap G u
    std::vector<RatVector> hitpts;
    for (const auto& p : orb_u)
      if (S0.face_contains(Qface, p)) hitpts.push_back(p);
    std::vector<uint32_t> Qmin = Qface;
    for (const auto& f : S0.subfaces_of(Qface)) {
      bool all = true;
      for (const auto& p : hitpts)
        if (!S0.face_contains(f, p)) all = false;
      if (all && f.size() < Qmin.size()) Qmin = f;
    }
    // stabilizer of Qmin
    std::vector<AffineMap> stab;
    for (const auto& g : G.elements) {
      auto img = S0.map_face(Qmin, g);
      if (img == Qmin) stab.push_back(g);
    }
    // S = conv(Qmin cap G u); S' = fixed locus of the stabilizer; find an
    // interior point of S' in (1/N) Z^d, guaranteed at denominator |G| | N
    RationalPolytope Shit = hull(hitpts);
    RationalPolytope Sfix = fixed_polytope(Shit, stab);
    std::optional<RatVector> ui;
    for (unsigned long mm = 1; mm <= N && !ui; ++mm) {
      if (N % mm != 0) continue;
      auto ipts = interior_lattice_points_in_dilate(Sfix, Int(static_cast<long>(mm)));
      if (!ipts.empty()) ui = ipts.front();
    }
    if (!ui) {
      out.ok = false;
      out.failure = "no stabilizer-fixed interior point in (1/" + std::to_string(N) +
                    ") of the lattice on face " + Shit.vertices.front().str();
      return out;
    }
    seq.push_back(*ui);
    for (const auto& p : orbit_of(G, *ui)) pulled.push_back(p);
  }

  out.pull_sequence = seq;
  try {
    auto res = orbit_pull_triangulate(P, G, seq);
    out.ok = true;
    out.complex = std::move(res.complex);
    out.certificate = std::move(res.certificate);
  } catch (const HypothesisViolated& e) {
    out.ok = false;
    out.failure = e.what();
  }
  return out;
}

TranslativeResult is_translative(const PolyComplex& S, const FiniteGroup& G) {
  if (!S.is_invariant(G)) throw NotInvariant();
  TranslativeResult res;
  res.translative = true;
  for (const auto& facet : S.facets()) {
    for (auto vi : facet) {
      for (uint32_t g = 1; g < G.order(); ++g) {
        RatVector img = G.elements[g].apply(S.verts[vi]);
        if (img == S.verts[vi]) continue;
        auto ii = S.find_vertex(img);
        if (!ii) continue;
        if (std::binary_search(facet.begin(), facet.end(), *ii)) {
          res.translative = false;
          res.witness = TranslativeWitness{S.verts[vi], g, facet};
          return res;
        }
      }
    }
  }
  return res;
}

PolyComplex translative_refine(const PolyComplex& S, const FiniteGroup& G) {
  auto tr = is_translative(S, G);
  if (!tr.translative) throw NotTranslative();
  PolyComplex cur = S;
  std::set<RatVector> old_verts(S.verts.begin(), S.verts.end());
  while (!cur.is_triangulation()) {
    // lex-least non-simplex facet, pull the orbit of its least vertex
    std::vector<std::vector<uint32_t>> facets = cur.facets();
    std::sort(facets.begin(), facets.end());
    std::optional<std::vector<uint32_t>> bad;
    for (const auto& f : facets)
      if (static_cast<long>(f.size()) != cur.dim_of(f) + 1) {
        bad = f;
        break;
      }
    if (!bad) break;
    RatVector u = cur.verts[(*bad)[0]];
    for (auto v : *bad)
      if (cur.verts[v] < u) u = cur.verts[v];
    cur = pulling_refinement(cur, orbit_of(G, u));
  }
  // postconditions: same vertices, translativity preserved
  for (const auto& f : cur.faces)
    for (auto v : f)
      if (!old_verts.count(cur.verts[v])) throw Error("translative refinement grew a vertex");
  auto tr2 = is_translative(cur, G);
  if (!tr2.translative) throw Error("translative refinement lost translativity");
  // every old simplex survives
  for (const auto& f : S.facets()) {
    if (static_cast<long>(f.size()) != S.dim_of(f) + 1) continue;
    std::vector<uint32_t> mapped;
    for (auto v : f) mapped.push_back(*cur.find_vertex(S.verts[v]));
    std::sort(mapped.begin(), mapped.end());
    if (!cur.faces.count(mapped)) throw Error("translative refinement destroyed a simplex");
  }
  return cur;
}

PolyComplex faces_disjoint_from(const RationalPolytope& P, const RationalPolytope& Q) {
  PolyComplex K;
  K.verts = P.vertices;
  for (const auto& f : P.faces) {
    std::vector<RatVector> pts;
    for (auto v : f.verts) pts.push_back(P.vertices[v]);
    if (!polytopes_intersect(hull(pts), Q)) K.faces.insert(f.verts);
  }
  return K;
}

PolyComplex restrict_complex(const PolyComplex& S, const RationalPolytope& Q) {
  PolyComplex R;
  R.verts = S.verts;
  for (const auto& f : S.faces) {
    bool inside = true;
    for (auto v : f)
      if (!Q.contains(S.verts[v])) inside = false;
    if (inside) R.faces.insert(f);
  }
  return R;
}

bool complexes_equal(const PolyComplex& A, const PolyComplex& B) {
  std::set<std::set<RatVector>> fa, fb;
  for (const auto& f : A.faces) {
    std::set<RatVector> s;
    for (auto v : f) s.insert(A.verts[v]);
    fa.insert(s);
  }
  for (const auto& f : B.faces) {
    std::set<RatVector> s;
    for (auto v : f) s.insert(B.verts[v]);
    fb.insert(s);
  }
  return fa == fb;
}

PolyComplex glue_triangulations(const RationalPolytope& P, const FiniteGroup& G,
                                const RationalPolytope& Q, const PolyComplex& SQ,
                                const PolyComplex& SK) {
  // degenerate case Q = P
  if (Q.vertices == P.vertices) return SQ;
  auto trQ = is_translative(SQ, G);
  auto trK = is_translative(SK, G);
  if (!trQ.translative && !trK.translative)
    throw PreconditionFailed("neither triangulation is translative");

  // T: pulling refinement of the trivial subdivision of P by the vertices of Q
  PolyComplex T = pulling_refinement(trivial_subdivision(P), Q.vertices);
  // refine by the height stacks of SQ and SK, each extended by zero
  auto extend_and_refine = [&](PolyComplex S, const PolyComplex& part) {
    for (const auto&层 : part.height_stack) S = regular_refinement(S, 层);
    return S;
  };
  PolyComplex S = extend_and_refine(T, SQ);
  S = extend_and_refine(S, SK);

  // triangulate by pulling vertex orbits from the translative side
  std::set<RatVector> qverts, kverts;
  for (const auto& f : SQ.faces)
    for (auto v : f) qverts.insert(SQ.verts[v]);
  for (const auto& f : SK.faces)
    for (auto v : f) kverts.insert(SK.verts[v]);
  while (!S.is_triangulation()) {
    std::optional<RatVector> u;
    for (const auto& f : S.facets()) {
      if (static_cast<long>(f.size()) == S.dim_of(f) + 1) continue;
      for (auto v : f) {
        const RatVector& p = S.verts[v];
        if ((trQ.translative && qverts.count(p)) || (trK.translative && kverts.count(p)))
          if (!u || p < *u) u = p;
      }
    }
    if (!u) throw Error("glue: no pullable vertex on a translative side");
    S = pulling_refinement(S, orbit_of(G, *u));
  }

  // postconditions: restrictions match exactly
  if (!complexes_equal(restrict_complex(S, Q), SQ))
    throw CheckFailed("glued triangulation does not restrict to S_Q");
  // S restricted to |K|: compare against SK on each face of K
  PolyComplex SKfaces = SK;
  std::set<std::set<RatVector>> got, want;
  for (const auto& f : SK.faces) {
    std::set<RatVector> s;
    for (auto v : f) s.insert(SK.verts[v]);
    want.insert(s);
  }
  for (const auto& f : S.faces) {
    std::set<RatVector> s;
    for (auto v : f) s.insert(S.verts[v]);
    if (want.count(s)) got.insert(s);
  }
  // every face of S supported inside |SK| must be a face of SK and conversely
  for (const auto& f : S.faces) {
    // inside |K| iff contained in some facet of SK
    std::vector<RatVector> pts;
    for (auto v : f) pts.push_back(S.verts[v]);
    bool insideK = false;
    for (const auto& kf : SK.facets()) {
      bool all = true;
      for (const auto& p : pts)
        if (!SK.face_polytope(kf).contains(p)) all = false;
      if (all) insideK = true;
    }
    if (insideK) {
      std::set<RatVector> s(pts.begin(), pts.end());
      if (!want.count(s)) throw CheckFailed("glued triangulation does not restrict to S_K");
    }
  }
  return S;
}

std::optional<SquareWitness> square_obstruction(const PolyComplex& S, const FiniteGroup& G) {
  if (!S.is_invariant(G)) throw NotInvariant();
  for (const auto& f : S.faces) {
    if (f.size() != 4 || S.dim_of(f) != 2) continue;
    const RationalPolytope& Q = S.face_polytope(f);
    if (Q.vertices.size() != 4) continue;
    if (!Q.is_lattice_polytope()) continue;
    // lattice-isomorphic to [0,1]^2: exactly the 4 vertices as lattice
    // points and normalized volume 2 in its affine lattice
    if (lattice_points_in_dilate(Q, 1).size() != 4) continue;
    if (normalized_volume_in_affine_lattice(Q) != 2) continue;
    // edges: the four 1-faces; two disjoint pairs
    std::vector<std::vector<uint32_t>> edges;
    for (const auto& e : Q.faces)
      if (e.dim == 1) {
        std::vector<uint32_t> ge;
        for (auto v : e.verts) ge.push_back(*S.find_vertex(Q.vertices[v]));
        std::sort(ge.begin(), ge.end());
        edges.push_back(ge);
      }
    auto same_orbit = [&](uint32_t a, uint32_t b) {
      for (const auto& g : G.elements)
        if (g.apply(S.verts[a]) == S.verts[b]) return true;
      return false;
    };
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        std::vector<uint32_t> inter;
        std::set_intersection(edges[i].begin(), edges[i].end(), edges[j].begin(), edges[j].end(),
                              std::back_inserter(inter));
        if (!inter.empty()) continue;
        if (same_orbit(edges[i][0], edges[i][1]) && same_orbit(edges[j][0], edges[j][1]))
          return SquareWitness{f, {edges[i], edges[j]}};
      }
  }
  return std::nullopt;
}

Dim2Classification dim2_classify(const FiniteGroup& G) {
  if (G.dim() != 2) throw DimensionMismatch("dim2_classify needs a rank-2 action");
  Dim2Classification out;
  for (uint32_t i = 1; i < G.order(); ++i) {
    const AffineMap& g = G.elements[i];
    auto lin_factors = cyclotomic_factors(char_poly(g.linear));
    auto fs = fixed_space(g);
    // (a) 90-degree rotation about a non-lattice center: char poly Phi_4,
    // unique fixed point outside the lattice
    if (lin_factors == std::map<unsigned long, unsigned>{{4, 1}}) {
      if (fs.unique() && !fs.point.is_integral()) {
        out.triangulable = false;
        out.offending_element = i;
        out.reason = "order-4 rotation about a half-lattice point";
        return out;
      }
    }
    // (b) reflection whose fixed line misses the lattice: char poly
    // Phi_1 Phi_2, no lattice point on the fixed line
    if (lin_factors == std::map<unsigned long, unsigned>{{1, 1}, {2, 1}}) {
      if (!fs.empty && !fs.contains_lattice_point()) {
        out.triangulable = false;
        out.offending_element = i;
        out.reason = "reflection whose axis misses the lattice";
        return out;
      }
    }
  }
  return out;
}

PolyComplex dim2_triangulate(const RationalPolytope& P, const FiniteGroup& G) {
  if (P.dim != 2) throw DimensionMismatch("dim2_triangulate needs a polygon");
  PolyComplex S = trivial_subdivision(P);
  // pull every lattice point that is not yet a vertex (an invariant set)
  while (true) {
    std::vector<RatVector> J;
    std::set<RatVector> vset(S.verts.begin(), S.verts.end());
    for (const auto& p : lattice_points_in_dilate(P, 1))
      if (!vset.count(p)) J.push_back(p);
    if (J.empty()) break;
    S = pulling_refinement(S, J);
  }
  // refine by vertex orbits while some facet is not a simplex
  while (!S.is_triangulation()) {
    bool progressed = false;
    for (const auto& f : S.facets()) {
      if (static_cast<long>(f.size()) == S.dim_of(f) + 1) continue;
      for (auto v : f) {
        PolyComplex refined = pulling_refinement(S, orbit_of(G, S.verts[v]));
        if (!complexes_equal(refined, S)) {
          S = std::move(refined);
          progressed = true;
          break;
        }
      }
      if (progressed) break;
    }
    if (!progressed)
      throw Error("minimal invariant subdivision is not a triangulation; forbidden action");
  }
  return S;
}

void verify_invariant_triangulation(const PolyComplex& T, const RationalPolytope& P,
                                    const FiniteGroup& G, unsigned long N) {
  if (!T.is_invariant(G)) throw CheckFailed("triangulation is not invariant");
  if (!T.is_triangulation()) throw CheckFailed("complex is not a triangulation");
  verify_subdivision_of(T, P);
  Int Nz(static_cast<long>(N));
  std::set<uint32_t> used;
  for (const auto& f : T.faces)
    for (auto v : f) used.insert(v);
  for (auto v : used)
    if (Nz % T.verts[v].denominator() != 0)
      throw CheckFailed("vertex " + T.verts[v].str() + " outside (1/" + std::to_string(N) +
                        ") lattice");
}

}  // namespace eqehr
