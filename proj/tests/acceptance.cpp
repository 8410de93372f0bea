// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout. Exit code 0 iff everything passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "eqehr/errors.hpp"
#include "eqehr/fixtures.hpp"
#include "eqehr/sr.hpp"
#include "eqehr/triangulate.hpp"

using namespace eqehr;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = true;
  try {
    body();
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << (pass ? "PASS " : "FAIL ") << name << " (" << ms << " ms)";
  if (!pass) {
    std::cout << "  [" << detail << "]";
    ++failures;
  }
  std::cout << "\n"
            << std::flush;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw CheckFailed(msg);
}

ClassFunction cf(const FiniteGroup& G, std::vector<long> vals) {
  std::vector<Cyclo> v;
  for (long x : vals) v.emplace_back(x);
  return ClassFunction(G, std::move(v));
}

RatVector rv(std::vector<long> v) {
  RatVector r;
  for (long x : v) r.x.emplace_back(x);
  return r;
}

std::vector<Instance> corpus() {
  return {square_swap(),      klein_four_cube(), p5_reflexive(),
          z3_prism(),         circuit_d4({1, 1, 1}),   circuit_d4({1, 1, 2}),
          sym_prism(3),       sym_prism(4),            permutahedron(1),
          permutahedron(2),   permutahedron(3),        cross_polytope_2(),
          bipyramid_reflection(), segment_reflection()};
}

// deterministic random small invariant instances (dim <= 3, |G| <= 8)
std::vector<Instance> random_instances(unsigned count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Instance> out;
  auto rnd = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  while (out.size() < count) {
    int kind = rnd(0, 7);
    std::vector<AffineMap> gens;
    std::size_t d = 0;
    switch (kind) {
      case 0:  // trivial, dim 1..3
        d = static_cast<std::size_t>(rnd(1, 3));
        break;
      case 1:  // central symmetry
        d = static_cast<std::size_t>(rnd(1, 3));
        {
          IntMatrix m = IntMatrix::identity(d);
          for (std::size_t i = 0; i < d; ++i) m.at(i, i) = -1;
          std::vector<Int> tr(d, Int(0));
          for (std::size_t i = 0; i < d; ++i) tr[i] = rnd(0, 1);
          gens.push_back(AffineMap(m, tr));
        }
        break;
      case 2:  // coordinate swap
        d = static_cast<std::size_t>(rnd(2, 3));
        {
          IntMatrix m = IntMatrix::identity(d);
          std::swap(m.at(0, 0), m.at(0, 1));
          std::swap(m.at(1, 1), m.at(1, 0));
          gens.push_back(AffineMap(m, std::vector<Int>(d, Int(0))));
        }
        break;
      case 3:  // order-3 rotation plus identity block
        d = static_cast<std::size_t>(rnd(2, 3));
        {
          IntMatrix m = IntMatrix::identity(d);
          m.at(0, 0) = 0;
          m.at(0, 1) = -1;
          m.at(1, 0) = 1;
          m.at(1, 1) = -1;
          gens.push_back(AffineMap(m, std::vector<Int>(d, Int(0))));
        }
        break;
      case 4:  // order-4 rotation
        d = static_cast<std::size_t>(rnd(2, 3));
        {
          IntMatrix m = IntMatrix::identity(d);
          m.at(0, 0) = 0;
          m.at(0, 1) = -1;
          m.at(1, 0) = 1;
          m.at(1, 1) = 0;
          gens.push_back(AffineMap(m, std::vector<Int>(d, Int(0))));
        }
        break;
      case 5:  // Klein four by sign flips
        d = static_cast<std::size_t>(rnd(2, 3));
        for (int k = 0; k < 2; ++k) {
          IntMatrix m = IntMatrix::identity(d);
          m.at(k, k) = -1;
          gens.push_back(AffineMap(m, std::vector<Int>(d, Int(0))));
        }
        break;
      case 6:  // S_3 permuting three coordinates
        d = 3;
        {
          IntMatrix s(3, 3), c(3, 3);
          s.at(1, 0) = s.at(0, 1) = s.at(2, 2) = 1;
          c.at(1, 0) = c.at(2, 1) = c.at(0, 2) = 1;
          gens.push_back(AffineMap(s, std::vector<Int>(3, Int(0))));
          gens.push_back(AffineMap(c, std::vector<Int>(3, Int(0))));
        }
        break;
      default:  // dihedral of the square
        d = 2;
        gens.push_back(AffineMap(IntMatrix{{0, -1}, {1, 0}}, {Int(0), Int(0)}));
        gens.push_back(AffineMap(IntMatrix{{0, 1}, {1, 0}}, {Int(0), Int(0)}));
        break;
    }
    // conjugate by a random lattice translation to exercise affine parts
    {
      std::vector<Int> t(d);
      for (auto& x : t) x = rnd(-1, 1);
      for (auto& g : gens) {
        std::vector<Int> tr = g.translation;
        auto lt = g.linear.apply(t);
        for (std::size_t i = 0; i < d; ++i) tr[i] += t[i] - lt[i];
        g = AffineMap(g.linear, tr);
      }
    }
    FiniteGroup G;
    try {
      G = close_group(gens, d, 8);
    } catch (const OrderExceeded&) {
      continue;
    }
    // invariant polytope: orbit hull of a few random points
    std::set<RatVector> pts;
    int tries = 0;
    while (tries++ < 8) {
      std::vector<long> p(d);
      for (auto& x : p) x = rnd(-2, 2);
      for (const auto& q : orbit(G, rv(p))) pts.insert(q);
      RationalPolytope P = hull(std::vector<RatVector>(pts.begin(), pts.end()));
      if (static_cast<std::size_t>(P.dim) == d && P.vertices.size() <= 10) {
        out.push_back(Instance{std::move(P), std::move(G)});
        break;
      }
      if (pts.size() > 14) break;
    }
  }
  return out;
}

void check_structural_identities(const Instance& inst, bool with_joins) {
  const auto& P = inst.P;
  const auto& G = inst.G;
  auto h = hstar(P, G);

  // pyramid relation
  auto pyr = pyramid_instance(P, G);
  auto hp = hstar(pyr.P, pyr.G);
  require(hp.per_class.size() == h.per_class.size(), "pyramid changed the class count");
  for (std::size_t c = 0; c < h.per_class.size(); ++c)
    require(hp.per_class[c] == h.per_class[c], "pyramid relation fails");

  // Psi identities at N = 2
  {
    unsigned long N = 2;
    auto hn = hstar_N(P, G, N);
    auto lhs = psi_int(hn);
    auto scaled = scale_instance(P, G, N);
    auto rhs = hstar(scaled.P, scaled.G);
    for (std::size_t c = 0; c < h.per_class.size(); ++c)
      require(lhs.per_class[c] == rhs.per_class[c], "Psi_Int identity fails");
    auto lhs2 = psi_ceil(hn);
    auto pyr_scaled = scale_instance(pyr.P, pyr.G, N);
    auto rhs2 = hstar(pyr_scaled.P, pyr_scaled.G);
    for (std::size_t c = 0; c < h.per_class.size(); ++c)
      require(lhs2.per_class[c] == rhs2.per_class[c], "Psi_Ceil identity fails");
  }

  // reciprocity in the polynomial case
  if (h.polynomial) reciprocity_check(P, G, h);

  // prime unique-fixed-point closed form where the hypotheses hold
  {
    std::size_t p = G.order();
    bool prime = p >= 2;
    for (std::size_t q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (prime) {
      auto fs = fixed_space(G.elements[1]);
      if (fs.unique()) {
        auto closed = prime_fixed_closed_form(P, G);
        for (std::size_t c = 0; c < h.per_class.size(); ++c)
          require(closed.per_class[c] == h.per_class[c], "prime closed form differs");
      }
    }
  }

  // free join multiplicativity against a fixed small partner
  if (with_joins) {
    auto seg = segment_reflection();
    auto join = free_join_instance(P, G, seg.P, seg.G);
    auto hj = hstar(join.P, join.G);
    auto hs = hstar(seg.P, seg.G);
    for (std::size_t c = 0; c < join.G.num_classes(); ++c) {
      auto [c1, c2] = join.factor_class[c];
      require(hj.per_class[c] == h.per_class[c1] * hs.per_class[c2],
              "free join multiplicativity fails");
    }
  }
}

}  // namespace

int main() {
  criterion("criterion-1 swap-invariant square: h* and det series", [] {
    auto inst = square_swap();
    auto h = hstar(inst.P, inst.G);
    require(h.polynomial && h.degree == 1, "h* is not 1 + t");
    require(h.coefficient(0) == ClassFunction::trivial(inst.G), "constant term");
    require(h.coefficient(1) == ClassFunction::trivial(inst.G), "linear term");
    // det(I - Mtilde t) = 1 - (2+chi) t + (1+2chi) t^2 - chi t^3
    auto det = det_series_tilde(inst.G);
    AffineMap swap(IntMatrix{{0, 1}, {1, 0}}, {Int(0), Int(0)});
    std::size_t sw = inst.G.class_of[inst.G.index_of(swap)];
    auto at = [&](std::size_t cls, std::size_t k) { return det[cls].coeff(k); };
    require(at(0, 0) == Cyclo(1L) && at(sw, 0) == Cyclo(1L), "det t^0");
    require(at(0, 1) == Cyclo(-3L) && at(sw, 1) == Cyclo(-1L), "det t^1");
    require(at(0, 2) == Cyclo(3L) && at(sw, 2) == Cyclo(-1L), "det t^2");
    require(at(0, 3) == Cyclo(-1L) && at(sw, 3) == Cyclo(1L), "det t^3");
  });

  criterion("criterion-2 Klein-four cube", [] {
    auto inst = klein_four_cube();
    auto h = hstar(inst.P, inst.G);
    require(h.polynomial && h.degree == 2, "h* degree");
    require(h.coefficient(0) == ClassFunction::trivial(inst.G), "h*_0");
    require(h.coefficient(1) == ClassFunction::regular(inst.G), "h*_1 = chi_reg");
    require(h.coefficient(2) == ClassFunction::trivial(inst.G), "h*_2");
    auto table = char_table_auto(inst.G);
    auto cls = classify(h, table);
    require(cls.polynomial && cls.effective && cls.effective_exact, "classification");
    require(square_obstruction(trivial_subdivision(inst.P), inst.G).has_value(),
            "square obstruction witness");
    auto res4 = invariant_triangulation(inst.P, inst.G, 4);
    require(res4.ok, "N = 4 construction");
    verify_invariant_triangulation(res4.complex, inst.P, inst.G, 4);
    auto res1 = invariant_triangulation(inst.P, inst.G, 1);
    require(!res1.ok && !res1.failure.empty(), "N = 1 attempt must report a violation");
  });

  criterion("criterion-3 p = 5 reflexive polytope with fixture triangulation", [] {
    auto inst = p5_reflexive();
    auto h = hstar(inst.P, inst.G);
    require(h.polynomial && h.degree == 4, "h* degree");
    require(h.coefficient(0) == ClassFunction::trivial(inst.G), "h*_0");
    require(h.coefficient(1) == cf(inst.G, {6, 1, 1, 1, 1}), "h*_1");
    require(h.coefficient(2) == cf(inst.G, {11, 1, 1, 1, 1}), "h*_2");
    require(h.coefficient(3) == cf(inst.G, {6, 1, 1, 1, 1}), "h*_3");
    require(h.coefficient(4) == ClassFunction::trivial(inst.G), "h*_4");
    auto T = p5_fixture_triangulation(inst);
    require(T.is_triangulation(), "fixture is a triangulation");
    require(T.is_invariant(inst.G), "fixture invariance");
    verify_invariant_triangulation(T, inst.P, inst.G, 1);
    auto via_sr = hstar_via_triangulation(inst.P, inst.G, T);
    for (std::size_t c = 0; c < h.per_class.size(); ++c)
      require(via_sr.per_class[c] == h.per_class[c], "SR cross-check");
  });

  criterion("criterion-4 Z/3 prism", [] {
    auto inst = z3_prism();
    auto h = hstar(inst.P, inst.G);
    require(h.polynomial && h.degree == 2, "h* degree");
    require(h.coefficient(1) == cf(inst.G, {4, 1, 1}), "h*_1 = 1 + chi_reg");
    require(h.coefficient(2) == cf(inst.G, {4, 1, 1}), "h*_2 = 1 + chi_reg");
    auto S = pulling_refinement(trivial_subdivision(inst.P), {rv({0, 0, 1})});
    require(square_obstruction(S, inst.G).has_value(), "square obstruction witness");
    auto res = invariant_triangulation(inst.P, inst.G, 3);
    require(res.ok, "N = 3 construction");
    verify_invariant_triangulation(res.complex, inst.P, inst.G, 3);
    // the worked pull sequence from the prism example is also a valid input
    auto worked = orbit_pull_triangulate(
        inst.P, inst.G,
        {rv({0, 0, 1}), rv({0, 0, 0}),
         RatVector(std::vector<Rat>{Rat(2, 3), Rat(1, 3), Rat(0)})});
    verify_invariant_triangulation(worked.complex, inst.P, inst.G, 3);
  });

  criterion("criterion-5 circuit polytopes", [] {
    auto inst = circuit_d4({1, 1, 1});
    auto h = hstar(inst.P, inst.G);
    require(h.polynomial && h.degree == 2, "a=(1,1,1) degree");
    require(h.coefficient(1) == cf(inst.G, {1, -1}), "linear term is chi");
    auto table = char_table_auto(inst.G);
    auto mult = decompose(h.coefficient(1), table);
    require(mult[0] == 0 && mult[1] == 1, "trivial multiplicity 0 in the linear term");
    // classical h* = 1 + t + t^2
    Poly cls = h.per_class[0].as_polynomial();
    require(cls == Poly::from_int_coeffs({Int(1), Int(1), Int(1)}), "h*(P;t) = 1 + t + t^2");
    auto inst2 = circuit_d4({1, 1, 2});
    require(normalized_volume(inst2.P) == 4, "Vol = 4");
    auto h2 = hstar(inst2.P, inst2.G);
    require(!h2.polynomial, "even volume is not polynomial");
  });

  criterion("criterion-6 Sym_d prisms, d = 3, 4", [] {
    for (unsigned d : {3u, 4u}) {
      auto inst = sym_prism(d);
      auto h = hstar(inst.P, inst.G);
      std::vector<std::vector<unsigned>> types;
      if (d == 3)
        types = {{1, 1, 1}, {2, 1}, {3}};
      else
        types = {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
      for (const auto& type : types) {
        uint32_t c = class_of_cycle_type(inst.G, d, type);
        RatFunc want = RatFunc(Poly::one());
        for (unsigned l : type)
          want += RatFunc(Poly::monomial(Cyclo(Int(static_cast<long>(l))), l),
                          {{DenFactor{Cyclo(1L), l}, 1u}});
        want = want.mul_poly(Poly::from_int_coeffs({Int(1), Int(-1)}));
        require(h.per_class[c] == want, "cycle type formula");
      }
      for (unsigned long N = 1; N <= 6; ++N) {
        auto hn = hstar_N(inst.P, inst.G, N);
        for (const auto& type : types) {
          uint32_t c = class_of_cycle_type(inst.G, d, type);
          bool all_divide = true;
          for (unsigned l : type)
            if (N % l != 0) all_divide = false;
          require(hn.class_polynomial[c] == all_divide, "h*_N polynomiality pattern");
        }
      }
    }
  });

  criterion("criterion-7 permutahedra d <= 3", [] {
    for (unsigned d : {1u, 2u}) {
      auto inst = permutahedron(d);
      require(hstar(inst.P, inst.G).polynomial, "h* polynomial for d <= 2");
    }
    auto inst = permutahedron(3);
    auto h = hstar(inst.P, inst.G);
    require(!h.polynomial, "h* not polynomial for d = 3");
    // (1/2)-barycentric invariant triangulation: pull face-barycenter orbits
    // by decreasing dimension
    auto S0 = trivial_subdivision(inst.P);
    std::vector<RatVector> seq;
    std::set<std::vector<uint32_t>> seen;
    for (int dim = inst.P.dim; dim >= 0; --dim) {
      for (const auto& f : inst.P.faces) {
        if (f.dim != dim || seen.count(f.verts)) continue;
        for (const auto& g : inst.G.elements) seen.insert(S0.map_face(f.verts, g));
        RatVector b(inst.P.ambient_dim());
        for (auto v : f.verts) b = b + inst.P.vertices[v];
        seq.push_back(b * Rat(1, static_cast<long>(f.verts.size())));
      }
    }
    auto res = orbit_pull_triangulate(inst.P, inst.G, seq);
    verify_invariant_triangulation(res.complex, inst.P, inst.G, 2);
    auto hn = hstar_N(inst.P, inst.G, 2);
    require(hn.polynomial, "h*_2 polynomial");
    auto table = char_table_auto(inst.G);
    for (const auto& c : hn.coeffs) require(is_effective(c, table), "h*_2 effective");
  });

  criterion("criterion-8 Ehrhart oracle m = 0..6 over the corpus", [] {
    for (const auto& inst : corpus()) {
      auto E = equivariant_ehr(inst.P, inst.G);
      for (std::size_t m = 0; m <= 6; ++m) {
        ClassFunction implied = E.coefficient(m);
        ClassFunction counted = m == 0
                                    ? ClassFunction::trivial(inst.G)
                                    : equivariant_L(inst.P, inst.G, Int(static_cast<long>(m)));
        require(implied == counted, "coefficient differs from the fixed-point count");
      }
    }
  });

  criterion("criterion-9 structural identities (corpus + 20 random instances)", [] {
    for (const auto& inst : corpus()) {
      bool small = inst.P.dim <= 2 && inst.G.order() <= 4;
      check_structural_identities(inst, /*with_joins=*/small);
    }
    auto rand_insts = random_instances(20, 20240817);
    for (const auto& inst : rand_insts)
      check_structural_identities(inst, /*with_joins=*/inst.P.dim <= 2);
  });

  criterion("criterion-10 rank-2 decision procedure on a catalog", [] {
    struct Entry {
      std::vector<AffineMap> gens;
      std::vector<RatVector> poly;
    };
    auto seg = [](long a, long b) { return std::vector<Int>{Int(a), Int(b)}; };
    std::vector<Entry> catalog;
    auto unit_square = std::vector<RatVector>{rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})};
    auto sym_square = std::vector<RatVector>{rv({1, 1}), rv({1, -1}), rv({-1, 1}), rv({-1, -1})};
    auto cross = std::vector<RatVector>{rv({1, 0}), rv({-1, 0}), rv({0, 1}), rv({0, -1})};
    // 1 trivial
    catalog.push_back({{}, unit_square});
    // 2 swap
    catalog.push_back({{AffineMap(IntMatrix{{0, 1}, {1, 0}}, seg(0, 0))}, unit_square});
    // 3 central symmetry about the origin
    catalog.push_back({{AffineMap(IntMatrix{{-1, 0}, {0, -1}}, seg(0, 0))}, cross});
    // 4 central symmetry about (1/2,1/2)
    catalog.push_back({{AffineMap(IntMatrix{{-1, 0}, {0, -1}}, seg(1, 1))}, unit_square});
    // 5 order-4 rotation about the origin
    catalog.push_back({{AffineMap(IntMatrix{{0, -1}, {1, 0}}, seg(0, 0))}, sym_square});
    // 6 order-4 rotation about (1/2,1/2): forbidden
    catalog.push_back({{AffineMap(IntMatrix{{0, -1}, {1, 0}}, seg(1, 0))}, unit_square});
    // 7 reflection about x = 0
    catalog.push_back({{AffineMap(IntMatrix{{-1, 0}, {0, 1}}, seg(0, 0))}, sym_square});
    // 8 reflection about x = 1/2: forbidden
    catalog.push_back({{AffineMap(IntMatrix{{-1, 0}, {0, 1}}, seg(1, 0))}, unit_square});
    // 9 order-3 rotation about the origin
    catalog.push_back({{AffineMap(IntMatrix{{0, -1}, {1, -1}}, seg(0, 0))},
                       {rv({1, 0}), rv({0, 1}), rv({-1, -1})}});
    // 10 order-3 rotation about (2/3,1/3)
    catalog.push_back({{AffineMap(IntMatrix{{0, -1}, {1, -1}}, seg(1, 0))},
                       {rv({0, 0}), rv({1, 0}), rv({1, 1})}});
    // 11 order-6 rotation about the origin on the hexagon
    catalog.push_back({{AffineMap(IntMatrix{{1, -1}, {1, 0}}, seg(0, 0))},
                       {rv({1, 0}), rv({0, 1}), rv({-1, -1}), rv({-1, 0}), rv({0, -1}), rv({1, 1})}});
    // 12 dihedral group of the symmetric square (rotation about the origin)
    catalog.push_back({{AffineMap(IntMatrix{{0, -1}, {1, 0}}, seg(0, 0)),
                        AffineMap(IntMatrix{{0, 1}, {1, 0}}, seg(0, 0))},
                       sym_square});
    // 13 full symmetry of the unit square (rotation about the center): forbidden
    catalog.push_back({{AffineMap(IntMatrix{{0, -1}, {1, 0}}, seg(1, 0)),
                        AffineMap(IntMatrix{{0, 1}, {1, 0}}, seg(0, 0))},
                       unit_square});
    int forbidden_seen = 0;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      auto G = close_group(catalog[i].gens, 2);
      auto P = hull(catalog[i].poly);
      require(is_invariant(P, G), "catalog polytope invariant");
      auto cls = dim2_classify(G);
      auto h = hstar(P, G);
      require(cls.triangulable == h.polynomial,
              "classifier disagrees with h* polynomiality at entry " + std::to_string(i + 1));
      if (!cls.triangulable) {
        ++forbidden_seen;
      } else {
        auto T = dim2_triangulate(P, G);
        require(T.is_triangulation() && T.is_invariant(G), "constructive route");
        verify_invariant_triangulation(T, P, G, 1);
        // an invariant lattice triangulation forces effectiveness
        auto table = char_table_auto(G);
        auto hcls = classify(h, table);
        require(hcls.effective && hcls.effective_exact,
                "triangulable instance with non-effective h*");
      }
    }
    require(forbidden_seen >= 3, "catalog must include the forbidden types");
    require(catalog.size() >= 10, "catalog size");
  });

  criterion("criterion-11 monotonicity on the cross-polytope / diagonal pair", [] {
    auto inst = cross_polytope_2();
    auto Q = hull({rv({1, 0}), rv({-1, 0})});
    // shared invariant triangulation through the glue construction
    auto SQ = trivial_subdivision(Q);
    auto SK = faces_disjoint_from(inst.P, Q);
    auto S = glue_triangulations(inst.P, inst.G, Q, SQ, SK);
    require(S.is_triangulation() && S.is_invariant(inst.G), "glued triangulation");
    require(complexes_equal(restrict_complex(S, Q), SQ), "restriction to Q");
    auto table = char_table_auto(inst.G);
    require(monotonicity_check(inst.P, Q, inst.G, table), "h*(Q) <= h*(P)");
  });

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
