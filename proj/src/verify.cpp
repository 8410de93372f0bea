#include "eqehr/verify.hpp"

#include <algorithm>

#include "eqehr/errors.hpp"

namespace eqehr {

bool VerifyReport::all_pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const Line& l) { return l.pass; });
}

namespace {

void run_check(VerifyReport& rep, const std::string& name, const std::function<void()>& body) {
  VerifyReport::Line line;
  line.check = name;
  try {
    body();
    line.pass = true;
  } catch (const std::exception& e) {
    line.pass = false;
    line.detail = e.what();
  }
  rep.lines.push_back(std::move(line));
}

}  // namespace

VerifyReport verify_instance(const InstanceFile& inst, bool deep) {
  VerifyReport rep;
  const RationalPolytope& P = inst.P;
  const FiniteGroup& G = inst.G;

  run_check(rep, "invariance", [&] {
    if (!is_invariant(P, G)) throw CheckFailed("polytope is not invariant");
  });

  run_check(rep, "det-identity", [&] {
    // (1 - t) det(I - M_C t) = det(I - Mtilde_C t) classwise
    auto det_t = det_series_tilde(G);
    auto det_l = det_series_linear(G);
    Poly one_minus_t = Poly::from_int_coeffs({Int(1), Int(-1)});
    for (std::size_t c = 0; c < G.num_classes(); ++c) {
      if (!(one_minus_t * det_l[c] == det_t[c])) throw CheckFailed("det identity fails");
      if (!(det_t[c].coeff(0) == Cyclo(1L))) throw CheckFailed("det constant term is not 1");
    }
  });

  EquivariantSeries E = equivariant_ehr(P, G);

  run_check(rep, "ehrhart-oracle-m0-6", [&] {
    for (std::size_t m = 0; m <= 6; ++m) {
      ClassFunction implied = E.coefficient(m);
      ClassFunction counted =
          m == 0 ? ClassFunction::trivial(G) : equivariant_L(P, G, Int(static_cast<long>(m)));
      if (!(implied == counted))
        throw CheckFailed("series coefficient differs from the fixed-point count at m = " +
                          std::to_string(m));
    }
  });

  run_check(rep, "pole-orders", [&] {
    Poly one_minus_t = Poly::from_int_coeffs({Int(1), Int(-1)});
    for (std::size_t c = 0; c < G.num_classes(); ++c) {
      RationalPolytope F = fixed_polytope(P, G.elements[G.class_rep(c)]);
      auto red = E.per_class[c].reduced();
      Poly den = red.den;
      int mult = 0;
      while (true) {
        Poly q, r;
        Poly::divmod(den, one_minus_t, q, r);
        if (!r.is_zero()) break;
        den = q;
        ++mult;
      }
      if (mult != F.dim + 1)
        throw CheckFailed("pole order at t=1 differs from dim P^g + 1 on class " +
                          std::to_string(c));
    }
  });

  run_check(rep, "phi1-multiplicity", [&] {
    for (std::size_t c = 0; c < G.num_classes(); ++c) {
      auto fac = char_poly_tilde(G.elements[G.class_rep(c)]);
      RationalPolytope F = fixed_polytope(P, G.elements[G.class_rep(c)]);
      if (fac[1] != static_cast<unsigned>(F.dim) + 1)
        throw CheckFailed("Phi_1 multiplicity differs from dim P^g + 1");
    }
  });

  HStarSeries h = hstar(P, G);
  CharacterTable table = inst.character_table();

  run_check(rep, "hstar-constant-term", [&] {
    if (!(h.coefficient(0) == ClassFunction::trivial(G)))
      throw CheckFailed("constant term of h* is not 1");
  });

  run_check(rep, "hstar-identity-class", [&] {
    // h*(t)(id) = classical h* with nonnegative integer coefficients
    if (!h.class_polynomial[0]) throw CheckFailed("identity class is not a polynomial");
    Poly cls = h.per_class[0].as_polynomial();
    for (const auto& c : cls.c) {
      if (!c.is_rational() || !is_integer(c.to_rational()) || c.to_rational() < 0)
        throw CheckFailed("classical h* coefficient not a nonnegative integer");
    }
    Cyclo vol = cls.eval(Cyclo(1L));
    if (static_cast<std::size_t>(P.dim) == P.ambient_dim()) {
      if (vol != Cyclo(normalized_volume(P))) throw CheckFailed("h*(1) differs from Vol(P)");
    }
  });

  run_check(rep, "hstar-linear-coefficient", [&] {
    auto det = det_series_for_polytope(P, G);
    std::vector<Cyclo> tilde_vals;
    for (std::size_t c = 0; c < G.num_classes(); ++c) tilde_vals.push_back(-det[c].coeff(1));
    ClassFunction tilde(G, std::move(tilde_vals));
    ClassFunction want = equivariant_L(P, G, 1) - tilde;
    if (h.coeffs.size() > 1 && !(h.coefficient(1) == want))
      throw CheckFailed("linear coefficient differs from L(P,rho;1) - [Mtilde]");
    if (!is_effective(want, table)) throw CheckFailed("linear coefficient is not effective");
  });

  run_check(rep, "effective-implies-polynomial", [&] {
    auto cls = classify(h, table);
    if (cls.effective && cls.effective_exact && !cls.polynomial)
      throw CheckFailed("effective but not polynomial");
  });

  if (h.polynomial) {
    run_check(rep, "reciprocity", [&] { reciprocity_check(P, G, h); });
  }

  if (P.dim == 2) {
    run_check(rep, "dim2-decision", [&] {
      auto cls = dim2_classify(G);
      if (cls.triangulable != h.polynomial)
        throw CheckFailed("rank-2 classifier disagrees with h* polynomiality");
    });
  }

  run_check(rep, "triangulation-at-group-order", [&] {
    auto res = invariant_triangulation(P, G, G.order());
    if (!res.ok) throw CheckFailed("construction failed: " + res.failure);
    verify_invariant_triangulation(res.complex, P, G, G.order());
    // corollary: h*_N is effective and a polynomial for N = |G|
    auto hn = hstar_N(P, G, G.order());
    if (!hn.polynomial) throw CheckFailed("h*_N not polynomial at N = |G|");
    for (const auto& c : hn.coeffs)
      if (!is_effective(c, table)) throw CheckFailed("h*_N not effective at N = |G|");
  });

  if (deep) {
    // the cross-check scales the lattice by |G|; the box-point count grows
    // like Vol(P) |G|^dim, so bound the instance size honestly
    Int scaled_volume = Int(0);
    if (static_cast<std::size_t>(P.dim) == P.ambient_dim()) {
      scaled_volume = normalized_volume(P);
      for (int i = 0; i < P.dim; ++i) scaled_volume *= Int(static_cast<long>(G.order()));
    }
    if (scaled_volume > 100000) {
      VerifyReport::Line line;
      line.check = "sr-cross-check";
      line.pass = true;
      line.detail = "skipped: scaled instance too large (Vol |G|^d = " + scaled_volume.get_str() +
                    " > 100000)";
      rep.lines.push_back(line);
      return rep;
    }
    run_check(rep, "sr-cross-check", [&] {
      unsigned long N = G.order();
      auto res = invariant_triangulation(P, G, N);
      if (!res.ok) throw CheckFailed("no invariant triangulation at N = |G|");
      auto scaled = scale_instance(P, G, N);
      PolyComplex T;
      for (const auto& v : res.complex.verts) T.verts.push_back(v * Rat(static_cast<long>(N)));
      T.faces = res.complex.faces;
      auto via_sr = hstar_via_triangulation(scaled.P, scaled.G, T);
      auto direct = hstar(scaled.P, scaled.G);
      for (std::size_t c = 0; c < G.num_classes(); ++c)
        if (!(via_sr.per_class[c] == direct.per_class[c]))
          throw CheckFailed("triangulation formula differs from the direct h*");
    });
  }

  return rep;
}

}  // namespace eqehr
