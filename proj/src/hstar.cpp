#include "eqehr/hstar.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include "eqehr/errors.hpp"
#include "eqehr/lattice.hpp"
#include "eqehr/normal_form.hpp"
#include "eqehr/triangulate.hpp"

namespace eqehr {

namespace {

// the monotonicity hypothesis: an invariant lattice triangulation of P that
// restricts to one of Q; verify a supplied one, otherwise build it by gluing
// Q against the faces of P disjoint from Q
void ensure_shared_triangulation(const RationalPolytope& P, const RationalPolytope& Q,
                                 const FiniteGroup& G, const PolyComplex* supplied) {
  if (Q.vertices == P.vertices) return;
  auto restriction_ok = [&](const PolyComplex& T) {
    PolyComplex R = restrict_complex(T, Q);
    if (!R.is_triangulation()) return false;
    verify_subdivision_of(R, Q);
    return true;
  };
  if (supplied) {
    verify_invariant_triangulation(*supplied, P, G, 1);
    if (!restriction_ok(*supplied))
      throw PreconditionFailed("supplied triangulation does not restrict to Q");
    return;
  }
  auto triangulate_part = [&](PolyComplex S) {
    if (S.is_triangulation()) return S;
    return translative_refine(S, G);
  };
  PolyComplex SQ = triangulate_part(trivial_subdivision(Q));
  PolyComplex SK = triangulate_part(faces_disjoint_from(P, Q));
  PolyComplex T = glue_triangulations(P, G, Q, SQ, SK);
  if (!restriction_ok(T)) throw PreconditionFailed("glued triangulation does not restrict to Q");
}

}  // namespace

std::size_t default_truncation(int dim) { return 2 * static_cast<std::size_t>(dim + 1); }

const ClassFunction& HStarSeries::coefficient(std::size_t m) const {
  if (m >= coeffs.size()) throw Error("h* coefficient index beyond computed range");
  return coeffs[m];
}

std::vector<Poly> det_series_for_polytope(const RationalPolytope& P, const FiniteGroup& G) {
  // saturated basis of the direction lattice of aff(P)
  std::size_t d = P.ambient_dim();
  IntMatrix B(0, d);
  if (P.dim > 0) {
    IntMatrix dirs(P.vertices.size() - 1, d);
    for (std::size_t i = 1; i < P.vertices.size(); ++i) {
      RatVector diff = P.vertices[i] - P.vertices[0];
      auto w = clear_denominators(diff);
      for (std::size_t j = 0; j < d; ++j) dirs.at(i - 1, j) = w[j];
    }
    B = saturate_rows(dirs);
  }
  std::size_t k = B.rows;
  std::vector<Poly> out;
  Poly one_minus_t = Poly::from_int_coeffs({Int(1), Int(-1)});
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    const AffineMap& g = G.elements[G.class_rep(c)];
    if (k == 0) {
      out.push_back(one_minus_t);
      continue;
    }
    // matrix of the linear part on the direction lattice basis
    IntMatrix A(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      RatVector img(d);
      for (std::size_t j = 0; j < d; ++j) {
        Rat s(0);
        for (std::size_t l = 0; l < d; ++l) s += Rat(g.linear.at(j, l)) * Rat(B.at(i, l));
        img[j] = s;
      }
      auto coords = coords_in_basis(B, img);
      if (!coords || !coords->is_integral())
        throw NotInvariant("group does not preserve the direction lattice of P");
      for (std::size_t j = 0; j < k; ++j) A.at(i, j) = (*coords)[j].get_num();
    }
    // det(I - A^T t) = det(I - A t); reversal of the characteristic polynomial
    auto cp = char_poly(A);
    std::vector<Int> rev(cp.rbegin(), cp.rend());
    out.push_back(one_minus_t * Poly::from_int_coeffs(rev));
  }
  return out;
}

HStarSeries make_hstar_series(const FiniteGroup& G, std::vector<RatFunc> per_class,
                              std::size_t truncation) {
  if (truncation == 0) truncation = 8;
  HStarSeries h;
  h.group = &G;
  h.per_class = std::move(per_class);
  h.class_polynomial.resize(h.per_class.size());
  h.polynomial = true;
  long deg = 0;
  for (std::size_t c = 0; c < h.per_class.size(); ++c) {
    h.class_polynomial[c] = h.per_class[c].is_polynomial();
    if (!h.class_polynomial[c]) h.polynomial = false;
  }
  if (h.polynomial) {
    std::vector<Poly> polys;
    for (const auto& f : h.per_class) {
      polys.push_back(f.as_polynomial());
      deg = std::max(deg, polys.back().degree());
    }
    h.degree = deg;
    h.truncated = false;
    for (long m = 0; m <= deg; ++m) {
      std::vector<Cyclo> vals(G.num_classes());
      for (std::size_t c = 0; c < polys.size(); ++c) vals[c] = polys[c].coeff(m);
      h.coeffs.emplace_back(G, std::move(vals));
    }
  } else {
    h.truncated = true;
    h.truncation = truncation;
    for (std::size_t m = 0; m <= truncation; ++m) {
      std::vector<Cyclo> vals(G.num_classes());
      for (std::size_t c = 0; c < h.per_class.size(); ++c)
        vals[c] = h.per_class[c].series(truncation)[m];
      h.coeffs.emplace_back(G, std::move(vals));
    }
  }
  return h;
}

HStarSeries hstar(const RationalPolytope& P, const FiniteGroup& G, std::size_t truncation) {
  if (!P.is_lattice_polytope())
    throw NotLatticePolytope("equivariant h* is only defined for lattice polytopes");
  if (!is_invariant(P, G)) throw NotInvariant();
  if (truncation == 0) truncation = default_truncation(P.dim);
  auto det = det_series_for_polytope(P, G);
  std::vector<RatFunc> per_class;
  per_class.reserve(G.num_classes());
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    RationalPolytope F = fixed_polytope(P, G.elements[G.class_rep(c)]);
    per_class.push_back(polytope_ehr_series(F).mul_poly(det[c]));
  }
  return make_hstar_series(G, std::move(per_class), truncation);
}

Classification classify(const HStarSeries& h, const CharacterTable& table) {
  Classification c;
  c.polynomial = h.polynomial;
  c.effective_exact = h.polynomial;
  c.bound = h.coeffs.size();
  c.effective = true;
  for (const auto& coeff : h.coeffs)
    if (!is_effective(coeff, table)) c.effective = false;
  if (h.polynomial) {
    c.degree = h.degree;
    c.leading = h.coeffs.empty() ? ClassFunction::zero(*h.group) : h.coeffs.back();
  }
  return c;
}

void reciprocity_check(const RationalPolytope& P, const FiniteGroup& G, const HStarSeries& h) {
  if (!h.polynomial) throw CheckFailed("reciprocity check requires a polynomial h*");
  Int codeg = codegree(P);
  Int want_deg = Int(P.dim) + 1 - codeg;
  if (Int(h.degree) != want_deg)
    throw CheckFailed("deg h* = " + std::to_string(h.degree) +
                      " but dim + 1 - codeg = " + want_deg.get_str());
  ClassFunction leading = h.coeffs.back();
  ClassFunction want = equivariant_L_interior(P, G, codeg);
  if (!(leading == want))
    throw CheckFailed("leading coefficient " + leading.str() +
                      " differs from interior character " + want.str());
}

HStarNSeries hstar_N(const RationalPolytope& P, const FiniteGroup& G, unsigned long N,
                     std::size_t truncation) {
  if (!P.is_lattice_polytope()) throw NotLatticePolytope();
  if (!is_invariant(P, G)) throw NotInvariant();
  if (N == 0) throw InputError("N must be positive");
  if (truncation == 0) truncation = default_truncation(P.dim) * N;
  auto det = det_series_for_polytope(P, G);
  HStarNSeries s;
  s.group = &G;
  s.N = N;
  s.polynomial = true;
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    RationalPolytope F = fixed_polytope(P, G.elements[G.class_rep(c)]);
    // Ehr(P^g; s) * det(I - Mtilde s^N)(g)
    RatFunc f = polytope_ehr_series(F).mul_poly(det[c].substitute_power(N));
    s.per_class.push_back(std::move(f));
    s.class_polynomial.push_back(s.per_class.back().is_polynomial());
    if (!s.class_polynomial.back()) s.polynomial = false;
  }
  std::size_t upto = truncation;
  if (s.polynomial) {
    long deg = 0;
    for (const auto& f : s.per_class) deg = std::max(deg, f.as_polynomial().degree());
    upto = static_cast<std::size_t>(deg);
    s.truncated = false;
  } else {
    s.truncated = true;
    s.truncation = truncation;
  }
  for (std::size_t j = 0; j <= upto; ++j) {
    std::vector<Cyclo> vals(G.num_classes());
    for (std::size_t c = 0; c < s.per_class.size(); ++c) vals[c] = s.per_class[c].series(upto)[j];
    s.coeffs.emplace_back(G, std::move(vals));
  }
  return s;
}

namespace {

// Factor a polynomial whose roots are all roots of unity of order dividing
// `modulus` into factors (1 - zeta t); throws when a nonconstant remainder
// survives.
std::vector<std::pair<DenFactor, unsigned>> factor_into_unit_binomials(Poly p,
                                                                       unsigned long modulus) {
  std::vector<std::pair<DenFactor, unsigned>> out;
  Cyclo c0 = p.coeff(0);
  if (c0.is_zero()) throw Error("denominator vanishes at 0");
  p = p.scale(c0.inverse());
  while (p.degree() > 0) {
    bool found = false;
    for (unsigned long a = 0; a < modulus && !found; ++a) {
      Poly fac = one_minus_zeta_tk(Cyclo::root_of_unity(modulus, static_cast<long>(a)), 1);
      Poly q, r;
      Poly::divmod(p, fac, q, r);
      if (r.is_zero()) {
        out.emplace_back(DenFactor{Cyclo::root_of_unity(modulus, static_cast<long>(a)), 1}, 1u);
        p = q.scale(q.coeff(0).inverse());
        found = true;
      }
    }
    if (!found) throw Error("denominator is not a product of unit binomials: " + p.str());
  }
  return out;
}

// multisection: (1/N) sum_j f(zeta_N^j s) keeps exactly the exponents
// divisible by N; then compress s^N -> t.
RatFunc psi_int_ratfunc(const RatFunc& f, unsigned long N) {
  if (N == 1) return f;
  RatFunc sum;
  for (unsigned long j = 0; j < N; ++j) {
    Cyclo zeta = Cyclo::root_of_unity(N, static_cast<long>(j));
    // substitute s -> zeta s
    Poly num;
    {
      std::vector<Cyclo> c = f.numerator_raw().c;
      Cyclo zp(1L);
      for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = c[k] * zp;
        zp = zp * zeta;
      }
      num = Poly(std::move(c));
    }
    std::vector<std::pair<DenFactor, unsigned>> den = f.den_factors();
    for (auto& [fac, m] : den) {
      Cyclo zk(1L);
      for (unsigned long i = 0; i < fac.k; ++i) zk = zk * zeta;
      fac.zeta = fac.zeta * zk;
    }
    sum += RatFunc(std::move(num), std::move(den));
  }
  sum = sum.mul_poly(Poly::constant_poly(Cyclo(Rat(1, static_cast<long>(N)))));
  // compress exponents: both reduced numerator and denominator lie in C[s^N]
  const auto& red = sum.reduced();
  auto compress = [&](const Poly& p) {
    std::vector<Cyclo> out;
    for (std::size_t k = 0; k < p.c.size(); ++k) {
      if (p.c[k].is_zero()) continue;
      if (k % N != 0) throw Error("multisection left a non-multiple exponent");
      if (out.size() <= k / N) out.resize(k / N + 1, Cyclo());
      out[k / N] = p.c[k];
    }
    return Poly(std::move(out));
  };
  Poly num_t = compress(red.num);
  Poly den_t = compress(red.den);
  if (den_t.degree() == 0) return RatFunc(num_t.scale(den_t.coeff(0).inverse()));
  // den_t's roots are roots of unity: the original denominator factors are
  // (1 - zeta s^k) with zeta of order dividing N, so root orders divide
  // N * lcm(k)
  Int modulus(static_cast<long>(N));
  for (const auto& [fac, m] : f.den_factors())
    modulus = lcm(modulus, Int(static_cast<long>(fac.k)) * Int(static_cast<long>(N)));
  Cyclo lead = den_t.coeff(0);
  auto factors = factor_into_unit_binomials(den_t, modulus.get_ui());
  return RatFunc(num_t.scale(lead.inverse()), std::move(factors));
}

}  // namespace

HStarSeries psi_int(const HStarNSeries& s) {
  std::vector<RatFunc> per_class;
  per_class.reserve(s.per_class.size());
  for (const auto& f : s.per_class) per_class.push_back(psi_int_ratfunc(f, s.N));
  return make_hstar_series(*s.group, std::move(per_class),
                           s.truncated ? s.truncation / s.N + 1 : 0);
}

HStarSeries psi_ceil(const HStarNSeries& s) {
  // Psi_Ceil(f) = Psi_Int((1 + s + ... + s^{N-1}) f)
  std::vector<Cyclo> ones(s.N, Cyclo(1L));
  Poly geom{std::vector<Cyclo>(ones)};
  std::vector<RatFunc> per_class;
  per_class.reserve(s.per_class.size());
  for (const auto& f : s.per_class) per_class.push_back(psi_int_ratfunc(f.mul_poly(geom), s.N));
  return make_hstar_series(*s.group, std::move(per_class),
                           s.truncated ? s.truncation / s.N + 1 : 0);
}

namespace {

// rebuild a FiniteGroup by an element-wise structure-preserving transform
FiniteGroup transform_group(const FiniteGroup& G,
                            const std::function<AffineMap(const AffineMap&)>& f) {
  FiniteGroup H = G;
  H.elements.clear();
  for (const auto& g : G.elements) H.elements.push_back(f(g));
  return H;
}

}  // namespace

Instance pyramid_instance(const RationalPolytope& P, const FiniteGroup& G) {
  std::size_t d = P.ambient_dim();
  std::vector<RatVector> verts;
  RatVector origin(d + 1);
  verts.push_back(origin);
  for (const auto& v : P.vertices) {
    RatVector w(d + 1);
    for (std::size_t j = 0; j < d; ++j) w[j] = v[j];
    w[d] = 1;
    verts.push_back(w);
  }
  FiniteGroup H = transform_group(G, [&](const AffineMap& g) {
    return AffineMap(g.extended(), std::vector<Int>(d + 1, Int(0)));
  });
  return Instance{hull(verts), std::move(H)};
}

Instance scale_instance(const RationalPolytope& P, const FiniteGroup& G, unsigned long N) {
  std::size_t d = P.ambient_dim();
  std::vector<RatVector> verts;
  for (const auto& v : P.vertices) verts.push_back(v * Rat(static_cast<long>(N)));
  FiniteGroup H = transform_group(G, [&](const AffineMap& g) {
    std::vector<Int> tr(d);
    for (std::size_t j = 0; j < d; ++j) tr[j] = g.translation[j] * Int(static_cast<long>(N));
    return AffineMap(g.linear, std::move(tr));
  });
  return Instance{hull(verts), std::move(H)};
}

FreeJoinInstance free_join_instance(const RationalPolytope& P1, const FiniteGroup& G1,
                                    const RationalPolytope& P2, const FiniteGroup& G2) {
  std::size_t d1 = P1.ambient_dim(), d2 = P2.ambient_dim();
  std::size_t D = d1 + 1 + d2 + 1;
  // slice psi(u) = u[d1] + u[D-1] = 1, base point u0 = e_{d1}, kernel basis:
  // the d1 + d2 coordinate directions plus (e_{d1} - e_{D-1})
  std::vector<std::vector<Int>> kernel;
  for (std::size_t j = 0; j < d1; ++j) {
    std::vector<Int> v(D, Int(0));
    v[j] = 1;
    kernel.push_back(v);
  }
  for (std::size_t j = 0; j < d2; ++j) {
    std::vector<Int> v(D, Int(0));
    v[d1 + 1 + j] = 1;
    kernel.push_back(v);
  }
  {
    std::vector<Int> v(D, Int(0));
    v[d1] = 1;
    v[D - 1] = -1;
    kernel.push_back(v);
  }
  std::size_t k = kernel.size();  // = D - 1
  std::vector<Int> u0(D, Int(0));
  u0[d1] = 1;
  // slice coordinates: x = u0 + sum y_i kernel_i
  IntMatrix B(k, D);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < D; ++j) B.at(i, j) = kernel[i][j];

  auto to_slice = [&](const RatVector& x) {
    RatVector w(D);
    for (std::size_t j = 0; j < D; ++j) w[j] = x[j] - Rat(u0[j]);
    auto c = coords_in_basis(B, w);
    if (!c) throw Error("free join: point off the slice");
    return *c;
  };
  auto embed1 = [&](const RatVector& v) {
    RatVector x(D);
    for (std::size_t j = 0; j < d1; ++j) x[j] = v[j];
    x[d1] = 1;
    return x;
  };
  auto embed2 = [&](const RatVector& v) {
    RatVector x(D);
    for (std::size_t j = 0; j < d2; ++j) x[d1 + 1 + j] = v[j];
    x[D - 1] = 1;
    return x;
  };

  std::vector<RatVector> verts;
  for (const auto& v : P1.vertices) verts.push_back(to_slice(embed1(v)));
  for (const auto& v : P2.vertices) verts.push_back(to_slice(embed2(v)));

  // block-diagonal extended action restricted to the slice
  auto pair_map = [&](const AffineMap& g1, const AffineMap& g2) {
    IntMatrix A(D, D);
    IntMatrix e1 = g1.extended(), e2 = g2.extended();
    for (std::size_t i = 0; i <= d1; ++i)
      for (std::size_t j = 0; j <= d1; ++j) A.at(i, j) = e1.at(i, j);
    for (std::size_t i = 0; i <= d2; ++i)
      for (std::size_t j = 0; j <= d2; ++j) A.at(d1 + 1 + i, d1 + 1 + j) = e2.at(i, j);
    // slice action: y -> Bplus (A u0 - u0) + Bplus A B^T y
    std::vector<Int> Au0 = A.apply(u0);
    RatVector shift(D);
    for (std::size_t j = 0; j < D; ++j) shift[j] = Rat(Au0[j] - u0[j]);
    auto t = coords_in_basis(B, shift);
    if (!t || !t->is_integral()) throw Error("free join: action does not preserve the slice lattice");
    IntMatrix lin(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Int> img = A.apply(kernel[i]);
      RatVector imgq(D);
      for (std::size_t j = 0; j < D; ++j) imgq[j] = Rat(img[j]);
      auto c = coords_in_basis(B, imgq);
      if (!c || !c->is_integral()) throw Error("free join: linear part not integral on the slice");
      for (std::size_t j = 0; j < k; ++j) lin.at(i, j) = (*c)[j].get_num();
    }
    // transpose convention: columns are images
    IntMatrix linT = lin.transpose();
    std::vector<Int> tr(k);
    for (std::size_t j = 0; j < k; ++j) tr[j] = (*t)[j].get_num();
    return AffineMap(linT, std::move(tr));
  };

  // product group with explicit pair structure
  FiniteGroup G;
  std::size_t n1 = G1.order(), n2 = G2.order();
  std::size_t n = n1 * n2;
  auto pidx = [&](uint32_t i, uint32_t j) { return static_cast<uint32_t>(i * n2 + j); };
  for (uint32_t i = 0; i < n1; ++i)
    for (uint32_t j = 0; j < n2; ++j) G.elements.push_back(pair_map(G1.elements[i], G2.elements[j]));
  G.mult.assign(n, std::vector<uint32_t>(n));
  G.inverse_of.assign(n, 0);
  G.element_order.assign(n, 1);
  for (uint32_t i = 0; i < n1; ++i)
    for (uint32_t j = 0; j < n2; ++j) {
      uint32_t a = pidx(i, j);
      G.inverse_of[a] = pidx(G1.inverse_of[i], G2.inverse_of[j]);
      G.element_order[a] =
          lcm(Int(static_cast<long>(G1.element_order[i])), Int(static_cast<long>(G2.element_order[j])))
              .get_ui();
      for (uint32_t i2 = 0; i2 < n1; ++i2)
        for (uint32_t j2 = 0; j2 < n2; ++j2)
          G.mult[a][pidx(i2, j2)] = pidx(G1.mult[i][i2], G2.mult[j][j2]);
    }
  Int ex(1);
  for (auto o : G.element_order) ex = lcm(ex, Int(static_cast<long>(o)));
  G.exponent = ex.get_ui();
  G.class_of.assign(n, 0);
  std::vector<std::pair<uint32_t, uint32_t>> factor_class;
  for (std::size_t c1 = 0; c1 < G1.num_classes(); ++c1)
    for (std::size_t c2 = 0; c2 < G2.num_classes(); ++c2) {
      std::vector<uint32_t> cls;
      for (uint32_t x : G1.classes[c1])
        for (uint32_t y : G2.classes[c2]) cls.push_back(pidx(x, y));
      std::sort(cls.begin(), cls.end());
      uint32_t idx = static_cast<uint32_t>(G.classes.size());
      for (uint32_t e : cls) G.class_of[e] = idx;
      G.classes.push_back(std::move(cls));
      factor_class.emplace_back(static_cast<uint32_t>(c1), static_cast<uint32_t>(c2));
    }
  // class 0 must be the identity's class
  if (G.class_of[0] != 0) {
    // swap class 0 and the identity class for the invariant "class 0 = {id}"
    uint32_t idc = G.class_of[0];
    std::swap(G.classes[0], G.classes[idc]);
    std::swap(factor_class[0], factor_class[idc]);
    for (uint32_t e = 0; e < n; ++e) {
      if (G.class_of[e] == 0)
        G.class_of[e] = idc;
      else if (G.class_of[e] == idc)
        G.class_of[e] = 0;
    }
  }

  FreeJoinInstance out{hull(verts), std::move(G), std::move(factor_class)};
  return out;
}

HStarSeries prime_fixed_closed_form(const RationalPolytope& P, const FiniteGroup& G) {
  std::size_t p = G.order();
  // p prime?
  bool prime = p >= 2;
  for (std::size_t q = 2; q * q <= p; ++q)
    if (p % q == 0) prime = false;
  if (!prime) throw HypothesisFailed("group order is not prime");
  if (!is_invariant(P, G)) throw NotInvariant();
  // unique fixed point of a generator
  const AffineMap& g = G.elements[1];
  auto fs = fixed_space(g);
  if (!fs.unique()) throw HypothesisFailed("the action does not have a unique fixed point");
  Int denom = fs.denominator();
  Int deg_c = (denom == 1) ? Int(1) : Int(static_cast<long>(p));
  if (denom != 1 && denom != Int(static_cast<long>(p)))
    throw HypothesisFailed("fixed point denominator is neither 1 nor p");
  long d = P.dim;
  Int expo_num = Int(d) + 1 - deg_c;
  if (expo_num % Int(static_cast<long>(p - 1)) != 0)
    throw HypothesisFailed("(d + 1 - deg c) not divisible by p - 1");
  unsigned long E = Int(expo_num / Int(static_cast<long>(p - 1))).get_ui();

  // classical h*(P;t) from the identity class
  Poly hP = polytope_ehr_series(P)
                .mul_poly(det_series_for_polytope(P, G)[0])
                .as_polynomial();
  std::vector<Cyclo> ones(p, Cyclo(1L));
  Poly q{std::vector<Cyclo>(ones)};  // 1 + t + ... + t^{p-1}
  Poly qE = Poly::one();
  for (unsigned long i = 0; i < E; ++i) qE *= q;
  Poly diff = hP - qE;
  Poly scaled = diff.scale(Cyclo(Rat(1, static_cast<long>(p))));
  // per class: qE + scaled * chi_reg(g)
  std::vector<RatFunc> per_class(G.num_classes());
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    Poly v = qE;
    if (c == 0) v += scaled.scale(Cyclo(Int(static_cast<long>(p))));
    per_class[c] = RatFunc(v);
  }
  // the closed form must have integer coefficients
  for (const auto& co : scaled.c)
    if (!co.is_rational() || !is_integer(co.to_rational()))
      throw HypothesisFailed("closed form has non-integer chi_reg multiplicities");
  return make_hstar_series(G, std::move(per_class), default_truncation(P.dim));
}

bool monotonicity_check(const RationalPolytope& P, const RationalPolytope& Q,
                        const FiniteGroup& G, const CharacterTable& table,
                        const PolyComplex* shared_triangulation) {
  for (const auto& v : Q.vertices)
    if (!P.contains(v)) throw PreconditionFailed("Q is not contained in P");
  ensure_shared_triangulation(P, Q, G, shared_triangulation);
  HStarSeries hP = hstar(P, G);
  HStarSeries hQ = hstar(Q, G);
  if (!hP.polynomial || !hQ.polynomial)
    throw CheckFailed("monotonicity check expects polynomial h* on both sides");
  std::size_t top = std::max(hP.coeffs.size(), hQ.coeffs.size());
  for (std::size_t m = 0; m < top; ++m) {
    ClassFunction a = m < hQ.coeffs.size() ? hQ.coeffs[m] : ClassFunction::zero(G);
    ClassFunction b = m < hP.coeffs.size() ? hP.coeffs[m] : ClassFunction::zero(G);
    if (!is_effective(b - a, table)) return false;
  }
  return true;
}

}  // namespace eqehr
