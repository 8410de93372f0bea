#pragma once

#include "eqehr/ehrhart.hpp"

namespace eqehr {

// Equivariant h*-series: per-class rational functions h*(t)(g) =
// Ehr(P^g;t) det(I - Mtilde_C t)(g), with polynomiality decided per class by
// exact division. Coefficients are exposed as class functions, exactly when
// the series is a polynomial and up to a truncation bound otherwise.
struct HStarSeries {
  const FiniteGroup* group = nullptr;
  std::vector<RatFunc> per_class;
  std::vector<bool> class_polynomial;
  bool polynomial = false;
  long degree = -1;  // meaningful when polynomial
  std::vector<ClassFunction> coeffs;
  bool truncated = false;
  std::size_t truncation = 0;

  const ClassFunction& coefficient(std::size_t m) const;
};

// default truncation for non-polynomial series
std::size_t default_truncation(int dim);

// h*-series of a G-invariant lattice polytope; works for lower-dimensional
// polytopes via their affine lattice (the det factor uses the direction
// lattice of the affine span plus the trivial summand).
HStarSeries hstar(const RationalPolytope& P, const FiniteGroup& G, std::size_t truncation = 0);

// assemble an HStarSeries from precomputed per-class rational functions
HStarSeries make_hstar_series(const FiniteGroup& G, std::vector<RatFunc> per_class,
                              std::size_t truncation);

// det(I - t * (action on the direction lattice of P + trivial summand))(g),
// per class; equals det_series_tilde for full-dimensional P.
std::vector<Poly> det_series_for_polytope(const RationalPolytope& P, const FiniteGroup& G);

struct Classification {
  bool polynomial = false;
  bool effective = false;       // exact when polynomial, sampled otherwise
  bool effective_exact = false; // true when the effectiveness call is exact
  std::size_t bound = 0;        // number of coefficients inspected when sampled
  long degree = -1;
  ClassFunction leading;
};

Classification classify(const HStarSeries& h, const CharacterTable& table);

// checks deg h* = dim + 1 - codeg(P) and that the leading coefficient equals
// the interior permutation character at dilate codeg(P); throws CheckFailed
void reciprocity_check(const RationalPolytope& P, const FiniteGroup& G, const HStarSeries& h);

// Equivariant h*_N-series, stored per class as a rational function in
// s = t^{1/N}; exponent j of s carries the grade j/N.
struct HStarNSeries {
  const FiniteGroup* group = nullptr;
  unsigned long N = 1;
  std::vector<RatFunc> per_class;  // in s
  std::vector<bool> class_polynomial;
  bool polynomial = false;
  std::vector<ClassFunction> coeffs;  // coefficient of t^{j/N} at index j
  bool truncated = false;
  std::size_t truncation = 0;
};

HStarNSeries hstar_N(const RationalPolytope& P, const FiniteGroup& G, unsigned long N,
                     std::size_t truncation = 0);

// Psi_Int: keep integer exponents; exact via N-fold multisection of the
// rational function. Result equals h*(P, rho_N; t).
HStarSeries psi_int(const HStarNSeries& s);
// Psi_Ceil: round exponents up; equals h*(Pyr(P), rho_N; t).
HStarSeries psi_ceil(const HStarNSeries& s);

// pyramid: conv(P x {1}, 0) with the extended linear action
struct Instance {
  RationalPolytope P;
  FiniteGroup G;
};
Instance pyramid_instance(const RationalPolytope& P, const FiniteGroup& G);

// free join P1 * P2 with the product action; factor_class traces each class
// of the product group to its factor classes
struct FreeJoinInstance {
  RationalPolytope P;
  FiniteGroup G;
  std::vector<std::pair<uint32_t, uint32_t>> factor_class;
};
FreeJoinInstance free_join_instance(const RationalPolytope& P1, const FiniteGroup& G1,
                                    const RationalPolytope& P2, const FiniteGroup& G2);

// the representation rho_N on (1/N)M realized as the instance (N P, conjugated G)
Instance scale_instance(const RationalPolytope& P, const FiniteGroup& G, unsigned long N);

// closed form for G = Z/p acting with a unique fixed point:
// h* = ((h*(P;t) - q(t)) / p) chi_reg + q(t),  q = (1 + ... + t^{p-1})^{(d+1-deg c)/(p-1)}
HStarSeries prime_fixed_closed_form(const RationalPolytope& P, const FiniteGroup& G);

// h*(Q, rho_Q; t) <= h*(P, rho; t) coefficientwise in irreducible
// multiplicities; Q must be an invariant lattice subpolytope. The hypothesis
// asks for an invariant lattice triangulation of P restricting to one of Q;
// it is verified when supplied and otherwise constructed by gluing. Returns
// the per-coefficient effectiveness of the difference.
struct PolyComplex;
bool monotonicity_check(const RationalPolytope& P, const RationalPolytope& Q,
                        const FiniteGroup& G, const CharacterTable& table,
                        const PolyComplex* shared_triangulation = nullptr);

}  // namespace eqehr
