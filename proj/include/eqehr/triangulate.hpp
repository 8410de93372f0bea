#pragma once

#include "eqehr/complex.hpp"

namespace eqehr {

// step-by-step record of the orbit-pull hypothesis checks
struct PullCertificate {
  struct Step {
    RatVector point;
    std::size_t orbit_size = 0;
    bool in_support = true;       // u_i lies in |T(i-1)|
    bool orbit_condition = true;  // |F cap G.u_i| <= 1 on T(i-1)
  };
  std::vector<Step> steps;
  bool final_faces_simplices = true;
};

struct TriangulationResult {
  PolyComplex complex;
  PullCertificate certificate;
};

// Iterated orbit pulls S_{G.u_1, ..., G.u_r} on a G-invariant starting
// subdivision with the hypothesis checks of the construction lemma; throws
// HypothesisViolated on failure.
TriangulationResult orbit_pull_triangulate(const PolyComplex& S, const FiniteGroup& G,
                                           const std::vector<RatVector>& points);
TriangulationResult orbit_pull_triangulate(const RationalPolytope& P, const FiniteGroup& G,
                                           const std::vector<RatVector>& points);

// Constructive existence: G-invariant regular triangulation with vertices in
// (1/N) Z^d. Succeeds whenever |G| divides N. For other N the same
// construction is attempted; failures are reported, not thrown.
struct InvariantTriangulation {
  bool ok = false;
  std::string failure;
  PolyComplex complex;
  PullCertificate certificate;
  std::vector<RatVector> pull_sequence;
};

InvariantTriangulation invariant_triangulation(const RationalPolytope& P, const FiniteGroup& G,
                                               unsigned long N);

// translativity: every vertex orbit meets every facet at most once
struct TranslativeWitness {
  RatVector vertex;
  uint32_t g = 0;  // element moving vertex inside the facet
  std::vector<uint32_t> facet;
};
struct TranslativeResult {
  bool translative = false;
  std::optional<TranslativeWitness> witness;
};

TranslativeResult is_translative(const PolyComplex& S, const FiniteGroup& G);

// refine a translative invariant regular lattice subdivision to an invariant
// translative regular triangulation with the same vertices, preserving every
// simplex. Throws NotTranslative.
PolyComplex translative_refine(const PolyComplex& S, const FiniteGroup& G);

// glue triangulations of Q and of the subcomplex K = faces of P disjoint
// from Q into a triangulation of P restricting to both.
PolyComplex glue_triangulations(const RationalPolytope& P, const FiniteGroup& G,
                                const RationalPolytope& Q, const PolyComplex& SQ,
                                const PolyComplex& SK);

// subcomplex of the faces of P disjoint from Q
PolyComplex faces_disjoint_from(const RationalPolytope& P, const RationalPolytope& Q);

// restriction S|_Q: faces of S contained in Q
PolyComplex restrict_complex(const PolyComplex& S, const RationalPolytope& Q);
bool complexes_equal(const PolyComplex& A, const PolyComplex& B);

// the square obstruction: a face lattice-isomorphic to [0,1]^2 with two
// disjoint edges whose endpoints are G-collinear orbits
struct SquareWitness {
  std::vector<uint32_t> face;
  std::pair<std::vector<uint32_t>, std::vector<uint32_t>> edges;
};

std::optional<SquareWitness> square_obstruction(const PolyComplex& S, const FiniteGroup& G);

// rank-2 decision procedure: the action admits an invariant lattice
// triangulation of an invariant polytope iff no element is a 90-degree
// rotation about a half-integral center or a reflection whose axis misses
// the lattice
struct Dim2Classification {
  bool triangulable = true;
  std::optional<uint32_t> offending_element;
  std::string reason;
};

Dim2Classification dim2_classify(const FiniteGroup& G);

// constructive counterpart in rank 2: iteratively pull lattice-point orbits
// and refining vertex orbits until minimal; the classification guarantees the
// result is a triangulation whenever no forbidden element exists
PolyComplex dim2_triangulate(const RationalPolytope& P, const FiniteGroup& G);

// full invariant checks for produced triangulations: invariance, simplicial
// facets, volume fill, pairwise intersections, vertex denominators divide N
void verify_invariant_triangulation(const PolyComplex& T, const RationalPolytope& P,
                                    const FiniteGroup& G, unsigned long N);

}  // namespace eqehr
