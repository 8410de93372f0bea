#include "eqehr/fixtures.hpp"

#include <numeric>

#include "eqehr/errors.hpp"
#include "eqehr/lattice.hpp"
#include "eqehr/normal_form.hpp"

namespace eqehr {

RatVector AffineCoords::to_local(const RatVector& ambient) const {
  RatVector w = ambient - offset;
  auto c = coords_in_basis(basis, w);
  if (!c) throw Error("point not on the affine sublattice span");
  return *c;
}

AffineMap AffineCoords::to_local(const IntMatrix& A, const std::vector<Int>& b) const {
  std::size_t D = offset.dim(), d = basis.rows;
  // translation: coords of A offset + b - offset
  RatVector img(D);
  for (std::size_t i = 0; i < D; ++i) {
    Rat s(b[i]);
    for (std::size_t j = 0; j < D; ++j) s += Rat(A.at(i, j)) * offset[j];
    img[i] = s - offset[i];
  }
  auto t = coords_in_basis(basis, img);
  if (!t || !t->is_integral()) throw Error("map does not preserve the affine sublattice");
  // linear: column j = coords of A basis_row_j
  IntMatrix lin(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    RatVector w(D);
    for (std::size_t i = 0; i < D; ++i) {
      Rat s(0);
      for (std::size_t l = 0; l < D; ++l) s += Rat(A.at(i, l)) * Rat(basis.at(j, l));
      w[i] = s;
    }
    auto c = coords_in_basis(basis, w);
    if (!c || !c->is_integral()) throw Error("map does not preserve the lattice directions");
    for (std::size_t i = 0; i < d; ++i) lin.at(i, j) = (*c)[i].get_num();
  }
  std::vector<Int> tr(d);
  for (std::size_t i = 0; i < d; ++i) tr[i] = (*t)[i].get_num();
  return AffineMap(std::move(lin), std::move(tr));
}

AffineCoords slice_coords(const std::vector<Int>& psi, const Int& c) {
  std::size_t n = psi.size();
  IntMatrix A(1, n);
  for (std::size_t j = 0; j < n; ++j) A.at(0, j) = psi[j];
  auto x0 = solve_integer(A, {c});
  if (!x0) throw Error("slice has no lattice point");
  AffineCoords out;
  out.basis = integer_kernel(A);
  out.offset = RatVector(n);
  for (std::size_t j = 0; j < n; ++j) out.offset[j] = Rat((*x0)[j]);
  return out;
}

QuotientLattice quotient_by(const std::vector<Int>& v) {
  std::size_t n = v.size();
  IntMatrix row(1, n);
  for (std::size_t j = 0; j < n; ++j) row.at(0, j) = v[j];
  auto s = snf(row);
  if (!(s.diag[0] == 1 || s.diag[0] == -1)) throw Error("quotient vector must be primitive");
  // rows of V^{-1} form a basis of Z^n with first row proportional to v;
  // coordinates in that basis are V^T x
  RatMatrix Vinv = rat_inverse(RatMatrix::from_int(s.V));
  IntMatrix Vt = s.V.transpose();
  QuotientLattice q;
  q.proj = IntMatrix(n - 1, n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q.proj.at(i - 1, j) = Vt.at(i, j);
  q.sec = IntMatrix(n, n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integer(Vinv.at(i, j))) throw Error("quotient basis not integral");
      q.sec.at(j, i - 1) = Vinv.at(i, j).get_num();
    }
  return q;
}

RatVector QuotientLattice::apply(const RatVector& x) const {
  RatVector out(proj.rows);
  for (std::size_t i = 0; i < proj.rows; ++i) {
    Rat s(0);
    for (std::size_t j = 0; j < proj.cols; ++j) s += Rat(proj.at(i, j)) * x[j];
    out[i] = s;
  }
  return out;
}

IntMatrix QuotientLattice::induced(const IntMatrix& A) const {
  // well-defined iff A maps Zv into Zv; verified by the round trip below
  IntMatrix M = proj * A * sec;
  // verify: proj * A = M * proj
  if (!(proj * A == M * proj)) throw Error("matrix does not descend to the quotient");
  return M;
}

namespace {

RatVector rvec(std::vector<long> v) {
  RatVector r;
  for (long x : v) r.x.emplace_back(x);
  return r;
}

std::vector<Int> ivec(std::vector<long> v) {
  std::vector<Int> r;
  for (long x : v) r.emplace_back(x);
  return r;
}

IntMatrix perm_matrix(const std::vector<unsigned>& one_line) {
  std::size_t n = one_line.size();
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.at(one_line[j], j) = 1;
  return m;
}

}  // namespace

Instance square_swap() {
  auto P = hull({rvec({0, 0}), rvec({1, 0}), rvec({0, 1}), rvec({1, 1})});
  auto G = close_group({AffineMap(IntMatrix{{0, 1}, {1, 0}}, {Int(0), Int(0)})}, 2);
  return {std::move(P), std::move(G)};
}

Instance klein_four_cube() {
  AffineCoords ac;
  ac.basis = IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
  ac.offset = rvec({1, 1, 1});
  std::vector<RatVector> verts;
  for (long a : {-1, 1})
    for (long b : {-1, 1})
      for (long c : {-1, 1}) verts.push_back(ac.to_local(rvec({a, b, c})));
  IntMatrix sig{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}};
  IntMatrix tau{{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}};
  std::vector<Int> zero3(3, Int(0));
  auto G = close_group({ac.to_local(sig, zero3), ac.to_local(tau, zero3)}, 3);
  return {hull(verts), std::move(G)};
}

Instance p5_reflexive() {
  auto q = quotient_by(ivec({1, 1, 1, 1, 1}));
  std::vector<RatVector> verts;
  for (int i = 0; i < 5; ++i) {
    std::vector<long> e(5, 0), f(5, 0);
    e[i] = 1;
    f[i] = 1;
    f[(i + 1) % 5] = 1;
    verts.push_back(q.apply(rvec(e)));
    verts.push_back(q.apply(rvec(f)));
  }
  std::vector<unsigned> cyc = {1, 2, 3, 4, 0};
  IntMatrix rot = q.induced(perm_matrix(cyc));
  auto G = close_group({AffineMap(rot, std::vector<Int>(4, Int(0)))}, 4);
  return {hull(verts), std::move(G)};
}

PolyComplex p5_fixture_triangulation(const Instance& inst) {
  auto q = quotient_by(ivec({1, 1, 1, 1, 1}));
  auto ebar = [&](int i) {
    std::vector<long> e(5, 0);
    e[(i - 1) % 5] = 1;
    return q.apply(rvec(e));
  };
  auto fbar = [&](int i) {
    std::vector<long> f(5, 0);
    f[(i - 1) % 5] = 1;
    f[i % 5] = 1;
    return q.apply(rvec(f));
  };
  RatVector origin(4);
  // boundary facet orbit representatives with the diagonal e = [ebar_1, fbar_2]
  std::vector<std::vector<RatVector>> reps = {
      {ebar(1), fbar(2), ebar(3), fbar(3)},
      {ebar(1), fbar(2), fbar(1), fbar(3)},
      {ebar(1), fbar(2), ebar(3), fbar(5)},
      {ebar(1), fbar(2), fbar(1), fbar(5)},
      {ebar(1), ebar(3), fbar(3), fbar(5)},
  };
  const AffineMap& sigma = inst.G.elements[inst.G.index_of(
      AffineMap(q.induced(perm_matrix({1, 2, 3, 4, 0})), std::vector<Int>(4, Int(0))))];
  std::vector<std::vector<RatVector>> cells;
  for (const auto& rep : reps) {
    std::vector<RatVector> cur = rep;
    for (int k = 0; k < 5; ++k) {
      std::vector<RatVector> cell = cur;
      cell.push_back(origin);
      cells.push_back(cell);
      for (auto& v : cur) v = sigma.apply(v);
    }
  }
  return complex_from_facets(cells);
}

Instance z3_prism() {
  std::vector<RatVector> verts;
  for (long h : {0, 1}) {
    verts.push_back(rvec({1, 0, h}));
    verts.push_back(rvec({0, 1, h}));
    verts.push_back(rvec({-1, -1, h}));
  }
  IntMatrix rot{{0, -1, 0}, {1, -1, 0}, {0, 0, 1}};
  auto G = close_group({AffineMap(rot, std::vector<Int>(3, Int(0)))}, 3);
  return {hull(verts), std::move(G)};
}

Instance circuit_d4(const std::array<long, 3>& a) {
  // ambient Z^6 with basis e1,e2,e3,f1,f2,f3
  std::vector<Int> v = ivec({a[0], a[1], a[2], -a[0], -a[1], -a[2]});
  auto q = quotient_by(v);
  // psi = (1,...,1) descends; slice at 1 inside the quotient Z^5
  std::vector<Int> psiL(5, Int(0));
  {
    std::vector<Int> ones(6, Int(1));
    // psi_L = ones . sec
    for (std::size_t j = 0; j < 5; ++j) {
      Int s(0);
      for (std::size_t i = 0; i < 6; ++i) s += ones[i] * q.sec.at(i, j);
      psiL[j] = s;
    }
  }
  AffineCoords sc = slice_coords(psiL, 1);
  std::vector<RatVector> verts;
  for (int i = 0; i < 6; ++i) {
    std::vector<long> e(6, 0);
    e[i] = 1;
    verts.push_back(sc.to_local(q.apply(rvec(e))));
  }
  // swap e_i <-> f_i
  IntMatrix swp(6, 6);
  for (int i = 0; i < 3; ++i) {
    swp.at(i, i + 3) = 1;
    swp.at(i + 3, i) = 1;
  }
  IntMatrix swq = q.induced(swp);
  auto g = sc.to_local(swq, std::vector<Int>(5, Int(0)));
  auto G = close_group({g}, 4);
  return {hull(verts), std::move(G)};
}

Instance sym_prism(unsigned d) {
  std::vector<Int> psi(d + 1, Int(1));
  psi[d] = 0;
  AffineCoords sc = slice_coords(psi, 1);
  std::vector<RatVector> verts;
  for (unsigned i = 0; i < d; ++i)
    for (long h : {0, 1}) {
      std::vector<long> e(d + 1, 0);
      e[i] = 1;
      e[d] = h;
      verts.push_back(sc.to_local(rvec(e)));
    }
  std::vector<unsigned> transp(d + 1), cyc(d + 1);
  std::iota(transp.begin(), transp.end(), 0);
  std::swap(transp[0], transp[1]);
  for (unsigned i = 0; i < d; ++i) cyc[i] = (i + 1) % d;
  cyc[d] = d;
  std::vector<Int> zero(d + 1, Int(0));
  std::vector<AffineMap> gens = {sc.to_local(perm_matrix(transp), zero)};
  if (d > 2) gens.push_back(sc.to_local(perm_matrix(cyc), zero));
  if (d == 2) gens = {sc.to_local(perm_matrix({1, 0, 2}), zero)};
  auto G = close_group(gens, d, 200);
  return {hull(verts), std::move(G)};
}

Instance permutahedron(unsigned d) {
  unsigned n = d + 1;
  Int level = Int(static_cast<long>((n * (n + 1)) / 2));
  std::vector<Int> psi(n, Int(1));
  AffineCoords sc = slice_coords(psi, level);
  std::vector<unsigned> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<RatVector> verts;
  std::vector<unsigned> perm = base;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<long> v(perm.begin(), perm.end());
    verts.push_back(sc.to_local(rvec(v)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Int> zero(n, Int(0));
  std::vector<unsigned> transp(n), cyc(n);
  std::iota(transp.begin(), transp.end(), 0);
  if (n >= 2) std::swap(transp[0], transp[1]);
  for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  std::vector<AffineMap> gens;
  if (n >= 2) gens.push_back(sc.to_local(perm_matrix(transp), zero));
  if (n >= 3) gens.push_back(sc.to_local(perm_matrix(cyc), zero));
  auto G = close_group(gens, d, 200);
  return {hull(verts), std::move(G)};
}

Instance cross_polytope_2() {
  auto P = hull({rvec({1, 0}), rvec({-1, 0}), rvec({0, 1}), rvec({0, -1})});
  IntMatrix neg{{-1, 0}, {0, -1}};
  auto G = close_group({AffineMap(neg, {Int(0), Int(0)})}, 2);
  return {std::move(P), std::move(G)};
}

Instance bipyramid_reflection() {
  std::vector<RatVector> verts = {rvec({0, 0, 0}), rvec({1, 0, 0}), rvec({0, 1, 0}),
                                  rvec({1, 1, 0}), rvec({0, 0, 1}), rvec({1, 1, -1})};
  IntMatrix refl{{-1, 0, -1}, {0, 1, 0}, {0, 0, 1}};
  auto G = close_group({AffineMap(refl, {Int(1), Int(0), Int(0)})}, 3);
  return {hull(verts), std::move(G)};
}

Instance segment_reflection() {
  auto P = hull({rvec({0}), rvec({1})});
  auto G = close_group({AffineMap(IntMatrix{{-1}}, {Int(1)})}, 1);
  return {std::move(P), std::move(G)};
}

uint32_t class_of_cycle_type(const FiniteGroup& G, unsigned n, const std::vector<unsigned>& type) {
  unsigned sum = 0;
  for (auto l : type) sum += l;
  if (sum != n) throw InputError("cycle type does not partition n");
  Int order(1);
  for (auto l : type) order = lcm(order, Int(static_cast<long>(l)));
  // class size = n! / centralizer, centralizer = prod k^{m_k} m_k!
  Int fact(1);
  for (unsigned i = 2; i <= n; ++i) fact *= i;
  std::map<unsigned, unsigned> mult;
  for (auto l : type) mult[l]++;
  Int centralizer(1);
  for (auto [k, m] : mult) {
    for (unsigned i = 0; i < m; ++i) centralizer *= k;
    for (unsigned i = 2; i <= m; ++i) centralizer *= i;
  }
  Int size = fact / centralizer;
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    if (Int(static_cast<long>(G.element_order[G.class_rep(c)])) == order &&
        Int(static_cast<long>(G.classes[c].size())) == size)
      return static_cast<uint32_t>(c);
  }
  throw Error("no class with the requested cycle type");
}

}  // namespace eqehr
