#include "eqehr/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eqehr/errors.hpp"
#include "eqehr/normal_form.hpp"

namespace eqehr {

uint32_t FiniteGroup::index_of(const AffineMap& g) const {
  auto i = find(g);
  if (!i) throw Error("element not in group");
  return *i;
}

std::optional<uint32_t> FiniteGroup::find(const AffineMap& g) const {
  for (uint32_t i = 0; i < elements.size(); ++i)
    if (elements[i] == g) return i;
  return std::nullopt;
}

uint32_t FiniteGroup::conjugate(uint32_t x, uint32_t g) const {
  return mult[mult[g][x]][inverse_of[g]];
}

FiniteGroup close_group(const std::vector<AffineMap>& generators, std::size_t dim,
                        std::size_t max_order) {
  for (const auto& g : generators) {
    if (g.dim() != dim) throw DimensionMismatch("generator dimension");
    Int d = g.linear.det();
    if (d != 1 && d != -1) throw NotInvertible();
  }
  FiniteGroup G;
  std::map<std::vector<Int>, uint32_t> seen;  // extended matrix entries -> index
  auto key = [](const AffineMap& g) { return g.extended().a; };

  G.elements.push_back(AffineMap::identity(dim));
  seen[key(G.elements[0])] = 0;
  std::vector<uint32_t> frontier = {0};
  while (!frontier.empty()) {
    std::vector<uint32_t> next;
    for (uint32_t i : frontier) {
      for (const auto& g : generators) {
        AffineMap h = g.compose(G.elements[i]);
        auto k = key(h);
        if (seen.count(k)) continue;
        if (G.elements.size() >= max_order) throw OrderExceeded();
        seen[k] = static_cast<uint32_t>(G.elements.size());
        G.elements.push_back(h);
        next.push_back(seen[k]);
      }
    }
    frontier = std::move(next);
  }

  std::size_t n = G.order();
  G.mult.assign(n, std::vector<uint32_t>(n));
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      auto k = key(G.elements[i].compose(G.elements[j]));
      auto it = seen.find(k);
      if (it == seen.end()) throw Error("closure not closed under products");
      G.mult[i][j] = it->second;
    }
  G.inverse_of.assign(n, 0);
  for (uint32_t i = 0; i < n; ++i) {
    bool found = false;
    for (uint32_t j = 0; j < n; ++j)
      if (G.mult[i][j] == 0) {
        G.inverse_of[i] = j;
        found = true;
        break;
      }
    if (!found) throw Error("element without inverse");
  }

  // element orders and exponent
  G.element_order.assign(n, 1);
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t p = i;
    unsigned long o = 1;
    while (p != 0) {
      p = G.mult[p][i];
      ++o;
    }
    G.element_order[i] = (i == 0) ? 1 : o;
  }
  Int ex(1);
  for (auto o : G.element_order) ex = lcm(ex, Int(static_cast<long>(o)));
  G.exponent = ex.get_ui();

  // conjugacy classes (identity first, then by least member)
  std::vector<bool> assigned(n, false);
  G.class_of.assign(n, 0);
  for (uint32_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    std::set<uint32_t> cls;
    for (uint32_t g = 0; g < n; ++g) cls.insert(G.conjugate(i, g));
    uint32_t idx = static_cast<uint32_t>(G.classes.size());
    G.classes.emplace_back(cls.begin(), cls.end());
    for (uint32_t x : cls) {
      assigned[x] = true;
      G.class_of[x] = idx;
    }
  }
  return G;
}

std::vector<Int> char_poly(const IntMatrix& m) {
  // Faddeev-LeVerrier: exact over Q with integral output.
  if (m.rows != m.cols) throw DimensionMismatch("char_poly");
  std::size_t n = m.rows;
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  RatMatrix A = RatMatrix::from_int(m);
  RatMatrix M(n, n);
  for (std::size_t i = 0; i < n; ++i) M.at(i, i) = 1;  // M_1 = I
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      M = A * M;
      for (std::size_t i = 0; i < n; ++i) M.at(i, i) += c[n - k + 1];
    }
    RatMatrix AM = A * M;
    Rat tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += AM.at(i, i);
    c[n - k] = -tr / Rat(static_cast<long>(k));
  }
  std::vector<Int> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (!is_integer(c[i])) throw Error("char_poly: non-integer coefficient");
    out[i] = c[i].get_num();
  }
  return out;
}

namespace {

// division with remainder of integer polynomials by a monic divisor
bool divides_exactly(const std::vector<Int>& num, const std::vector<Int>& den,
                     std::vector<Int>& quotient) {
  std::vector<Int> r = num;
  std::size_t dn = den.size() - 1;
  if (r.size() - 1 < dn) return false;
  quotient.assign(r.size() - dn, Int(0));
  for (std::size_t i = r.size(); i-- > dn;) {
    Int q = r[i];  // monic divisor
    quotient[i - dn] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) r[i - dn + j] -= q * den[j];
  }
  for (const Int& v : r)
    if (v != 0) return false;
  return true;
}

}  // namespace

std::vector<Int> cyclotomic_poly_z(unsigned long n);  // defined in cyclo.cpp

std::map<unsigned long, unsigned> cyclotomic_factors(const std::vector<Int>& poly) {
  std::map<unsigned long, unsigned> factors;
  std::vector<Int> rem = poly;
  std::size_t deg = rem.size() - 1;
  // Any root of unity among the roots has order m with phi(m) <= deg, and
  // phi(m) > sqrt(m)/2, so m <= 4*deg^2 + 1 is a safe bound.
  unsigned long bound = 4 * static_cast<unsigned long>(deg) * deg + 2;
  for (unsigned long m = 1; m <= bound && rem.size() > 1; ++m) {
    if (euler_phi(m) > rem.size() - 1) continue;
    auto cyc = cyclotomic_poly_z(m);
    std::vector<Int> q;
    while (rem.size() > 1 && divides_exactly(rem, cyc, q)) {
      factors[m] += 1;
      rem = q;
    }
  }
  if (rem.size() != 1 || rem[0] != 1) throw NotFiniteOrder();
  return factors;
}

std::map<unsigned long, unsigned> char_poly_tilde(const AffineMap& g) {
  return cyclotomic_factors(char_poly(g.extended()));
}

FixedSpace fixed_space(const AffineMap& g) {
  std::size_t d = g.dim();
  // (A - I) x = -b
  RatMatrix A(d, d);
  RatVector b(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) A.at(i, j) = Rat(g.linear.at(i, j)) - Rat(i == j ? 1 : 0);
    b[i] = Rat(-g.translation[i]);
  }
  FixedSpace fs;
  auto sol = solve_rational(A, b);
  if (!sol) {
    fs.empty = true;
    fs.point = RatVector(d);
    return fs;
  }
  fs.point = *sol;
  fs.directions = rat_kernel(A);
  return fs;
}

bool FixedSpace::contains_lattice_point() const {
  if (empty) return false;
  if (point.is_integral()) return true;
  if (directions.rows == 0) return false;
  // integer solutions of D^T t = x - point shifted: lattice points p with
  // p = point + sum t_i dir_i. Clear denominators: q p - q point = sum t_i q dir_i.
  // Solve over Z in unknowns (p, t): p in Z^d with p - point in rowspan(dirs).
  // Equivalent: exists p in Z^d with E (p - point) = 0 where rows of E span the
  // orthogonal complement of the direction space.
  RatMatrix E = rat_kernel(directions);  // rows orthogonal to directions
  // E p = E point with p integral: integer solutions of (scaled) system
  std::size_t m = E.rows, d = point.dim();
  // scale each row to integers
  IntMatrix Ei(m, d);
  std::vector<Int> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    RatVector row(d);
    Rat r0(0);
    Int den(1);
    for (std::size_t j = 0; j < d; ++j) den = lcm(den, Int(E.at(i, j).get_den()));
    Rat rh(0);
    for (std::size_t j = 0; j < d; ++j) rh += E.at(i, j) * point[j];
    den = lcm(den, Int(rh.get_den()));
    for (std::size_t j = 0; j < d; ++j) {
      Rat v = E.at(i, j) * Rat(den);
      Ei.at(i, j) = v.get_num();
    }
    Rat v = rh * Rat(den);
    rhs[i] = v.get_num();
  }
  return solve_integer(Ei, rhs).has_value();
}

std::vector<RatVector> orbit(const FiniteGroup& G, const RatVector& pt) {
  std::set<RatVector> s;
  for (const auto& g : G.elements) s.insert(g.apply(pt));
  return std::vector<RatVector>(s.begin(), s.end());
}

std::vector<RatVector> orbit_of_set(const FiniteGroup& G, const std::vector<RatVector>& pts) {
  std::set<RatVector> s;
  for (const auto& p : pts)
    for (const auto& g : G.elements) s.insert(g.apply(p));
  return std::vector<RatVector>(s.begin(), s.end());
}

Subgroup make_subgroup(const FiniteGroup& G, std::vector<uint32_t> element_indices) {
  std::sort(element_indices.begin(), element_indices.end());
  element_indices.erase(std::unique(element_indices.begin(), element_indices.end()),
                        element_indices.end());
  std::set<uint32_t> s(element_indices.begin(), element_indices.end());
  if (!s.count(0)) throw NotASubgroup("missing identity");
  for (uint32_t i : s)
    for (uint32_t j : s)
      if (!s.count(G.mult[i][j])) throw NotASubgroup("not closed under products");

  Subgroup sub;
  sub.parent = &G;
  // order with identity first
  sub.elems.assign(s.begin(), s.end());
  std::vector<AffineMap> maps;
  FiniteGroup H;
  H.elements.reserve(sub.elems.size());
  for (uint32_t i : sub.elems) H.elements.push_back(G.elements[i]);
  std::size_t n = sub.elems.size();
  std::map<uint32_t, uint32_t> back;
  for (uint32_t i = 0; i < n; ++i) back[sub.elems[i]] = i;
  H.mult.assign(n, std::vector<uint32_t>(n));
  H.inverse_of.assign(n, 0);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) H.mult[i][j] = back[G.mult[sub.elems[i]][sub.elems[j]]];
    H.inverse_of[i] = back[G.inverse_of[sub.elems[i]]];
  }
  H.element_order.assign(n, 1);
  Int ex(1);
  for (uint32_t i = 0; i < n; ++i) {
    H.element_order[i] = G.element_order[sub.elems[i]];
    ex = lcm(ex, Int(static_cast<long>(H.element_order[i])));
  }
  H.exponent = ex.get_ui();
  std::vector<bool> assigned(n, false);
  for (uint32_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    std::set<uint32_t> cls;
    for (uint32_t g = 0; g < n; ++g) cls.insert(H.mult[H.mult[g][i]][H.inverse_of[g]]);
    uint32_t idx = static_cast<uint32_t>(H.classes.size());
    H.classes.emplace_back(cls.begin(), cls.end());
    H.class_of.resize(n);
    for (uint32_t x : cls) {
      assigned[x] = true;
      H.class_of[x] = idx;
    }
  }
  sub.group = std::move(H);
  return sub;
}

}  // namespace eqehr
