#include "eqehr/class_function.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "eqehr/errors.hpp"

namespace eqehr {

ClassFunction ClassFunction::zero(const FiniteGroup& G) {
  return ClassFunction(G, std::vector<Cyclo>(G.num_classes(), Cyclo()));
}

ClassFunction ClassFunction::trivial(const FiniteGroup& G) {
  return ClassFunction(G, std::vector<Cyclo>(G.num_classes(), Cyclo(1L)));
}

ClassFunction ClassFunction::regular(const FiniteGroup& G) {
  std::vector<Cyclo> v(G.num_classes(), Cyclo());
  v[0] = Cyclo(Int(static_cast<long>(G.order())));
  return ClassFunction(G, std::move(v));
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  ClassFunction r = *this;
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
  return r;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  ClassFunction r = *this;
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] -= o.values[i];
  return r;
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  ClassFunction r = *this;
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] *= o.values[i];
  return r;
}

ClassFunction ClassFunction::scale(const Cyclo& s) const {
  ClassFunction r = *this;
  for (auto& v : r.values) v *= s;
  return r;
}

bool ClassFunction::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Cyclo& v) { return v.is_zero(); });
}

std::string ClassFunction::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i].str();
  os << "]";
  return os.str();
}

ClassFunction perm_character_on_points(const FiniteGroup& G, const std::vector<RatVector>& points) {
  std::set<RatVector> pset(points.begin(), points.end());
  std::vector<Cyclo> vals(G.num_classes());
  for (std::size_t k = 0; k < G.num_classes(); ++k) {
    const AffineMap& g = G.elements[G.class_rep(k)];
    long fixed = 0;
    for (const auto& p : pset) {
      RatVector q = g.apply(p);
      if (!pset.count(q)) throw NotInvariant("point set is not invariant");
      if (q == p) ++fixed;
    }
    vals[k] = Cyclo(Int(fixed));
  }
  return ClassFunction(G, std::move(vals));
}

Cyclo inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group != b.group) throw Error("inner product across different groups");
  const FiniteGroup& G = *a.group;
  Cyclo s;
  for (std::size_t k = 0; k < G.num_classes(); ++k) {
    Cyclo term = a.values[k] * b.values[k].conj();
    s += term * Cyclo(Int(static_cast<long>(G.classes[k].size())));
  }
  return s * Cyclo(Rat(1, static_cast<long>(G.order())));
}

std::vector<Int> decompose(const ClassFunction& chi, const CharacterTable& table) {
  std::vector<Int> mult;
  mult.reserve(table.size());
  for (const auto& irr : table.irreducibles) {
    Cyclo m = inner_product(chi, irr);
    if (!m.is_rational()) throw NotVirtualCharacter("non-rational multiplicity");
    Rat q = m.to_rational();
    if (!is_integer(q)) throw NotVirtualCharacter("non-integer multiplicity " + rat_to_string(q));
    mult.push_back(q.get_num());
  }
  // re-summing must reproduce chi exactly
  ClassFunction sum = ClassFunction::zero(*chi.group);
  for (std::size_t i = 0; i < mult.size(); ++i)
    sum = sum + table.irreducibles[i].scale(Cyclo(mult[i]));
  if (!(sum == chi)) throw NotVirtualCharacter("irreducible expansion does not re-sum");
  return mult;
}

bool is_effective(const ClassFunction& chi, const CharacterTable& table) {
  for (const Int& m : decompose(chi, table))
    if (m < 0) return false;
  return true;
}

ClassFunction induce(const Subgroup& H, const ClassFunction& chi_on_sub) {
  const FiniteGroup& G = *H.parent;
  const FiniteGroup& Hg = H.group;
  if (chi_on_sub.group != &Hg) throw Error("induce: class function not on the subgroup");
  // parent index -> subgroup index
  std::vector<long> back(G.order(), -1);
  for (uint32_t i = 0; i < H.elems.size(); ++i) back[H.elems[i]] = i;
  std::vector<Cyclo> vals(G.num_classes());
  for (std::size_t k = 0; k < G.num_classes(); ++k) {
    uint32_t g = G.class_rep(k);
    Cyclo s;
    for (uint32_t x = 0; x < G.order(); ++x) {
      uint32_t c = G.mult[G.mult[G.inverse_of[x]][g]][x];  // x^{-1} g x
      if (back[c] >= 0) s += chi_on_sub.values[Hg.class_of[static_cast<uint32_t>(back[c])]];
    }
    vals[k] = s * Cyclo(Rat(1, static_cast<long>(Hg.order())));
  }
  return ClassFunction(G, std::move(vals));
}

ClassFunction restrict_to(const Subgroup& H, const ClassFunction& chi) {
  if (chi.group != H.parent) throw Error("restrict: class function not on the parent group");
  std::vector<Cyclo> vals(H.group.num_classes());
  for (std::size_t k = 0; k < H.group.num_classes(); ++k)
    vals[k] = chi.at_element(H.elems[H.group.class_rep(k)]);
  return ClassFunction(H.group, std::move(vals));
}

void verify_table(const CharacterTable& table) {
  const FiniteGroup& G = *table.group;
  std::size_t nc = G.num_classes();
  if (table.size() != nc) throw TableInvalid("wrong number of irreducibles");
  // orthonormality
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Cyclo ip = inner_product(table.irreducibles[i], table.irreducibles[j]);
      Cyclo want = (i == j) ? Cyclo(1L) : Cyclo();
      if (ip != want) throw TableInvalid("orthonormality fails");
    }
  // dimensions
  Cyclo sq;
  for (const auto& irr : table.irreducibles) {
    Cyclo d = irr.values[0];
    if (!d.is_rational() || !is_integer(d.to_rational()) || d.to_rational() <= 0)
      throw TableInvalid("bad dimension");
    sq += d * d;
  }
  if (sq != Cyclo(Int(static_cast<long>(G.order())))) throw TableInvalid("sum of squares != |G|");
  // class algebra consistency: for each irreducible chi with dimension n,
  // omega(K) = |K| chi(K) / n satisfies omega(Ki) omega(Kj) = sum_k a_ijk omega(Kk),
  // where a_ijk = #{(x,y) in Ki x Kj : x y = z_k} for a fixed z_k in Kk.
  std::vector<std::vector<std::vector<Int>>> a(
      nc, std::vector<std::vector<Int>>(nc, std::vector<Int>(nc, Int(0))));
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      std::vector<Int> count(nc, Int(0));
      for (uint32_t x : G.classes[i])
        for (uint32_t y : G.classes[j]) count[G.class_of[G.mult[x][y]]] += 1;
      // count[k] counts products landing anywhere in class k; per fixed z_k
      // the count divides evenly
      for (std::size_t k = 0; k < nc; ++k) {
        Int cls = Int(static_cast<long>(G.classes[k].size()));
        if (count[k] % cls != 0) throw TableInvalid("class algebra constants non-integral");
        a[i][j][k] = count[k] / cls;
      }
    }
  for (const auto& irr : table.irreducibles) {
    Cyclo n = irr.values[0];
    std::vector<Cyclo> omega(nc);
    for (std::size_t k = 0; k < nc; ++k)
      omega[k] = irr.values[k] * Cyclo(Int(static_cast<long>(G.classes[k].size()))) / n;
    for (std::size_t i = 0; i < nc; ++i)
      for (std::size_t j = 0; j < nc; ++j) {
        Cyclo lhs = omega[i] * omega[j];
        Cyclo rhs;
        for (std::size_t k = 0; k < nc; ++k) rhs += Cyclo(a[i][j][k]) * omega[k];
        if (lhs != rhs) throw TableInvalid("class algebra eigenvalue identity fails");
      }
  }
}

std::vector<Poly> det_series_tilde(const FiniteGroup& G) {
  std::vector<Poly> out;
  out.reserve(G.num_classes());
  for (std::size_t k = 0; k < G.num_classes(); ++k) {
    auto cp = char_poly(G.elements[G.class_rep(k)].extended());
    // det(I - A t) = t^n charpoly(1/t) = reversed coefficients
    std::vector<Int> rev(cp.rbegin(), cp.rend());
    out.push_back(Poly::from_int_coeffs(rev));
  }
  return out;
}

std::vector<Poly> det_series_linear(const FiniteGroup& G) {
  std::vector<Poly> out;
  out.reserve(G.num_classes());
  for (std::size_t k = 0; k < G.num_classes(); ++k) {
    auto cp = char_poly(G.elements[G.class_rep(k)].linear);
    std::vector<Int> rev(cp.rbegin(), cp.rend());
    out.push_back(Poly::from_int_coeffs(rev));
  }
  return out;
}

std::string format_class_function(const ClassFunction& cf, const CharacterTable& table) {
  // multiples of the trivial character print as plain numbers
  bool constant = true;
  for (const auto& v : cf.values)
    if (!(v == cf.values[0])) constant = false;
  if (constant && cf.values[0].is_rational()) return rat_to_string(cf.values[0].to_rational());

  std::vector<Int> mult = decompose(cf, table);
  // chi_reg pattern: multiplicity of each irreducible equal to a common
  // multiple of its dimension
  bool reg = true;
  Int ratio = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    Int dim = table.irreducibles[i].values[0].to_rational().get_num();
    if (mult[i] % dim != 0) {
      reg = false;
      break;
    }
    Int r = mult[i] / dim;
    if (i == 0)
      ratio = r;
    else if (r != ratio)
      reg = false;
    if (!reg) break;
  }
  if (reg && ratio != 0) {
    if (ratio == 1) return "chi_reg";
    return ratio.get_str() + "*chi_reg";
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    Int a = mult[i];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    Int mag = abs(a);
    if (mag != 1) os << mag.get_str() << "*";
    os << table.names[i];
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace eqehr
