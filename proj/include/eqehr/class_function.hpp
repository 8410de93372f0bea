#pragma once

#include "eqehr/cyclo.hpp"
#include "eqehr/group.hpp"
#include "eqehr/poly.hpp"

namespace eqehr {

// Map from conjugacy classes of a finite group to cyclotomic numbers.
struct ClassFunction {
  const FiniteGroup* group = nullptr;
  std::vector<Cyclo> values;  // per class, indexed like group->classes

  ClassFunction() = default;
  ClassFunction(const FiniteGroup& G, std::vector<Cyclo> vals)
      : group(&G), values(std::move(vals)) {}

  static ClassFunction zero(const FiniteGroup& G);
  static ClassFunction trivial(const FiniteGroup& G);
  static ClassFunction regular(const FiniteGroup& G);

  const Cyclo& at_class(std::size_t k) const { return values[k]; }
  const Cyclo& at_element(uint32_t i) const { return values[group->class_of[i]]; }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;
  ClassFunction scale(const Cyclo& s) const;
  bool operator==(const ClassFunction& o) const { return values == o.values; }
  bool is_zero() const;

  std::string str() const;
};

struct CharacterTable {
  const FiniteGroup* group = nullptr;
  std::vector<ClassFunction> irreducibles;
  std::vector<std::string> names;
  bool verified = false;

  std::size_t size() const { return irreducibles.size(); }
};

// Permutation character of the action of G on a point set; the set must be
// setwise invariant (checked).
ClassFunction perm_character_on_points(const FiniteGroup& G, const std::vector<RatVector>& points);

// (1/|G|) sum_g a(g) conj(b(g)), computed classwise
Cyclo inner_product(const ClassFunction& a, const ClassFunction& b);

// exact integer multiplicities; throws NotVirtualCharacter
std::vector<Int> decompose(const ClassFunction& chi, const CharacterTable& table);

bool is_effective(const ClassFunction& chi, const CharacterTable& table);

// induced class function: (Ind chi)(g) = (1/|H|) sum_{x : x^-1 g x in H} chi(x^-1 g x)
ClassFunction induce(const Subgroup& H, const ClassFunction& chi_on_sub);

// restriction to a subgroup
ClassFunction restrict_to(const Subgroup& H, const ClassFunction& chi);

// character tables
CharacterTable char_table_abelian(const FiniteGroup& G);
CharacterTable char_table_symmetric(const FiniteGroup& G, unsigned n);  // n <= 5
CharacterTable char_table_dihedral(const FiniteGroup& G, unsigned n);   // n <= 6
// dispatcher: abelian automatically, then S_n / D_n pattern match; throws
// TableUnavailable otherwise
CharacterTable char_table_auto(const FiniteGroup& G);

// Full verification: orthogonality relations, sum of squared dimensions, and
// class-algebra consistency (the eigenvalue identities of the class sums).
void verify_table(const CharacterTable& table);  // throws TableInvalid

// det(I - Mtilde_C t)(g) per conjugacy class: integer polynomials, the
// reversal of the characteristic polynomial of the extended matrix.
std::vector<Poly> det_series_tilde(const FiniteGroup& G);
// same for the linear part only
std::vector<Poly> det_series_linear(const FiniteGroup& G);

// pretty printer: "chi_reg", "2*triv + sign", ...
std::string format_class_function(const ClassFunction& cf, const CharacterTable& table);

}  // namespace eqehr
