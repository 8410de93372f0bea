#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "eqehr/affine_map.hpp"

namespace eqehr {

struct FiniteGroup {
  std::vector<AffineMap> elements;  // [0] = identity
  std::vector<std::vector<uint32_t>> mult;  // mult[i][j] = index of elements[i] . elements[j]
  std::vector<uint32_t> inverse_of;
  std::vector<uint32_t> class_of;                // element -> class index; class 0 = {identity}
  std::vector<std::vector<uint32_t>> classes;    // sorted element indices
  std::vector<unsigned long> element_order;
  unsigned long exponent = 1;  // lcm of element orders

  std::size_t order() const { return elements.size(); }
  std::size_t num_classes() const { return classes.size(); }
  std::size_t dim() const { return elements.empty() ? 0 : elements[0].dim(); }
  uint32_t class_rep(std::size_t k) const { return classes[k][0]; }

  uint32_t index_of(const AffineMap& g) const;  // throws if absent
  std::optional<uint32_t> find(const AffineMap& g) const;
  uint32_t conjugate(uint32_t x, uint32_t g) const;  // g x g^{-1}
};

// Breadth-first closure of the generated group. Throws OrderExceeded when the
// closure passes max_order and NotInvertible for non-unimodular generators.
FiniteGroup close_group(const std::vector<AffineMap>& generators, std::size_t dim,
                        std::size_t max_order = 4096);

// Characteristic polynomial of an integer matrix, coefficients low -> high
// (monic of degree n).
std::vector<Int> char_poly(const IntMatrix& m);

// Characteristic polynomial of g acting on Mtilde, as a multiset of
// cyclotomic indices {m : multiplicity}. Throws NotFiniteOrder if a
// non-cyclotomic factor remains.
std::map<unsigned long, unsigned> char_poly_tilde(const AffineMap& g);

// Same factorization for the linear part only.
std::map<unsigned long, unsigned> cyclotomic_factors(const std::vector<Int>& poly);

// Affine fixed space { x : g x = x } in M_R.
struct FixedSpace {
  bool empty = false;           // no fixed points (infinite-order maps only)
  RatVector point;              // some fixed point
  RatMatrix directions;         // rows span the direction space; 0 rows = unique point
  bool unique() const { return !empty && directions.rows == 0; }
  bool whole_space() const { return !empty && directions.rows == point.dim(); }
  // when unique: smallest q with q * point integral
  Int denominator() const { return point.denominator(); }
  // does the fixed space contain a point of Z^d?
  bool contains_lattice_point() const;
};

FixedSpace fixed_space(const AffineMap& g);

std::vector<RatVector> orbit(const FiniteGroup& G, const RatVector& pt);
std::vector<RatVector> orbit_of_set(const FiniteGroup& G, const std::vector<RatVector>& pts);

// Subgroup of G given by a subset of element indices, with its own closed
// FiniteGroup structure for character work. Throws NotASubgroup.
struct Subgroup {
  const FiniteGroup* parent;
  std::vector<uint32_t> elems;  // parent indices, elems[i] = parent index of sub element i
  FiniteGroup group;
};

Subgroup make_subgroup(const FiniteGroup& G, std::vector<uint32_t> element_indices);

}  // namespace eqehr
