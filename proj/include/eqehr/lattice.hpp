#pragma once

#include <optional>

#include "eqehr/normal_form.hpp"

namespace eqehr {

// A sublattice of Z^ambient_dim given by an HNF-normalized row basis, with an
// optional rational offset for affine sublattices. Equal lattices have equal
// bases.
struct LatticeBasis {
  std::size_t ambient_dim = 0;
  IntMatrix basis;  // rows = generators, HNF-normalized, full row rank
  std::optional<RatVector> offset;

  static LatticeBasis standard(std::size_t n);
  static LatticeBasis from_rows(const IntMatrix& rows);  // HNF-normalizes, drops zero rows

  std::size_t rank() const { return basis.rows; }
  bool contains(const std::vector<Int>& v) const;

  bool operator==(const LatticeBasis& o) const = default;
};

// Index [sup : sub]; nullopt means infinite (ranks differ). Throws
// NotASublattice when sub is not contained in sup.
std::optional<Int> lattice_index(const LatticeBasis& sub, const LatticeBasis& sup);

// Coordinates of v in the row basis (exact), or nullopt when v is not in the
// Q-span. Integrality of the result decides lattice membership.
std::optional<RatVector> coords_in_basis(const IntMatrix& basis_rows, const RatVector& v);

}  // namespace eqehr
