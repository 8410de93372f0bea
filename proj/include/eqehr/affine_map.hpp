#pragma once

#include "eqehr/matrix.hpp"

namespace eqehr {

// An invertible affine transformation x -> A x + b of Z^d, stored as its
// linear part and translation. Equivalently the (d+1)x(d+1) matrix on
// Mtilde = M + Z that fixes the height projection.
struct AffineMap {
  IntMatrix linear;
  std::vector<Int> translation;

  AffineMap() = default;
  AffineMap(IntMatrix lin, std::vector<Int> tr);

  static AffineMap identity(std::size_t d);
  static AffineMap from_extended(const IntMatrix& ext);

  std::size_t dim() const { return translation.size(); }
  IntMatrix extended() const;  // block matrix [[A, b], [0, 1]]

  AffineMap compose(const AffineMap& o) const;  // this after o: x -> this(o(x))
  AffineMap inverse() const;                    // requires |det| = 1

  std::vector<Int> apply(const std::vector<Int>& v) const;
  RatVector apply(const RatVector& v) const;

  bool operator==(const AffineMap& o) const = default;
  bool is_identity() const;
  std::string str() const;
};

}  // namespace eqehr
