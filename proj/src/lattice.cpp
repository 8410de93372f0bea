#include "eqehr/lattice.hpp"

#include "eqehr/errors.hpp"

namespace eqehr {

LatticeBasis LatticeBasis::standard(std::size_t n) {
  LatticeBasis l;
  l.ambient_dim = n;
  l.basis = IntMatrix::identity(n);
  return l;
}

LatticeBasis LatticeBasis::from_rows(const IntMatrix& rows) {
  LatticeBasis l;
  l.ambient_dim = rows.cols;
  IntMatrix H = hnf(rows).H;
  std::size_t r = 0;
  for (std::size_t i = 0; i < H.rows; ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < H.cols; ++j)
      if (H.at(i, j) != 0) zero = false;
    if (!zero) r = i + 1;
  }
  l.basis = IntMatrix(r, rows.cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < rows.cols; ++j) l.basis.at(i, j) = H.at(i, j);
  return l;
}

bool LatticeBasis::contains(const std::vector<Int>& v) const {
  RatVector rv;
  rv.x.reserve(v.size());
  for (const Int& c : v) rv.x.emplace_back(c);
  auto coords = coords_in_basis(basis, rv);
  return coords && coords->is_integral();
}

std::optional<RatVector> coords_in_basis(const IntMatrix& basis_rows, const RatVector& v) {
  // solve basis^T c = v
  RatMatrix A(v.dim(), basis_rows.rows);
  for (std::size_t i = 0; i < basis_rows.rows; ++i)
    for (std::size_t j = 0; j < basis_rows.cols; ++j) A.at(j, i) = Rat(basis_rows.at(i, j));
  return solve_rational(A, v);
}

std::optional<Int> lattice_index(const LatticeBasis& sub, const LatticeBasis& sup) {
  if (sub.ambient_dim != sup.ambient_dim) throw DimensionMismatch("lattice_index");
  // Express each sub generator in sup coordinates; must be integral.
  IntMatrix C(sub.rank(), sup.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    RatVector row(sub.ambient_dim);
    for (std::size_t j = 0; j < sub.ambient_dim; ++j) row[j] = Rat(sub.basis.at(i, j));
    auto c = coords_in_basis(sup.basis, row);
    if (!c || !c->is_integral()) throw NotASublattice();
    for (std::size_t j = 0; j < sup.rank(); ++j) C.at(i, j) = (*c)[j].get_num();
  }
  if (sub.rank() < sup.rank()) return std::nullopt;  // infinite index
  Int idx = 1;
  for (const Int& d : snf(C).diag) {
    if (d == 0) return std::nullopt;
    idx *= d;
  }
  return abs(idx);
}

}  // namespace eqehr
