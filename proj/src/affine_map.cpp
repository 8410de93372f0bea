#include "eqehr/affine_map.hpp"

#include <sstream>

#include "eqehr/errors.hpp"

namespace eqehr {

AffineMap::AffineMap(IntMatrix lin, std::vector<Int> tr)
    : linear(std::move(lin)), translation(std::move(tr)) {
  if (linear.rows != linear.cols || linear.rows != translation.size())
    throw DimensionMismatch("affine map shape");
}

AffineMap AffineMap::identity(std::size_t d) {
  return AffineMap(IntMatrix::identity(d), std::vector<Int>(d, Int(0)));
}

AffineMap AffineMap::from_extended(const IntMatrix& ext) {
  if (ext.rows != ext.cols || ext.rows == 0) throw DimensionMismatch("extended matrix shape");
  std::size_t d = ext.rows - 1;
  for (std::size_t j = 0; j < d; ++j)
    if (ext.at(d, j) != 0) throw InputError("extended matrix does not fix the height projection");
  if (ext.at(d, d) != 1) throw InputError("extended matrix does not fix the height projection");
  IntMatrix lin(d, d);
  std::vector<Int> tr(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) lin.at(i, j) = ext.at(i, j);
    tr[i] = ext.at(i, d);
  }
  return AffineMap(std::move(lin), std::move(tr));
}

IntMatrix AffineMap::extended() const {
  std::size_t d = dim();
  IntMatrix e(d + 1, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) e.at(i, j) = linear.at(i, j);
    e.at(i, d) = translation[i];
  }
  e.at(d, d) = 1;
  return e;
}

AffineMap AffineMap::compose(const AffineMap& o) const {
  IntMatrix lin = linear * o.linear;
  std::vector<Int> tr = linear.apply(o.translation);
  for (std::size_t i = 0; i < tr.size(); ++i) tr[i] += translation[i];
  return AffineMap(std::move(lin), std::move(tr));
}

AffineMap AffineMap::inverse() const {
  Int d = linear.det();
  if (d != 1 && d != -1) throw NotInvertible();
  // adjugate / det stays integral for unimodular matrices
  std::size_t n = dim();
  RatMatrix inv = rat_inverse(RatMatrix::from_int(linear));
  IntMatrix lin(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lin.at(i, j) = inv.at(i, j).get_num();
  std::vector<Int> tr = lin.apply(translation);
  for (auto& c : tr) c = -c;
  return AffineMap(std::move(lin), std::move(tr));
}

std::vector<Int> AffineMap::apply(const std::vector<Int>& v) const {
  auto r = linear.apply(v);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += translation[i];
  return r;
}

RatVector AffineMap::apply(const RatVector& v) const {
  RatVector r(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Rat s(translation[i]);
    for (std::size_t j = 0; j < dim(); ++j) s += Rat(linear.at(i, j)) * v[j];
    r[i] = s;
  }
  return r;
}

bool AffineMap::is_identity() const {
  return linear.is_identity() &&
         std::all_of(translation.begin(), translation.end(), [](const Int& v) { return v == 0; });
}

std::string AffineMap::str() const {
  std::ostringstream os;
  os << "x -> " << linear.str() << " x + (";
  for (std::size_t i = 0; i < translation.size(); ++i) os << (i ? "," : "") << translation[i].get_str();
  os << ")";
  return os.str();
}

}  // namespace eqehr
