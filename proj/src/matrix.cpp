#include "eqehr/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "eqehr/errors.hpp"

namespace eqehr {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows = init.size();
  cols = rows ? init.begin()->size() : 0;
  a.reserve(rows * cols);
  for (const auto& r : init) {
    if (r.size() != cols) throw DimensionMismatch("ragged initializer");
    for (long v : r) a.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols != o.rows) throw DimensionMismatch("matrix product");
  IntMatrix r(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  IntMatrix r(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  IntMatrix r(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Int& v) { return v == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows != cols) return false;
  return *this == identity(rows);
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return std::vector<Int>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols) throw DimensionMismatch("matrix apply");
  std::vector<Int> r(rows, Int(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
  return r;
}

Int IntMatrix::det() const {
  if (rows != cols) throw DimensionMismatch("det of non-square matrix");
  std::size_t n = rows;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = v;
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::size_t IntMatrix::rank() const { return RatMatrix::from_int(*this).rank(); }

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols; ++j) os << (j ? " " : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

bool RatVector::operator<(const RatVector& o) const {
  if (x.size() != o.x.size()) return x.size() < o.x.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    int c = cmp(x[i], o.x[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

RatVector RatVector::operator+(const RatVector& o) const {
  RatVector r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r.x[i] = x[i] + o.x[i];
  return r;
}

RatVector RatVector::operator-(const RatVector& o) const {
  RatVector r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r.x[i] = x[i] - o.x[i];
  return r;
}

RatVector RatVector::operator*(const Rat& s) const {
  RatVector r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r.x[i] = x[i] * s;
  return r;
}

bool RatVector::is_integral() const {
  return std::all_of(x.begin(), x.end(), [](const Rat& q) { return is_integer(q); });
}

Int RatVector::denominator() const {
  Int d = 1;
  for (const Rat& q : x) d = lcm(d, Int(q.get_den()));
  return d;
}

std::string RatVector::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << rat_to_string(x[i]);
  os << ")";
  return os.str();
}

Rat dot(const RatVector& a, const RatVector& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const std::vector<Int>& a, const RatVector& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
  RatMatrix r(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols != o.rows) throw DimensionMismatch("matrix product");
  RatMatrix r(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.dim() != cols) throw DimensionMismatch("matrix apply");
  RatVector r(rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

namespace {

// Gaussian elimination to row echelon form; returns pivot columns.
std::vector<std::size_t> echelonize(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
    Rat inv = 1 / m.at(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t RatMatrix::rank() const {
  RatMatrix m = *this;
  return echelonize(m).size();
}

Rat RatMatrix::det() const {
  if (rows != cols) throw DimensionMismatch("det of non-square matrix");
  RatMatrix m = *this;
  Rat d(1);
  for (std::size_t k = 0; k < rows; ++k) {
    std::size_t p = k;
    while (p < rows && m.at(p, k) == 0) ++p;
    if (p == rows) return Rat(0);
    if (p != k) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(k, j), m.at(p, j));
      d = -d;
    }
    d *= m.at(k, k);
    Rat inv = 1 / m.at(k, k);
    for (std::size_t i = k + 1; i < rows; ++i) {
      if (m.at(i, k) == 0) continue;
      Rat f = m.at(i, k) * inv;
      for (std::size_t j = k; j < cols; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return d;
}

std::optional<RatVector> solve_rational(const RatMatrix& A, const RatVector& b) {
  RatMatrix aug(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  auto pivots = echelonize(aug);
  if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;  // row (0..0|1)
  RatVector x(A.cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, A.cols);
  return x;
}

RatMatrix rat_kernel(const RatMatrix& A) {
  RatMatrix m = A;
  auto pivots = echelonize(m);
  std::vector<bool> is_pivot(A.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < A.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMatrix K(free_cols.size(), A.cols);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    K.at(k, fc) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) K.at(k, pivots[r]) = -m.at(r, fc);
  }
  return K;
}

RatMatrix rat_inverse(const RatMatrix& A) {
  if (A.rows != A.cols) throw DimensionMismatch("inverse of non-square matrix");
  std::size_t n = A.rows;
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = echelonize(aug);
  if (pivots.size() != n) throw DimensionMismatch("singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::vector<Int> clear_denominators(const RatVector& v) {
  Int d = v.denominator();
  std::vector<Int> w(v.dim());
  Int g = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    Rat q = v[i] * Rat(d);
    w[i] = q.get_num();
    g = gcd(g, w[i]);
  }
  if (g > 1)
    for (auto& c : w) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return w;
}

}  // namespace eqehr
