#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "eqehr/numbers.hpp"

namespace eqehr {

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static IntMatrix identity(std::size_t n);

  bool operator==(const IntMatrix& o) const = default;

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  std::vector<Int> row(std::size_t i) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;  // A*v

  Int det() const;  // Bareiss, exact; square only
  std::size_t rank() const;
  std::string str() const;
};

struct RatVector {
  std::vector<Rat> x;

  RatVector() = default;
  explicit RatVector(std::size_t n) : x(n, Rat(0)) {}
  explicit RatVector(std::vector<Rat> v) : x(std::move(v)) {}

  std::size_t dim() const { return x.size(); }
  Rat& operator[](std::size_t i) { return x[i]; }
  const Rat& operator[](std::size_t i) const { return x[i]; }

  bool operator==(const RatVector& o) const = default;
  bool operator<(const RatVector& o) const;  // lexicographic

  RatVector operator+(const RatVector& o) const;
  RatVector operator-(const RatVector& o) const;
  RatVector operator*(const Rat& s) const;

  bool is_integral() const;
  // smallest q > 0 with q*v integral
  Int denominator() const;
  std::string str() const;
};

Rat dot(const RatVector& a, const RatVector& b);
Rat dot(const std::vector<Int>& a, const RatVector& b);
Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

struct RatMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}
  static RatMatrix from_int(const IntMatrix& m);

  Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  bool operator==(const RatMatrix& o) const = default;

  RatMatrix operator*(const RatMatrix& o) const;
  RatVector apply(const RatVector& v) const;
  RatMatrix transpose() const;
  std::size_t rank() const;
  Rat det() const;
};

// Exact solution of A x = b over Q, or nullopt when inconsistent. When the
// system is underdetermined, free variables are set to zero.
std::optional<RatVector> solve_rational(const RatMatrix& A, const RatVector& b);

// Basis (rows) of { x : A x = 0 } over Q.
RatMatrix rat_kernel(const RatMatrix& A);

// Exact inverse; requires square nonsingular.
RatMatrix rat_inverse(const RatMatrix& A);

std::vector<Int> clear_denominators(const RatVector& v);  // primitive integer vector along v (v != 0)

}  // namespace eqehr
