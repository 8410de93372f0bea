#pragma once

#include <string>
#include <vector>

#include "eqehr/numbers.hpp"

namespace eqehr {

// Integer coefficients of the n-th cyclotomic polynomial, low -> high; cached.
std::vector<Int> cyclotomic_poly_z(unsigned long n);

// An element of the cyclotomic field Q(zeta_n), stored in canonical form:
// coefficients of 1, zeta, ..., zeta^{phi(n)-1} after reduction modulo the
// n-th cyclotomic polynomial. Rational values collapse to conductor 1, so
// equality across conductors is decided by lifting to the lcm.
class Cyclo {
 public:
  Cyclo() : n_(1), c_{Rat(0)} {}
  Cyclo(const Rat& q) : n_(1), c_{q} {}           // NOLINT implicit
  Cyclo(const Int& z) : n_(1), c_{Rat(z)} {}      // NOLINT implicit
  Cyclo(long v) : n_(1), c_{Rat(v)} {}            // NOLINT implicit

  static Cyclo root_of_unity(unsigned long n, long k);
  // value sum_k coeffs[k] * zeta_n^k (coeffs may have any length)
  static Cyclo from_powers(unsigned long n, const std::vector<Rat>& coeffs);

  unsigned long conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return n_ == 1; }
  Rat to_rational() const;  // throws unless rational

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator/(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  Cyclo conj() const;     // complex conjugation zeta -> zeta^{-1}
  Cyclo inverse() const;  // throws on zero

  std::string str() const;

 private:
  unsigned long n_;
  std::vector<Rat> c_;  // size phi(n_)

  void canonicalize();
  Cyclo lifted(unsigned long m) const;  // to conductor m, n_ | m
};

}  // namespace eqehr
