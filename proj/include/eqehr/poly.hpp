#pragma once

#include "eqehr/cyclo.hpp"

namespace eqehr {

// Dense polynomial in t over the cyclotomic numbers, low -> high, no trailing
// zeros. The zero polynomial has empty coefficient vector and degree -1.
struct Poly {
  std::vector<Cyclo> c;

  Poly() = default;
  explicit Poly(std::vector<Cyclo> coeffs) : c(std::move(coeffs)) { trim(); }
  Poly(const Cyclo& constant) { *this = constant_poly(constant); }  // NOLINT implicit

  static Poly one() { return constant_poly(Cyclo(1L)); }
  static Poly t() { return Poly(std::vector<Cyclo>{Cyclo(0L), Cyclo(1L)}); }
  static Poly constant_poly(const Cyclo& v);
  static Poly from_int_coeffs(const std::vector<Int>& coeffs);
  static Poly monomial(const Cyclo& coeff, std::size_t k);

  void trim();
  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Cyclo coeff(std::size_t k) const { return k < c.size() ? c[k] : Cyclo(); }
  Cyclo leading() const { return c.empty() ? Cyclo() : c.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return c == o.c; }

  Poly scale(const Cyclo& s) const;
  Poly shift(std::size_t k) const;           // * t^k
  Poly substitute_power(unsigned long n) const;  // t -> t^n
  Cyclo eval(const Cyclo& x) const;

  // division with remainder over the field; divisor nonzero
  static void divmod(const Poly& num, const Poly& den, Poly& q, Poly& r);
  Poly exact_div(const Poly& den) const;  // throws on nonzero remainder

  std::string str(const std::string& var = "t") const;
};

Poly gcd(const Poly& a, const Poly& b);  // monic gcd

// 1 - zeta t^k
Poly one_minus_zeta_tk(const Cyclo& zeta, unsigned long k);

}  // namespace eqehr
