#pragma once

#include <map>
#include <optional>

#include "eqehr/poly.hpp"

namespace eqehr {

// A factor (1 - zeta t^k) of a structured denominator.
struct DenFactor {
  Cyclo zeta;
  unsigned long k = 1;

  bool operator==(const DenFactor& o) const { return k == o.k && zeta == o.zeta; }
};

// Rational function num / prod (1 - zeta t^k)^mult. Denominator factors are
// kept as a multiset; reduction to lowest terms happens on demand via exact
// polynomial gcd over the cyclotomic field.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Poly num) : num_(std::move(num)) {}  // NOLINT implicit
  RatFunc(Poly num, std::vector<std::pair<DenFactor, unsigned>> den);

  static RatFunc zero() { return RatFunc(); }
  static RatFunc one() { return RatFunc(Poly::one()); }

  const Poly& numerator_raw() const { return num_; }
  const std::vector<std::pair<DenFactor, unsigned>>& den_factors() const { return den_; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }

  RatFunc mul_poly(const Poly& p) const;
  RatFunc div_factor(const DenFactor& f) const;  // append a denominator factor
  RatFunc substitute_power(unsigned long n) const;

  // Reduced form: numerator and denominator in lowest terms, denominator with
  // constant term 1 (the denominators here never vanish at t = 0).
  struct Reduced {
    Poly num, den;
  };
  const Reduced& reduced() const;

  bool operator==(const RatFunc& o) const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  Poly as_polynomial() const;  // throws if not polynomial

  // power series coefficients 0..K
  std::vector<Cyclo> series(std::size_t K) const;

  std::string str(const std::string& var = "t") const;

 private:
  Poly num_;
  std::vector<std::pair<DenFactor, unsigned>> den_;  // sorted canonical multiset
  mutable std::optional<Reduced> reduced_;

  void normalize_factors();
  Poly den_expanded() const;
};

}  // namespace eqehr
