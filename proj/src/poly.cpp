#include "eqehr/poly.hpp"

#include <sstream>

#include "eqehr/errors.hpp"

namespace eqehr {

Poly Poly::constant_poly(const Cyclo& v) {
  Poly p;
  if (!v.is_zero()) p.c = {v};
  return p;
}

Poly Poly::from_int_coeffs(const std::vector<Int>& coeffs) {
  std::vector<Cyclo> c;
  c.reserve(coeffs.size());
  for (const Int& v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

Poly Poly::monomial(const Cyclo& coeff, std::size_t k) {
  if (coeff.is_zero()) return Poly();
  std::vector<Cyclo> c(k + 1, Cyclo());
  c[k] = coeff;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Cyclo> r(std::max(c.size(), o.c.size()), Cyclo());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c) v = -v;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Cyclo> r(c.size() + o.c.size() - 1, Cyclo());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c.size(); ++j) {
      if (o.c[j].is_zero()) continue;
      r[i + j] += c[i] * o.c[j];
    }
  }
  return Poly(std::move(r));
}

Poly Poly::scale(const Cyclo& s) const {
  if (s.is_zero()) return Poly();
  Poly r = *this;
  for (auto& v : r.c) v = v * s;
  return r;
}

Poly Poly::shift(std::size_t k) const {
  if (is_zero()) return Poly();
  std::vector<Cyclo> r(c.size() + k, Cyclo());
  for (std::size_t i = 0; i < c.size(); ++i) r[i + k] = c[i];
  return Poly(std::move(r));
}

Poly Poly::substitute_power(unsigned long n) const {
  if (is_zero()) return Poly();
  std::vector<Cyclo> r((c.size() - 1) * n + 1, Cyclo());
  for (std::size_t i = 0; i < c.size(); ++i) r[i * n] = c[i];
  return Poly(std::move(r));
}

Cyclo Poly::eval(const Cyclo& x) const {
  Cyclo v;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

void Poly::divmod(const Poly& num, const Poly& den, Poly& q, Poly& r) {
  if (den.is_zero()) throw Error("polynomial division by zero");
  r = num;
  q = Poly();
  long dd = den.degree();
  Cyclo lead_inv = den.leading().inverse();
  std::vector<Cyclo> qc;
  if (r.degree() >= dd) qc.assign(r.degree() - dd + 1, Cyclo());
  while (r.degree() >= dd) {
    Cyclo f = r.leading() * lead_inv;
    std::size_t k = r.degree() - dd;
    qc[k] = f;
    // r -= f * t^k * den
    for (long j = 0; j <= dd; ++j) r.c[k + j] -= f * den.c[j];
    r.trim();
  }
  q = Poly(std::move(qc));
}

Poly Poly::exact_div(const Poly& den) const {
  Poly q, r;
  divmod(*this, den, q, r);
  if (!r.is_zero()) throw Error("polynomial division leaves a remainder");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly q, r;
    Poly::divmod(x, y, q, r);
    x = y;
    y = r;
  }
  if (!x.is_zero()) x = x.scale(x.leading().inverse());
  return x;
}

Poly one_minus_zeta_tk(const Cyclo& zeta, unsigned long k) {
  std::vector<Cyclo> c(k + 1, Cyclo());
  c[0] = Cyclo(1L);
  c[k] = -zeta;
  return Poly(std::move(c));
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    Cyclo v = c[i];
    std::string sign;
    if (v.is_rational() && v.to_rational() < 0) {
      sign = first ? "-" : " - ";
      v = -v;
    } else {
      sign = first ? "" : " + ";
    }
    os << sign;
    first = false;
    std::string cs = v.str();
    if (i == 0) {
      os << cs;
    } else {
      if (cs != "1")
        os << (cs.find_first_of("+- ") != std::string::npos ? "(" + cs + ")" : cs) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace eqehr
