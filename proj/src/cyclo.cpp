#include "eqehr/cyclo.hpp"

#include <map>
#include <sstream>

#include "eqehr/errors.hpp"

namespace eqehr {

namespace {

// exact division of integer polynomials, num = q * den with den monic
std::vector<Int> exact_div_monic(const std::vector<Int>& num, const std::vector<Int>& den) {
  std::vector<Int> r = num;
  std::size_t dn = den.size() - 1;
  std::vector<Int> q(num.size() - dn, Int(0));
  for (std::size_t i = r.size(); i-- > dn;) {
    Int f = r[i];
    q[i - dn] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) r[i - dn + j] -= f * den[j];
  }
  return q;
}

// remainder of poly (rationals, any degree) modulo monic integer divisor
std::vector<Rat> rem_monic(std::vector<Rat> r, const std::vector<Int>& den) {
  std::size_t dn = den.size() - 1;
  for (std::size_t i = r.size(); i-- > dn;) {
    if (i < dn) break;
    Rat f = r[i];
    if (f == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) r[i - dn + j] -= f * Rat(den[j]);
  }
  r.resize(dn);
  return r;
}

}  // namespace

std::vector<Int> cyclotomic_poly_z(unsigned long n) {
  static std::map<unsigned long, std::vector<Int>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<Int> result;
  if (n == 1) {
    result = {Int(-1), Int(1)};
  } else {
    std::vector<Int> num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned long d = 1; d < n; ++d)
      if (n % d == 0) num = exact_div_monic(num, cyclotomic_poly_z(d));
    result = num;
  }
  cache[n] = result;
  return result;
}

void Cyclo::canonicalize() {
  unsigned long phi = euler_phi(n_);
  c_.resize(phi, Rat(0));
  if (n_ == 1) return;
  bool rational = true;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) rational = false;
  if (rational) {
    Rat v = c_[0];
    n_ = 1;
    c_ = {v};
  }
}

Cyclo Cyclo::from_powers(unsigned long n, const std::vector<Rat>& coeffs) {
  // fold exponents mod n (zeta^n = 1), then reduce mod Phi_n
  std::vector<Rat> folded(n, Rat(0));
  for (std::size_t e = 0; e < coeffs.size(); ++e) folded[e % n] += coeffs[e];
  auto reduced = rem_monic(std::move(folded), cyclotomic_poly_z(n));
  Cyclo z;
  z.n_ = n;
  z.c_ = std::move(reduced);
  z.canonicalize();
  return z;
}

Cyclo Cyclo::root_of_unity(unsigned long n, long k) {
  long kk = ((k % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
  std::vector<Rat> coeffs(static_cast<std::size_t>(kk) + 1, Rat(0));
  coeffs[static_cast<std::size_t>(kk)] = 1;
  return from_powers(n, coeffs);
}

bool Cyclo::is_zero() const {
  for (const Rat& q : c_)
    if (q != 0) return false;
  return true;
}

Rat Cyclo::to_rational() const {
  if (n_ != 1) throw Error("cyclotomic value is not rational: " + str());
  return c_[0];
}

Cyclo Cyclo::lifted(unsigned long m) const {
  if (m == n_) return *this;
  // zeta_n = zeta_m^{m/n}
  unsigned long s = m / n_;
  std::vector<Rat> coeffs(euler_phi(n_) * s + 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) coeffs[i * s] = c_[i];
  Cyclo z = from_powers(m, coeffs);
  if (z.n_ != m) {
    // re-expand values that collapsed to a smaller conductor so callers can
    // rely on coefficient vectors of length phi(m)
    z.c_.resize(euler_phi(m), Rat(0));
    z.n_ = m;
  }
  return z;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  unsigned long m = lcm(Int(static_cast<long>(n_)), Int(static_cast<long>(o.n_))).get_ui();
  Cyclo a = lifted(m), b = o.lifted(m);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  a.canonicalize();
  return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (Rat& q : r.c_) q = -q;
  return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  if (is_zero() || o.is_zero()) return Cyclo();
  if (n_ == 1 && o.n_ == 1) return Cyclo(Rat(c_[0] * o.c_[0]));
  unsigned long m = lcm(Int(static_cast<long>(n_)), Int(static_cast<long>(o.n_))).get_ui();
  Cyclo a = lifted(m), b = o.lifted(m);
  std::vector<Rat> prod(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
  }
  return from_powers(m, prod);
}

Cyclo Cyclo::operator/(const Cyclo& o) const { return *this * o.inverse(); }

bool Cyclo::operator==(const Cyclo& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  unsigned long m = lcm(Int(static_cast<long>(n_)), Int(static_cast<long>(o.n_))).get_ui();
  return lifted(m).c_ == o.lifted(m).c_;
}

Cyclo Cyclo::conj() const {
  if (n_ == 1) return *this;
  std::vector<Rat> coeffs(n_, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) coeffs[(n_ - i) % n_] += c_[i];
  return from_powers(n_, coeffs);
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw Error("division by zero cyclotomic");
  if (n_ == 1) return Cyclo(Rat(1 / c_[0]));
  // solve (multiplication by *this) x = 1 in the power basis
  unsigned long phi = euler_phi(n_);
  // build the phi x phi multiplication matrix column by column
  std::vector<std::vector<Rat>> cols(phi);
  for (unsigned long j = 0; j < phi; ++j) {
    std::vector<Rat> xj(j + 1, Rat(0));
    xj[j] = 1;
    Cyclo bj = *this * from_powers(n_, xj);
    Cyclo lifted_bj = bj.lifted(n_);
    cols[j] = lifted_bj.c_;
    cols[j].resize(phi, Rat(0));
  }
  // gaussian elimination on [M | e0]
  std::vector<std::vector<Rat>> M(phi, std::vector<Rat>(phi + 1, Rat(0)));
  for (unsigned long i = 0; i < phi; ++i)
    for (unsigned long j = 0; j < phi; ++j) M[i][j] = cols[j][i];
  M[0][phi] = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < phi && row < phi; ++col) {
    std::size_t p = row;
    while (p < phi && M[p][col] == 0) ++p;
    if (p == phi) continue;
    std::swap(M[row], M[p]);
    Rat inv = 1 / M[row][col];
    for (std::size_t j = col; j <= phi; ++j) M[row][j] *= inv;
    for (std::size_t i = 0; i < phi; ++i) {
      if (i == row || M[i][col] == 0) continue;
      Rat f = M[i][col];
      for (std::size_t j = col; j <= phi; ++j) M[i][j] -= f * M[row][j];
    }
    ++row;
  }
  if (row != phi) throw Error("cyclotomic inverse: singular multiplication matrix");
  std::vector<Rat> x(phi);
  for (std::size_t i = 0; i < phi; ++i) x[i] = M[i][phi];
  Cyclo r;
  r.n_ = n_;
  r.c_ = std::move(x);
  r.canonicalize();
  return r;
}

std::string Cyclo::str() const {
  if (n_ == 1) return rat_to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << rat_to_string(c_[i]);
    } else {
      if (c_[i] != 1) os << rat_to_string(c_[i]) << "*";
      os << "z" << n_;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace eqehr
