#include "eqehr/ratfunc.hpp"

#include <algorithm>
#include <sstream>

#include "eqehr/errors.hpp"

namespace eqehr {

namespace {

bool factor_less(const DenFactor& a, const DenFactor& b) {
  if (a.k != b.k) return a.k < b.k;
  if (a.zeta.conductor() != b.zeta.conductor()) return a.zeta.conductor() < b.zeta.conductor();
  return a.zeta.coeffs() < b.zeta.coeffs();
}

}  // namespace

RatFunc::RatFunc(Poly num, std::vector<std::pair<DenFactor, unsigned>> den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize_factors();
}

void RatFunc::normalize_factors() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  std::vector<std::pair<DenFactor, unsigned>> merged;
  std::sort(den_.begin(), den_.end(),
            [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });
  for (auto& [f, m] : den_) {
    if (m == 0) continue;
    if (!merged.empty() && merged.back().first == f)
      merged.back().second += m;
    else
      merged.emplace_back(f, m);
  }
  den_ = std::move(merged);
}

Poly RatFunc::den_expanded() const {
  Poly d = Poly::one();
  for (const auto& [f, m] : den_)
    for (unsigned i = 0; i < m; ++i) d *= one_minus_zeta_tk(f.zeta, f.k);
  return d;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // common denominator = multiset max-union
  std::vector<std::pair<DenFactor, unsigned>> uni;
  std::size_t i = 0, j = 0;
  Poly extra_this = Poly::one(), extra_other = Poly::one();
  while (i < den_.size() || j < o.den_.size()) {
    if (j == o.den_.size() ||
        (i < den_.size() && factor_less(den_[i].first, o.den_[j].first))) {
      uni.push_back(den_[i]);
      for (unsigned m = 0; m < den_[i].second; ++m)
        extra_other *= one_minus_zeta_tk(den_[i].first.zeta, den_[i].first.k);
      ++i;
    } else if (i == den_.size() || factor_less(o.den_[j].first, den_[i].first)) {
      uni.push_back(o.den_[j]);
      for (unsigned m = 0; m < o.den_[j].second; ++m)
        extra_this *= one_minus_zeta_tk(o.den_[j].first.zeta, o.den_[j].first.k);
      ++j;
    } else {
      unsigned m = std::max(den_[i].second, o.den_[j].second);
      uni.emplace_back(den_[i].first, m);
      for (unsigned x = den_[i].second; x < m; ++x)
        extra_this *= one_minus_zeta_tk(den_[i].first.zeta, den_[i].first.k);
      for (unsigned x = o.den_[j].second; x < m; ++x)
        extra_other *= one_minus_zeta_tk(o.den_[j].first.zeta, o.den_[j].first.k);
      ++i;
      ++j;
    }
  }
  return RatFunc(num_ * extra_this + o.num_ * extra_other, std::move(uni));
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  r.reduced_.reset();
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  auto den = den_;
  den.insert(den.end(), o.den_.begin(), o.den_.end());
  return RatFunc(num_ * o.num_, std::move(den));
}

RatFunc RatFunc::mul_poly(const Poly& p) const {
  if (p.is_zero() || is_zero()) return RatFunc();
  return RatFunc(num_ * p, den_);
}

RatFunc RatFunc::div_factor(const DenFactor& f) const {
  auto den = den_;
  den.emplace_back(f, 1u);
  return RatFunc(num_, std::move(den));
}

RatFunc RatFunc::substitute_power(unsigned long n) const {
  auto den = den_;
  for (auto& [f, m] : den) f.k *= n;
  return RatFunc(num_.substitute_power(n), std::move(den));
}

const RatFunc::Reduced& RatFunc::reduced() const {
  if (!reduced_) {
    Poly den = den_expanded();
    Poly g = gcd(num_, den);
    Poly n = num_, d = den;
    if (g.degree() > 0) {
      n = num_.exact_div(g);
      d = den.exact_div(g);
    }
    // normalize constant term of the denominator to 1
    Cyclo c0 = d.coeff(0);
    if (c0.is_zero()) throw Error("reduced denominator vanishes at t = 0");
    Cyclo inv = c0.inverse();
    reduced_ = Reduced{n.scale(inv), d.scale(inv)};
  }
  return *reduced_;
}

bool RatFunc::operator==(const RatFunc& o) const {
  const Reduced& a = reduced();
  const Reduced& b = o.reduced();
  return a.num * b.den == b.num * a.den;
}

bool RatFunc::is_polynomial() const { return reduced().den.degree() == 0; }

Poly RatFunc::as_polynomial() const {
  const Reduced& r = reduced();
  if (r.den.degree() != 0) throw Error("rational function is not a polynomial: " + str());
  return r.num.scale(r.den.coeff(0).inverse());
}

std::vector<Cyclo> RatFunc::series(std::size_t K) const {
  // num / den with den(0) = 1 (after normalization): s_k = num_k - sum_{j>=1} den_j s_{k-j}
  Poly den = den_expanded();
  Cyclo d0 = den.coeff(0);
  Cyclo inv = d0.inverse();
  std::vector<Cyclo> s(K + 1, Cyclo());
  for (std::size_t k = 0; k <= K; ++k) {
    Cyclo v = num_.coeff(k);
    for (std::size_t j = 1; j <= k && static_cast<long>(j) <= den.degree(); ++j)
      v -= den.coeff(j) * s[k - j];
    s[k] = v * inv;
  }
  return s;
}

std::string RatFunc::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const Reduced& r = reduced();
  if (r.den.degree() == 0) return r.num.scale(r.den.coeff(0).inverse()).str(var);
  os << "(" << r.num.str(var) << ") / (" << r.den.str(var) << ")";
  return os.str();
}

}  // namespace eqehr
