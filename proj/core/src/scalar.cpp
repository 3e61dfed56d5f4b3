#include "qsl2/scalar.hpp"

#include <cmath>

namespace qsl2 {

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(Rational(1));
    return;
  }
  const int s = num_.min_exp();
  LaurentPoly n = num_.shifted(-s); // polynomial with nonzero constant term
  LaurentPoly d = den_;
  const LaurentPoly g = poly::gcd(n, d);
  if (!g.is_one()) {
    LaurentPoly q, r;
    poly::divmod(n, g, q, r);
    n = q;
    poly::divmod(d, g, q, r);
    d = q;
  }
  const Rational lc = poly::leading_coeff(d);
  if (lc != 1) {
    n = n.scaled(Rational(1) / lc);
    d = d.scaled(Rational(1) / lc);
  }
  num_ = n.shifted(s);
  den_ = d;
}

Scalar Scalar::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero scalar");
  Scalar r;
  const int s = den.min_exp();
  r.num_ = num.shifted(-s);
  r.den_ = den.shifted(-s);
  r.normalize();
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  return fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  return fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  return fraction(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  return fraction(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  return fraction(den_, num_);
}

Complex Scalar::eval(Complex t0) const {
  const Complex d = den_.eval(t0);
  if (std::abs(d) < 1e-300) throw pole_error("scalar has a pole at the given t0");
  return num_.eval(t0) / d;
}

std::string Scalar::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

Scalar qint(int n) {
  LaurentPoly p;
  for (int k = 0; k < n; ++k) p.add_term(2 * n - 2 - 4 * k, 1);
  return Scalar(p);
}

Scalar qfact(int n) {
  Scalar r = 1;
  for (int k = 1; k <= n; ++k) r *= qint(k);
  return r;
}

Scalar casimir_eigenvalue(int m) {
  const LaurentPoly a = LaurentPoly::tpow(m + 1) - LaurentPoly::tpow(-m - 1);
  const LaurentPoly b = LaurentPoly::tpow(2) - LaurentPoly::tpow(-2);
  return Scalar::fraction(a * a, b * b);
}

bool numeric_t0_admissible(Complex t0, int max_order) {
  constexpr double eps = 1e-9;
  if (std::abs(t0) < eps) return false;
  if (std::abs(std::abs(t0) - 1.0) > eps) return true;
  Complex p{1.0, 0.0};
  for (int k = 1; k <= max_order; ++k) {
    p *= t0;
    if (std::abs(p - Complex{1.0, 0.0}) < eps) return false;
    if (std::abs(p + Complex{1.0, 0.0}) < eps) return false;
  }
  return true;
}

} // namespace qsl2
