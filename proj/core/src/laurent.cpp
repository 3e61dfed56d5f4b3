#include "qsl2/laurent.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qsl2 {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) coeffs_[0] = c;
}

LaurentPoly LaurentPoly::tpow(int e) { return term(e, 1); }

LaurentPoly LaurentPoly::term(int e, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.coeffs_[e] = c;
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
  if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

Rational LaurentPoly::coeff(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int e, const Rational& c) {
  if (c == 0) return;
  auto it = coeffs_.find(e);
  if (it == coeffs_.end()) {
    coeffs_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, cc] : coeffs_) r.coeffs_[e] = cc * c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int d) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e + d] = c;
  return r;
}

LaurentPoly LaurentPoly::reversed() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

Complex LaurentPoly::eval(Complex t0) const {
  Complex acc{0.0, 0.0};
  for (const auto& [e, c] : coeffs_) {
    acc += static_cast<double>(c) * std::pow(t0, e);
  }
  return acc;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Rational c = it->second;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    int e = it->first;
    if (e == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace poly {

int degree(const LaurentPoly& p) { return p.is_zero() ? -1 : p.max_exp(); }

Rational leading_coeff(const LaurentPoly& p) {
  return p.is_zero() ? Rational(0) : p.coeff(p.max_exp());
}

void divmod(const LaurentPoly& p, const LaurentPoly& d, LaurentPoly& q, LaurentPoly& r) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  q = LaurentPoly();
  r = p;
  const int dd = degree(d);
  const Rational dl = leading_coeff(d);
  while (!r.is_zero() && degree(r) >= dd) {
    const int sh = degree(r) - dd;
    const Rational c = leading_coeff(r) / dl;
    q.add_term(sh, c);
    r = r - d.shifted(sh).scaled(c);
  }
}

LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly q, r;
    divmod(a, b, q, r);
    a = b;
    // keep remainders monic to control coefficient growth
    b = r.is_zero() ? r : r.scaled(Rational(1) / leading_coeff(r));
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / leading_coeff(a));
}

} // namespace poly

} // namespace qsl2
