#pragma once

#include <complex>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsl2 {

using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Laurent polynomial in t with rational coefficients.
/// Invariant: no stored zero coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c);

  static LaurentPoly tpow(int e);                    // t^e
  static LaurentPoly term(int e, const Rational& c); // c * t^e

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  int min_exp() const; // requires nonzero
  int max_exp() const; // requires nonzero
  Rational coeff(int e) const;
  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  void add_term(int e, const Rational& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(int d) const; // * t^d
  LaurentPoly reversed() const;     // t -> t^-1

  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }

  Complex eval(Complex t0) const;
  std::string str() const; // human-readable, deterministic

private:
  std::map<int, Rational> coeffs_;
};

namespace poly {
// Helpers on ordinary polynomials (min_exp >= 0). Degree of zero is -1.
int degree(const LaurentPoly& p);
Rational leading_coeff(const LaurentPoly& p);
// p = q*d + r with deg(r) < deg(d); d nonzero.
void divmod(const LaurentPoly& p, const LaurentPoly& d, LaurentPoly& q, LaurentPoly& r);
// Monic gcd over Q[t]; gcd(0,0) = 0.
LaurentPoly gcd(LaurentPoly a, LaurentPoly b);
} // namespace poly

} // namespace qsl2
