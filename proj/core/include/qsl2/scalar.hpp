#pragma once

#include <stdexcept>

#include "qsl2/laurent.hpp"

namespace qsl2 {

struct pole_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element of Q(t) in canonical form: numerator is a Laurent polynomial,
/// denominator is an ordinary polynomial with nonzero constant term and
/// leading coefficient 1, and gcd(numerator shifted to a polynomial,
/// denominator) = 1.
class Scalar {
public:
  Scalar() = default; // zero
  Scalar(long n) : num_(Rational(n)) {}
  explicit Scalar(const Rational& c) : num_(c) {}
  explicit Scalar(const LaurentPoly& p) : num_(p) {}
  static Scalar tpow(int e) { return Scalar(LaurentPoly::tpow(e)); }
  static Scalar fraction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the denominator is 1 (value lies in the Laurent subring).
  bool is_laurent() const { return den_.is_one(); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Value at t = t0; throws pole_error when the denominator vanishes there.
  Complex eval(Complex t0) const;

  std::string str() const;

private:
  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(Rational(1));
  void normalize();
};

/// Quantum integer [n] = t^{2n-2} + t^{2n-6} + ... + t^{-(2n-2)}.
Scalar qint(int n);
/// Quantum factorial [n]! = [n][n-1]...[1], [0]! = 1.
Scalar qfact(int n);
/// Casimir eigenvalue on the level-m irreducible,
/// lambda_m = (t^{m+1} - t^{-m-1})^2 / (t^2 - t^{-2})^2.
Scalar casimir_eigenvalue(int m);

/// Guard for numeric mode: true when t0 is nonzero and is not (numerically)
/// a root of unity of order up to max_order.
bool numeric_t0_admissible(Complex t0, int max_order);

} // namespace qsl2
