#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "pencils/numeric.hpp"

namespace pencils {

/// Arbitrary precision real. Each value carries its own precision in bits;
/// binary operations produce a result at the larger of the two precisions.
class Real {
 public:
  static constexpr long kDefaultPrecision = 256;

  Real() : Real(0.0, kDefaultPrecision) {}
  Real(double v, long prec = kDefaultPrecision);
  Real(int v, long prec = kDefaultPrecision) : Real(static_cast<double>(v), prec) {}
  Real(const Integer& v, long prec);
  Real(const Rational& v, long prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  Real with_precision(long prec) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  /// Decimal string with `digits` significant digits.
  std::string to_string(int digits = 20) const;
  /// Nearest integer (ties away from zero).
  Integer round() const;
  Integer floor() const;
  Integer ceil() const;
  /// Exact conversion to a rational number.
  Rational to_rational() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(const Real& a);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

  static Real pi(long prec);
  /// 2^e at the given precision.
  static Real pow2(long e, long prec);

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real pow(const Real& x, const Real& y);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real hypot(const Real& a, const Real& b);

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(r), im(0.0, r.precision()) {}

  long precision() const { return std::max(re.precision(), im.precision()); }
  Complex conj() const { return {re, -im}; }
  Real norm2() const { return re * re + im * im; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(Complex a, const Real& s) {
    a.re *= s;
    a.im *= s;
    return a;
  }
};

Real abs(const Complex& z);

using RealMatrix = Matrix<Real>;
using ComplexMatrix = Matrix<Complex>;

RealMatrix to_real(const IntMatrix& m, long prec);
RealMatrix to_real(const RatMatrix& m, long prec);
/// Largest absolute entry.
Real max_abs(const RealMatrix& m);

}  // namespace pencils
