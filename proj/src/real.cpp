#include "pencils/real.hpp"

#include <climits>

#include "pencils/errors.hpp"

namespace pencils {

namespace {

long joint(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

void widen(mpfr_ptr v, long prec) {
  if (static_cast<long>(mpfr_get_prec(v)) < prec) mpfr_prec_round(v, prec, MPFR_RNDN);
}

}  // namespace

Real::Real(double v, long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const Integer& v, long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& v, long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_precision(long prec) const {
  Real r(0.0, prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  int len = mpfr_snprintf(nullptr, 0, fmt.c_str(), v_);
  std::string out(static_cast<std::size_t>(len) + 1, '\0');
  mpfr_snprintf(out.data(), out.size(), fmt.c_str(), v_);
  out.resize(static_cast<std::size_t>(len));
  return out;
}

Integer Real::round() const {
  if (!is_finite()) throw Error(ErrorKind::RangeError, "rounding a non-finite value");
  Integer z;
  Real t(0.0, precision());
  mpfr_round(t.v_, v_);
  mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
  return z;
}

Integer Real::floor() const {
  if (!is_finite()) throw Error(ErrorKind::RangeError, "rounding a non-finite value");
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
  return z;
}

Integer Real::ceil() const {
  if (!is_finite()) throw Error(ErrorKind::RangeError, "rounding a non-finite value");
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDU);
  return z;
}

Rational Real::to_rational() const {
  if (!is_finite()) throw Error(ErrorKind::RangeError, "converting a non-finite value");
  if (is_zero()) return Rational(0);
  Integer m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  Rational q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

long Real::exponent() const {
  if (is_zero() || !is_finite()) return LONG_MIN / 2;
  return static_cast<long>(mpfr_get_exp(v_));
}

Real& Real::operator+=(const Real& o) {
  widen(v_, o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(v_, o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(v_, o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(v_, o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& a) {
  Real r(a);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real Real::pi(long prec) {
  Real r(0.0, prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow2(long e, long prec) {
  Real r(1.0, prec);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x);
  mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw Error(ErrorKind::RangeError, "square root of a negative number");
  Real r(x);
  mpfr_sqrt(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw Error(ErrorKind::RangeError, "logarithm of a non-positive number");
  Real r(x);
  mpfr_log(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x);
  mpfr_exp(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(0.0, joint(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real hypot(const Real& a, const Real& b) {
  Real r(0.0, joint(a, b));
  mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real d = o.norm2();
  if (d.is_zero()) throw Error(ErrorKind::RangeError, "complex division by zero");
  Real r = (re * o.re + im * o.im) / d;
  Real i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Real abs(const Complex& z) { return hypot(z.re, z.im); }

RealMatrix to_real(const IntMatrix& m, long prec) {
  return m.map<Real>([&](const Integer& v) { return Real(v, prec); });
}

RealMatrix to_real(const RatMatrix& m, long prec) {
  return m.map<Real>([&](const Rational& v) { return Real(v, prec); });
}

Real max_abs(const RealMatrix& m) {
  Real best(0.0, 64);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) best = max(best, abs(m(i, j)));
  return best;
}

}  // namespace pencils
