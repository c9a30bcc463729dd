#include "pencils/forms.hpp"

#include "pencils/errors.hpp"

namespace pencils {

BinaryForm::BinaryForm(std::vector<Integer> c) : coeffs(std::move(c)) {
  if (coeffs.empty()) throw Error(ErrorKind::PreconditionViolation, "a binary form needs at least one coefficient");
}

BinaryForm BinaryForm::from_ints(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return BinaryForm(std::move(v));
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

poly::ZPoly BinaryForm::dehomogenize() const {
  poly::ZPoly p(coeffs.rbegin(), coeffs.rend());
  poly::trim(p);
  return p;
}

Integer BinaryForm::evaluate(const Integer& x, const Integer& y) const {
  Integer acc = 0, ypow = 1;
  std::vector<Integer> xpow(coeffs.size(), Integer(1));
  for (std::size_t i = 1; i < coeffs.size(); ++i) xpow[i] = xpow[i - 1] * x;
  const std::size_t n = coeffs.size() - 1;
  for (std::size_t i = 0; i <= n; ++i) {
    acc += coeffs[i] * xpow[n - i] * ypow;
    ypow *= y;
  }
  return acc;
}

Rational BinaryForm::evaluate(const Rational& x, const Rational& y) const {
  Rational acc = 0, ypow = 1;
  std::vector<Rational> xpow(coeffs.size(), Rational(1));
  for (std::size_t i = 1; i < coeffs.size(); ++i) xpow[i] = xpow[i - 1] * x;
  const std::size_t n = coeffs.size() - 1;
  for (std::size_t i = 0; i <= n; ++i) {
    acc += coeffs[i] * xpow[n - i] * ypow;
    ypow *= y;
  }
  return acc;
}

Complex BinaryForm::evaluate(const Complex& x, const Complex& y) const {
  const long prec = std::max(x.precision(), y.precision());
  Complex acc(Real(0.0, prec), Real(0.0, prec));
  Complex ypow(Real(1.0, prec), Real(0.0, prec));
  std::vector<Complex> xpow(coeffs.size(), ypow);
  for (std::size_t i = 1; i < coeffs.size(); ++i) xpow[i] = xpow[i - 1] * x;
  const std::size_t n = coeffs.size() - 1;
  for (std::size_t i = 0; i <= n; ++i) {
    acc += xpow[n - i] * ypow * Real(coeffs[i], prec);
    ypow *= y;
  }
  return acc;
}

BinaryForm BinaryForm::dx() const {
  const int n = degree();
  if (n == 0) return BinaryForm::from_ints({0});
  std::vector<Integer> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[i] = coeffs[i] * (n - i);
  return BinaryForm(std::move(c));
}

BinaryForm BinaryForm::dy() const {
  const int n = degree();
  if (n == 0) return BinaryForm::from_ints({0});
  std::vector<Integer> c(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) c[i - 1] = coeffs[i] * i;
  return BinaryForm(std::move(c));
}

BinaryForm homogenize(const poly::ZPoly& p, int degree) {
  if (poly::degree(p) > degree) throw Error(ErrorKind::PreconditionViolation, "polynomial degree exceeds form degree");
  std::vector<Integer> c(static_cast<std::size_t>(degree + 1), Integer(0));
  for (std::size_t k = 0; k < p.size(); ++k) c[static_cast<std::size_t>(degree) - k] = p[k];
  return BinaryForm(std::move(c));
}

BinaryForm product(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Integer> c(a.coeffs.size() + b.coeffs.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return BinaryForm(std::move(c));
}

Integer height(const BinaryForm& f) {
  Integer h = 0;
  for (const auto& c : f.coeffs) h = std::max<Integer>(h, abs(c));
  return h;
}

namespace {

// f(x, y + t x) keeps the discriminant and has leading coefficient f(1, t).
BinaryForm shear(const BinaryForm& f, const Integer& t) {
  const int n = f.degree();
  poly::ZPoly acc;
  poly::ZPoly ypow{Integer(1)};
  const poly::ZPoly y{Integer(1), t};
  for (int i = 0; i <= n; ++i) {
    poly::ZPoly term(static_cast<std::size_t>(n - i), Integer(0));
    term.insert(term.end(), ypow.begin(), ypow.end());
    acc = poly::add(acc, poly::scale(term, f.coeffs[i]));
    ypow = poly::mul(ypow, y);
  }
  return homogenize(acc, n);
}

}  // namespace

Integer discriminant(const BinaryForm& input) {
  if (input.is_zero()) return 0;
  const int n = input.degree();
  if (n <= 1) return 1;
  BinaryForm f = input;
  if (f.coeffs[0] == 0) {
    for (long k = 1;; ++k) {
      Integer t = (k % 2 == 1) ? Integer((k + 1) / 2) : Integer(-(k / 2));
      if (f.evaluate(Integer(1), t) != 0) {
        f = shear(input, t);
        break;
      }
    }
  }
  poly::ZPoly F = f.dehomogenize();
  Integer res = poly::resultant(F, poly::derivative(F));
  Integer d = res / f.coeffs[0];
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

int real_root_count(const BinaryForm& f) {
  if (discriminant(f) == 0) throw Error(ErrorKind::DegenerateForm, "form has vanishing discriminant");
  poly::ZPoly F = f.dehomogenize();
  const int at_infinity = f.degree() - poly::degree(F);
  return poly::real_root_count(poly::to_q(F)) + at_infinity;
}

Estimate mahler_measure(const BinaryForm& f, const RootSet& roots) {
  poly::ZPoly F = f.dehomogenize();
  const long prec = roots.precision;
  Real value(Integer(abs(F.back())), prec);
  Real rel(0.0, prec);
  for (const auto& r : roots.roots) {
    if (r.inside || r.at_infinity()) continue;
    Real eta = abs(r.value);
    value /= eta;
    rel += r.radius / (eta - r.radius);
  }
  Real error = value * rel + abs(value) * Real::pow2(-prec + 8, prec);
  return {value, error};
}

Estimate mahler_measure(const BinaryForm& f, long precision) {
  return mahler_measure(f, complex_roots(f, precision));
}

bool leading_coefficient_bound_check(const BinaryForm& f, long precision) {
  if (f.coeffs.front() == 0 || f.coeffs.back() == 0)
    throw Error(ErrorKind::PreconditionViolation, "leading coefficient bound needs f_0 f_n != 0");
  Estimate m = mahler_measure(f, precision);
  Integer sum = 0;
  for (const auto& c : f.coeffs) sum += c * c;
  Real lower = max(m.value - m.error, Real(0.0, precision));
  return lower * lower <= Real(Integer(sum * f.degree()), precision);
}

const char* to_string(Tristate t) {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace pencils
