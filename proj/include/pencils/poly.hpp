#pragma once

#include <cstdint>
#include <vector>

#include "pencils/numeric.hpp"

namespace pencils::poly {

/// Dense univariate polynomial, coefficients in ascending order of degree.
/// The zero polynomial is the empty vector.
template <class T>
using Poly = std::vector<T>;

using ZPoly = Poly<Integer>;
using QPoly = Poly<Rational>;

template <class T>
void trim(Poly<T>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class T>
int degree(const Poly<T>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class T>
Poly<T> add(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> c(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  trim(c);
  return c;
}

template <class T>
Poly<T> sub(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> c(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

template <class T>
Poly<T> mul(const Poly<T>& a, const Poly<T>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<T> c(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

template <class T, class S>
Poly<T> scale(const Poly<T>& a, const S& s) {
  Poly<T> c = a;
  for (auto& v : c) v *= s;
  trim(c);
  return c;
}

template <class T>
Poly<T> derivative(const Poly<T>& a) {
  if (a.size() <= 1) return {};
  Poly<T> d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<long>(i);
  trim(d);
  return d;
}

/// Horner evaluation in any ring R that accepts T coefficients through `lift`.
template <class R, class T, class Lift>
R evaluate(const Poly<T>& p, const R& x, const R& zero, Lift&& lift) {
  R acc = zero;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + lift(p[i]);
  return acc;
}

QPoly to_q(const ZPoly& p);
/// Quotient and remainder over Q.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly rem(const QPoly& a, const QPoly& b);
/// Monic gcd over Q.
QPoly gcd(const QPoly& a, const QPoly& b);
Integer content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);
/// Clears denominators and returns the primitive integer polynomial with positive leading coefficient.
ZPoly primitive_from(const QPoly& p);
/// Exact divisibility test over Z.
bool divides(const ZPoly& divisor, const ZPoly& dividend);
/// Resultant via the Sylvester determinant.
Integer resultant(const ZPoly& a, const ZPoly& b);
Integer norm2_squared(const ZPoly& p);

/// Number of distinct real roots of a polynomial over Q (Sturm sequence).
int real_root_count(const QPoly& p);

// Arithmetic over F_p, p an odd prime below 2^32.
namespace modp {

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& a);
Coeffs reduce(const ZPoly& a, std::uint64_t p);
Coeffs mul(const Coeffs& a, const Coeffs& b, std::uint64_t p);
Coeffs sub(const Coeffs& a, const Coeffs& b, std::uint64_t p);
Coeffs add(const Coeffs& a, const Coeffs& b, std::uint64_t p);
void divmod(const Coeffs& a, const Coeffs& b, std::uint64_t p, Coeffs& q, Coeffs& r);
Coeffs rem(const Coeffs& a, const Coeffs& b, std::uint64_t p);
Coeffs monic(const Coeffs& a, std::uint64_t p);
Coeffs gcd(const Coeffs& a, const Coeffs& b, std::uint64_t p);
/// s, t with s*a + t*b = 1 for coprime a, b.
void bezout(const Coeffs& a, const Coeffs& b, std::uint64_t p, Coeffs& s, Coeffs& t);
Coeffs powmod(const Coeffs& base, const Integer& e, const Coeffs& mod, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);

/// Distinct-degree factorisation of a monic squarefree polynomial:
/// (degree, product of all irreducible factors of that degree).
std::vector<std::pair<int, Coeffs>> distinct_degree(const Coeffs& f, std::uint64_t p);
/// Full factorisation into monic irreducibles (Cantor-Zassenhaus), deterministic seed.
std::vector<Coeffs> factor(const Coeffs& f, std::uint64_t p);

}  // namespace modp

/// Lifts f = lc * prod(factors) mod p to a factorisation modulo `modulus` (a power of p).
/// The returned factors are monic modulo `modulus`.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<modp::Coeffs>& factors, std::uint64_t p,
                               const Integer& modulus);

}  // namespace pencils::poly
