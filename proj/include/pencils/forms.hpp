#pragma once

#include <vector>

#include "pencils/numeric.hpp"
#include "pencils/poly.hpp"
#include "pencils/real.hpp"

namespace pencils {

/// Binary form f(x, y) = sum_i coeffs[i] x^(n-i) y^i, so coeffs[0] = f_0 is the x^n coefficient.
struct BinaryForm {
  std::vector<Integer> coeffs;

  BinaryForm() = default;
  explicit BinaryForm(std::vector<Integer> c);
  static BinaryForm from_ints(std::initializer_list<long> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const Integer& operator[](std::size_t i) const { return coeffs[i]; }
  bool is_zero() const;

  /// f(X, 1) with ascending coefficients (its degree drops when f_0 = 0).
  poly::ZPoly dehomogenize() const;
  Integer evaluate(const Integer& x, const Integer& y) const;
  Rational evaluate(const Rational& x, const Rational& y) const;
  Complex evaluate(const Complex& x, const Complex& y) const;
  /// Partial derivatives, as forms of degree n - 1.
  BinaryForm dx() const;
  BinaryForm dy() const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs == b.coeffs; }
};

/// Binary form from ascending coefficients of f(X, 1) and a total degree.
BinaryForm homogenize(const poly::ZPoly& p, int degree);
BinaryForm product(const BinaryForm& a, const BinaryForm& b);

/// Value together with an absolute error estimate.
struct Estimate {
  Real value;
  Real error;
};

/// A projective root (x : y) of a binary form. Roots with |rho| <= 1 are stored
/// as (omega : 1); the others as (1 : eta), eta = 0 for a root at infinity.
struct ProjectiveRoot {
  Complex x;
  Complex y;
  /// omega when inside, eta otherwise.
  Complex value;
  bool inside = true;
  /// Within 2^(-precision/2) of the unit circle.
  bool boundary = false;
  bool real = false;
  /// Radius of a disc around `value` certified to contain exactly this root.
  Real radius;

  bool at_infinity() const { return !inside && value.is_zero(); }
  /// Affine root rho = x / y; only for finite roots.
  Complex affine() const;
};

struct RootSet {
  std::vector<ProjectiveRoot> roots;
  Integer leading;
  long precision = 0;

  std::size_t inside_count() const;
  /// Largest certified radius among the roots.
  Real max_radius() const;
};

Integer height(const BinaryForm& f);
Integer discriminant(const BinaryForm& f);
RootSet complex_roots(const BinaryForm& f, long precision);
/// |c| in f = c prod (x - omega y) prod (eta x - y).
Estimate mahler_measure(const BinaryForm& f, long precision);
Estimate mahler_measure(const BinaryForm& f, const RootSet& roots);
int real_root_count(const BinaryForm& f);
bool leading_coefficient_bound_check(const BinaryForm& f, long precision);

enum class Tristate { False, True, Unknown };
const char* to_string(Tristate t);
Tristate is_irreducible(const BinaryForm& f);

}  // namespace pencils
