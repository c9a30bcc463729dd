#pragma once

#include <optional>
#include <vector>

#include "pencils/forms.hpp"
#include "pencils/pencil.hpp"

namespace pencils {

/// Element of L_f = Q[X]/(f(X,1)) in the power basis 1, X, ..., X^{n-1}.
struct AlgebraElement {
  BinaryForm modulus;
  std::vector<Rational> coeffs;

  AlgebraElement() = default;
  /// Reduces an arbitrary polynomial (ascending coefficients) modulo f(X,1).
  AlgebraElement(BinaryForm f, std::vector<Rational> poly);
  static AlgebraElement constant(const BinaryForm& f, const Rational& c);
  /// The class of X.
  static AlgebraElement generator(const BinaryForm& f);

  std::size_t n() const { return coeffs.size(); }
  bool is_zero() const;

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const Rational& c);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.coeffs == b.coeffs && a.modulus.coeffs == b.modulus.coeffs;
  }
};

AlgebraElement power(const AlgebraElement& a, unsigned long e);
/// Inverse in L_f, or nothing when a is a zero divisor.
std::optional<AlgebraElement> inverse(const AlgebraElement& a);
/// Matrix of multiplication by a; column j holds a * X^j.
RatMatrix multiplication_matrix(const AlgebraElement& a);
/// Coefficient of X^{n-1}.
Rational tau_functional(const AlgebraElement& a);
Rational norm(const AlgebraElement& a);

struct OrbitDatum {
  BinaryForm f;
  AlgebraElement alpha;
  Rational z;
};

/// A divisor on y^2 = f(x, z) given by the form U cutting out its image and w, the product of the
/// y-coordinates of its points.
struct DivisorSpec {
  BinaryForm f;
  BinaryForm U;
  Rational w;

  /// Degree of U(X,1).
  int affine_count() const;
  /// Leading coefficient of U(X,1).
  Integer leading() const;
};

/// U = c x - a y and w = b / c^{g+1} for the point (a : c : b) with b^2 = f(a, c).
DivisorSpec divisor_from_point(const BinaryForm& f, const Integer& a, const Integer& c, const Integer& b);

/// z^2 N(alpha) = f_0^{n+1}.
bool validate_datum(const OrbitDatum& d);

struct DatumPencil {
  RationalPencil pencil;
  /// Coordinates of 1 in the basis z, X, ..., X^{n-1}.
  std::vector<Rational> one_bar;
};
DatumPencil pencil_from_datum(const OrbitDatum& d);

OrbitDatum datum_from_divisor(const DivisorSpec& ds);

struct IntegralRepresentative {
  Pencil pencil;
  /// Columns are the new basis in the coordinates of the input pencil.
  RatMatrix basis;
  /// one_bar in the new basis, when one was supplied.
  std::vector<Rational> one_bar;
};

/// Searches for an integral pencil in the SL_n(Q)-orbit of p. A known vector lying in some integral
/// lattice (such as one_bar) narrows the search. Throws NotFound once `budget` lattices are tried.
IntegralRepresentative integralize(const RationalPencil& p, const std::optional<std::vector<Rational>>& one_bar = {},
                                   long budget = 20000);

/// Sum over roots of f of |U|/|f_x| at (omega : 1) for |omega| <= 1 and |U|/|f_y| at (1 : eta) otherwise.
Estimate norm_of_one_formula(const DivisorSpec& ds, long precision);

/// Both chart evaluations of each root's term: (at (omega:1), at (1:eta)).
struct RootTerms {
  Real inside_chart;
  Real outside_chart;
  bool boundary = false;
};
std::vector<RootTerms> norm_of_one_terms(const DivisorSpec& ds, long precision);

}  // namespace pencils
