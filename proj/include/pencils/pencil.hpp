#pragma once

#include <vector>

#include "pencils/forms.hpp"
#include "pencils/numeric.hpp"

namespace pencils {

/// Pair of symmetric integer matrices (A, B), viewed as the family Ax - By.
struct Pencil {
  IntMatrix A;
  IntMatrix B;

  Pencil() = default;
  /// Validates shape and symmetry.
  Pencil(IntMatrix a, IntMatrix b);
  std::size_t n() const { return A.rows(); }
  friend bool operator==(const Pencil& p, const Pencil& q) { return p.A == q.A && p.B == q.B; }
};

/// Pencil with rational entries, as produced by orbit data before integralization.
struct RationalPencil {
  RatMatrix A;
  RatMatrix B;

  RationalPencil() = default;
  RationalPencil(RatMatrix a, RatMatrix b);
  explicit RationalPencil(const Pencil& p);
  std::size_t n() const { return A.rows(); }
  bool integral() const;
  /// The integer pencil when every entry is integral.
  Pencil to_integral() const;
  friend bool operator==(const RationalPencil& p, const RationalPencil& q) { return p.A == q.A && p.B == q.B; }
};

/// Integer matrix of determinant +1 or -1.
class UnimodularMatrix {
 public:
  explicit UnimodularMatrix(IntMatrix m);
  static UnimodularMatrix identity(std::size_t n) { return UnimodularMatrix(IntMatrix::identity(n)); }

  const IntMatrix& matrix() const { return m_; }
  int det() const { return det_; }
  std::size_t n() const { return m_.rows(); }
  IntMatrix inverse() const;

  friend UnimodularMatrix operator*(const UnimodularMatrix& a, const UnimodularMatrix& b) {
    return UnimodularMatrix(a.m_ * b.m_);
  }

 private:
  IntMatrix m_;
  int det_;
};

/// g . (A, B) = (g^-T A g^-1, g^-T B g^-1).
Pencil act(const UnimodularMatrix& g, const Pencil& p);
/// Same action for an invertible rational g.
RationalPencil act(const RatMatrix& g, const RationalPencil& p);

/// (-1)^(n(n-1)/2) det(Ax - By), by interpolation at x/y = 0, 1, -1, 2, -2, ...
BinaryForm invariant_form(const Pencil& p);
/// Coefficients f_0..f_n of the invariant form of a rational pencil.
std::vector<Rational> invariant_form(const RationalPencil& p);
Integer pencil_discriminant(const Pencil& p);

}  // namespace pencils
