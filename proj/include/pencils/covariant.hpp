#pragma once

#include <utility>
#include <vector>

#include "pencils/forms.hpp"
#include "pencils/linalg.hpp"
#include "pencils/pencil.hpp"

namespace pencils {

/// Positive definite symmetric matrix representing a point of SL_n(R)/SO_n(R) up to scaling.
struct GramMatrix {
  RealMatrix entries;
  /// Entrywise absolute error estimate.
  Real error_bound;
  long precision = 0;
  /// Set when the matrix has been rescaled to determinant 1.
  bool det_normalized = false;

  std::size_t n() const { return entries.rows(); }
  const Real& operator()(std::size_t i, std::size_t j) const { return entries(i, j); }

  static GramMatrix exact(const RealMatrix& m, long precision);
  static GramMatrix diagonal(const std::vector<double>& d, long precision);
};

Real determinant(const GramMatrix& h);
/// h / det(h)^(1/n).
GramMatrix det_normalized(const GramMatrix& h);
/// g^T H g, the Gram matrix of the basis given by the columns of g.
GramMatrix transform(const GramMatrix& h, const IntMatrix& g);
/// v^T H v.
Real quadratic_value(const GramMatrix& h, const std::vector<Integer>& v);
Real quadratic_value(const GramMatrix& h, const std::vector<Rational>& v);

struct DiagonalizingBasis {
  /// Columns b_i with P^T A P and P^T B P diagonal.
  ComplexMatrix P;
  std::vector<Complex> dA;
  std::vector<Complex> dB;
  /// Largest off-diagonal entry of P^T A P and P^T B P relative to the diagonal.
  Real residual;
  /// Auxiliary linear form (r, s): A_a = sA + rB.
  long r = 0;
  long s = 1;
};

enum class CovariantVariant { Max, R1, R2 };

DiagonalizingBasis simultaneous_diagonalize(const Pencil& p, long precision);
GramMatrix reduction_covariant(const Pencil& p, long precision);
/// Same, with a fixed auxiliary form (r, s) instead of the automatic choice.
GramMatrix reduction_covariant(const Pencil& p, long precision, std::pair<long, long> auxiliary);
/// For rational pencils, H(lambda A, lambda B) = |lambda| H(A, B) clears denominators.
GramMatrix reduction_covariant(const RationalPencil& p, long precision);
GramMatrix covariant_variant(const Pencil& p, CovariantVariant which, long precision);

struct DetIdentity {
  Real det_h;
  Real mahler;
  bool agree = false;
  Real tolerance;
};
DetIdentity det_identity_check(const Pencil& p, long precision);

}  // namespace pencils
