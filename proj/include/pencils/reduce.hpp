#pragma once

#include <vector>

#include "pencils/covariant.hpp"

namespace pencils {

struct ReductionResult {
  /// The change of basis: reduced = act(g, original).
  UnimodularMatrix g;
  Pencil reduced;
  /// g^{-T} H g^{-1}, i.e. the Gram matrix of the reduced basis.
  GramMatrix gram_reduced;
  int det_g = 1;
};

/// Integral LLL on a Gram matrix. Returns U whose columns form the reduced basis.
/// delta is a rational in (1/4, 1].
IntMatrix lll_gram(const IntMatrix& gram, const Rational& delta);
/// LLL on a rounding of H to 2^-precision relative accuracy.
IntMatrix lll_gram(const GramMatrix& h, const Rational& delta, long precision);
/// Size reduction and the Lovasz condition, each allowed a relative slack tol.
bool is_lll_reduced(const GramMatrix& h, const Rational& delta, double tol = 1e-9);

/// With sl_normalize, a basis of determinant -1 has its first vector negated.
ReductionResult lll_reduce(const Pencil& p, const Rational& delta, long precision, bool sl_normalize = false);

struct ShortVector {
  std::vector<Integer> v;
  Real norm;
};
/// Minimum of (v,v)_H over nonzero integral v. Among tied minimizers with first nonzero
/// coordinate positive, the lexicographically greatest is returned.
ShortVector shortest_vector(const GramMatrix& h);
/// sqrt(min (v,v)_H) / det(H)^(1/2n).
Real shortest_vector_ratio(const GramMatrix& h);
bool epsilon_small_test(const GramMatrix& h, double eps);

struct IwasawaCoordinates {
  /// Diagonal of the torus part, with product 1.
  std::vector<Real> t;
  /// Strictly upper unipotent part; nu(i, j) for i < j.
  RealMatrix nu;
  bool satisfies_siegel = false;
};

/// Default Siegel constant sqrt(3)/2.
double default_siegel_constant();
/// The det-1 rescaling of H written as g^{-T} g^{-1} with g = nu * diag(t).
IwasawaCoordinates iwasawa_coordinates(const GramMatrix& h, double c = default_siegel_constant());
/// nu diag(t), then g^{-T} g^{-1}.
RealMatrix gram_from_iwasawa(const IwasawaCoordinates& w);
bool cusp_membership(const GramMatrix& h, double eps, double c = default_siegel_constant());

/// Order of the stabiliser in SL_n(R) of a point in the component with m complex pairs.
Integer stabilizer_order(long m, long n);

}  // namespace pencils
