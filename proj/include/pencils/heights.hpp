#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pencils/forms.hpp"
#include "pencils/orbits.hpp"

namespace pencils {

/// Cutoff X and discriminant slack delta of the family F_delta(X).
struct FamilyParams {
  double X = 0;
  double delta = 0;
};

/// log max |u_i| of a primitive form.
Real divisor_height(const BinaryForm& U, long precision = 128);

/// |h(U) - log M(minpoly)| <= m log 2, with m = deg minpoly.
bool point_height_bound_check(const BinaryForm& minpoly, const BinaryForm& U, long precision = 128);

/// Irreducible with |disc f| >= X^(2n-2-delta). Throws HeightExceedsCutoff when Ht(f) > X.
bool family_membership(const BinaryForm& f, const FamilyParams& fp);

/// n log(n(m+1) 2^((n-1)^2)) + (n(2n-3) - 1) log(n(n+1)) / 2.
Real kappa_constant(int n, int m, long precision = 128);

struct BoundCheck {
  Real lhs;
  Real rhs;
  /// Certified numeric error in lhs.
  Real error;
  bool holds = false;
  std::vector<std::string> flags;
};

/// n log(sum over roots) - log|c| against n h(U) - (n+1) log X + n delta log X + kappa_{n,m}.
BoundCheck prop_bound_check(const BinaryForm& f, const BinaryForm& U, const FamilyParams& fp, long precision = 128);

/// n log (1,1)_H - log det H for the pencil built from the divisor, against the same right hand side
/// with m = 2g - 1.
BoundCheck vector_length_bound_check(const DivisorSpec& ds, const FamilyParams& fp, long precision = 128);

/// Quartics in F_delta(X) carrying a rational point (t : 1 : b) or (1 : t : b), one per item index.
/// The point is planted by solving for the coefficient of y^4 or x^4.
std::vector<DivisorSpec> sample_family_points(const FamilyParams& fp, std::size_t count, std::uint64_t seed);

}  // namespace pencils
