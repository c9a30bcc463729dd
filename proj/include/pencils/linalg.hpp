#pragma once

#include <optional>
#include <vector>

#include "pencils/real.hpp"

namespace pencils {

/// Determinant by Gaussian elimination with partial pivoting.
Real determinant(const RealMatrix& m);
std::optional<RealMatrix> inverse(const RealMatrix& m);
std::optional<ComplexMatrix> inverse(const ComplexMatrix& m);

/// Kernel vector of a complex matrix of corank one, by complete pivoting.
/// The largest coordinate is scaled to 1.
std::vector<Complex> null_vector(const ComplexMatrix& m);

/// H = L diag(d) L^T with L unit lower triangular; empty when H is not positive definite.
struct LdlFactors {
  RealMatrix L;
  std::vector<Real> d;
};
std::optional<LdlFactors> ldl(const RealMatrix& h);

/// g^T h g.
RealMatrix congruence(const IntMatrix& g, const RealMatrix& h);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace pencils
