#pragma once

#include <random>
#include <vector>

#include "pencils/covariant.hpp"
#include "pencils/orbits.hpp"
#include "pencils/pencil.hpp"

namespace pencils::testing {

inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline Pencil diagonal_pencil(const std::vector<long>& a, const std::vector<long>& b) {
  IntMatrix A(a.size(), a.size(), Integer(0)), B(a.size(), a.size(), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    A(i, i) = a[i];
    B(i, i) = b[i];
  }
  return Pencil(A, B);
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = m(j, i) = dist(rng);
  return m;
}

inline Pencil random_pencil(std::mt19937_64& rng, std::size_t n, long bound) {
  return Pencil(random_symmetric(rng, n, bound), random_symmetric(rng, n, bound));
}

inline Pencil random_nondegenerate_pencil(std::mt19937_64& rng, std::size_t n, long bound) {
  for (;;) {
    Pencil p = random_pencil(rng, n, bound);
    if (pencil_discriminant(p) != 0) return p;
  }
}

/// Product of random elementary matrices and a sign change; determinant +-1.
inline UnimodularMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, long bound, int steps = 8) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  IntMatrix g = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    long c = dist(rng);
    for (std::size_t k = 0; k < n; ++k) g(i, k) += c * g(j, k);
  }
  if (rng() % 2) g.swap_rows(0, n - 1);
  return UnimodularMatrix(g);
}

/// Diagonal Gram matrix moved by a random unimodular change of basis.
inline GramMatrix planted_gram(std::mt19937_64& rng, const std::vector<double>& diag, long precision) {
  IntMatrix ginv = random_unimodular(rng, diag.size(), 3, 10).inverse();
  return transform(GramMatrix::diagonal(diag, precision), ginv);
}

inline BinaryForm random_monic(std::mt19937_64& rng, int n, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Integer> c{Integer(1)};
  for (int i = 1; i <= n; ++i) c.emplace_back(dist(rng));
  if (c.back() == 0) c.back() = 1;
  return BinaryForm(c);
}

inline AlgebraElement random_element(std::mt19937_64& rng, const BinaryForm& f, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    std::vector<Rational> c;
    for (int i = 0; i < f.degree(); ++i) c.emplace_back(dist(rng));
    AlgebraElement a(f, c);
    if (norm(a) != 0) return a;
  }
}

/// Quartic through (a : 1 : b) or (1 : c : b), with the coefficient of the free monomial solved for.
inline DivisorSpec random_point_divisor(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> coef(-bound, bound), small(-3, 3), yval(1, 6);
  for (;;) {
    std::vector<Integer> c;
    for (int i = 0; i < 5; ++i) c.emplace_back(coef(rng));
    const bool affine = rng() % 2;
    const long t = small(rng), b = yval(rng);
    // Solve for f_4 at (t : 1) or for f_0 at (1 : t).
    const std::size_t free = affine ? 4 : 0;
    c[free] = 0;
    Integer value = BinaryForm(c).evaluate(affine ? Integer(t) : Integer(1), affine ? Integer(1) : Integer(t));
    c[free] = Integer(b * b) - value;
    BinaryForm f(c);
    if (f.coeffs[0] == 0 || discriminant(f) == 0) continue;
    if (affine) return divisor_from_point(f, Integer(t), Integer(1), Integer(b));
    if (t == 0) continue;
    return divisor_from_point(f, Integer(1), Integer(t), Integer(b));
  }
}

}  // namespace pencils::testing
