#include <random>

#include "doctest.h"
#include "pencils/errors.hpp"
#include "pencils/pencil.hpp"
#include "support.hpp"

using namespace pencils;
using namespace pencils::testing;

namespace {

// Laplace expansion of det(A t - B) over Z[t], independent of the interpolation path.
poly::ZPoly cofactor_det(const std::vector<std::vector<poly::ZPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  poly::ZPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<poly::ZPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<poly::ZPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    poly::ZPoly term = poly::mul(m[0][j], cofactor_det(minor));
    acc = (j % 2 == 0) ? poly::add(acc, term) : poly::sub(acc, term);
  }
  return acc;
}

BinaryForm symbolic_form(const Pencil& p) {
  const std::size_t n = p.n();
  std::vector<std::vector<poly::ZPoly>> m(n, std::vector<poly::ZPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = {-p.B(i, j), p.A(i, j)};
      poly::trim(m[i][j]);
    }
  poly::ZPoly d = cofactor_det(m);
  if ((n * (n - 1) / 2) % 2 == 1) d = poly::scale(d, Integer(-1));
  return homogenize(d, static_cast<int>(n));
}

}  // namespace

TEST_CASE("pencil construction validates symmetry and shape") {
  CHECK_THROWS_AS(Pencil(int_matrix({{1, 2}, {3, 4}}), int_matrix({{1, 0}, {0, 1}})), Error);
  CHECK_THROWS_AS(Pencil(int_matrix({{1, 0}, {0, 1}}), IntMatrix::identity(3)), Error);
}

TEST_CASE("unimodular matrices") {
  CHECK(UnimodularMatrix(int_matrix({{2, 1}, {1, 1}})).det() == 1);
  CHECK(UnimodularMatrix(int_matrix({{0, 1}, {1, 0}})).det() == -1);
  CHECK_THROWS_AS(UnimodularMatrix(int_matrix({{2, 0}, {0, 1}})), Error);
}

TEST_CASE("action examples") {
  Pencil p = diagonal_pencil({1, 1, 1, 1}, {2, 3, 0, -1});
  CHECK(act(UnimodularMatrix::identity(4), p) == p);
  UnimodularMatrix flip(int_matrix({{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(act(flip, p) == p);
  CHECK_THROWS_AS(act(UnimodularMatrix::identity(3), p), Error);
}

TEST_CASE("action is a group action and preserves symmetry") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    Pencil p = random_pencil(rng, 4, 5);
    UnimodularMatrix g = random_unimodular(rng, 4, 3);
    UnimodularMatrix h = random_unimodular(rng, 4, 3);
    Pencil q = act(g, p);
    CHECK(q.A.symmetric());
    CHECK(q.B.symmetric());
    CHECK(act(g, act(h, p)) == act(g * h, p));
    CHECK(invariant_form(q) == invariant_form(p));
  }
}

TEST_CASE("invariant form examples") {
  Pencil p = diagonal_pencil({1, 1, 1, 1}, {2, 3, 0, -1});
  CHECK(invariant_form(p) == BinaryForm::from_ints({1, -4, 1, 6, 0}));
  CHECK(pencil_discriminant(p) != 0);
  CHECK(pencil_discriminant(p) == discriminant(BinaryForm::from_ints({1, -4, 1, 6, 0})));
  CHECK(pencil_discriminant(diagonal_pencil({1, 1, 1, 1}, {1, 1, 1, 1})) == 0);
  CHECK(invariant_form(diagonal_pencil({1, 1, 1, 1}, {1, 1, 1, 1})) == BinaryForm::from_ints({1, -4, 6, -4, 1}));

  Pencil worked(int_matrix({{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}}),
                int_matrix({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}}));
  CHECK(invariant_form(worked) == BinaryForm::from_ints({1, 0, 0, 0, 1}));
}

TEST_CASE("interpolation agrees with symbolic cofactor expansion") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    Pencil p = random_pencil(rng, 4, 9);
    CHECK(invariant_form(p) == symbolic_form(p));
  }
  for (int trial = 0; trial < 10; ++trial) {
    Pencil p = random_pencil(rng, 3, 9);
    CHECK(invariant_form(p) == symbolic_form(p));
  }
}

TEST_CASE("rational pencils and rational action") {
  std::mt19937_64 rng(3);
  Pencil p = random_pencil(rng, 4, 4);
  RationalPencil rp(p);
  auto f = invariant_form(rp);
  BinaryForm fi = invariant_form(p);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i] == Rational(fi.coeffs[i]));
  RatMatrix g = to_rational(IntMatrix::identity(4));
  g(0, 0) = Rational(1, 2);
  g(3, 3) = 2;
  g(1, 2) = Rational(3, 7);
  auto f2 = invariant_form(act(g, rp));
  CHECK(f2 == f);
}
