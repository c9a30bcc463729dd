#include <random>

#include "doctest.h"
#include "pencils/covariant.hpp"
#include "pencils/errors.hpp"
#include "pencils/orbits.hpp"
#include "support.hpp"

using namespace pencils;
using namespace pencils::testing;

namespace {

constexpr long kPrec = 128;

BinaryForm quartic_x4_y4() { return BinaryForm::from_ints({1, 0, 0, 0, 1}); }
BinaryForm quartic_x4_3y4() { return BinaryForm::from_ints({1, 0, 0, 0, 3}); }

AlgebraElement element(const BinaryForm& f, std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return AlgebraElement(f, v);
}

std::vector<Rational> rationals(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return v;
}

std::vector<Rational> form_as_rationals(const BinaryForm& f) { return {f.coeffs.begin(), f.coeffs.end()}; }

}  // namespace

TEST_CASE("algebra arithmetic and tau") {
  BinaryForm f = quartic_x4_y4();
  AlgebraElement x = AlgebraElement::generator(f);
  CHECK(tau_functional(power(x, 3)) == 1);
  CHECK(tau_functional(power(x, 4)) == 0);
  CHECK(power(x, 4) == AlgebraElement::constant(f, -1));
  CHECK(tau_functional(power(x, 7)) == -1);
  CHECK(norm(x) == 1);
  CHECK(norm(element(quartic_x4_3y4(), {-1, 1})) == 4);
  CHECK(norm(AlgebraElement::constant(f, 1)) == 1);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    BinaryForm g(std::vector<Integer>{2, 1, -3, 1, 5});
    AlgebraElement a = random_element(rng, g, 4), b = random_element(rng, g, 4);
    CHECK(norm(a * b) == norm(a) * norm(b));
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == AlgebraElement::constant(g, 1));
  }
  // Zero divisors in a split algebra have no inverse.
  BinaryForm split = BinaryForm::from_ints({1, 0, -1});
  CHECK_FALSE(inverse(element(split, {1, 1})));
}

TEST_CASE("datum validation") {
  OrbitDatum d{quartic_x4_y4(), AlgebraElement::generator(quartic_x4_y4()), Rational(1)};
  CHECK(validate_datum(d));
  d.z = 2;
  CHECK_FALSE(validate_datum(d));
  OrbitDatum e{quartic_x4_3y4(), element(quartic_x4_3y4(), {-1, 1}), Rational(1, 2)};
  CHECK(validate_datum(e));
}

TEST_CASE("worked orbit pencil") {
  OrbitDatum d{quartic_x4_y4(), AlgebraElement::generator(quartic_x4_y4()), Rational(1)};
  DatumPencil dp = pencil_from_datum(d);
  REQUIRE(dp.pencil.integral());
  Pencil p = dp.pencil.to_integral();
  CHECK(p.A == int_matrix({{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}}));
  CHECK(p.B == int_matrix({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}}));
  CHECK(dp.one_bar == rationals({1, 0, 0, 0}));
  CHECK(invariant_form(p).coeffs == quartic_x4_y4().coeffs);
  d.z = 3;
  CHECK_THROWS_AS(pencil_from_datum(d), Error);
}

TEST_CASE("binary quadratic oracle") {
  for (long f1 = -3; f1 <= 3; ++f1)
    for (long f2 = -3; f2 <= 3; ++f2) {
      BinaryForm f = BinaryForm::from_ints({1, f1, f2});
      DatumPencil dp = pencil_from_datum({f, AlgebraElement::constant(f, 1), Rational(1)});
      Pencil p = dp.pencil.to_integral();
      CHECK(p.A == int_matrix({{0, 1}, {1, -f1}}));
      CHECK(p.B == int_matrix({{1, -f1}, {-f1, f1 * f1 - f2}}));
      CHECK(invariant_form(p).coeffs == f.coeffs);
    }
}

TEST_CASE("round trip of random data") {
  std::mt19937_64 rng(31);
  for (int n : {4, 6}) {
    for (int t = 0; t < (n == 4 ? 100 : 20); ++t) {
      BinaryForm f = random_monic(rng, n, 5);
      AlgebraElement beta = random_element(rng, f, 3);
      OrbitDatum d{f, beta * beta, Rational(1) / norm(beta)};
      REQUIRE(validate_datum(d));
      CHECK(invariant_form(pencil_from_datum(d).pencil) == form_as_rationals(f));
    }
  }
}

TEST_CASE("equivalent data give congruent pencils") {
  std::mt19937_64 rng(41);
  // f_0 = 4 makes f_0^5 = 32^2 a square, so alpha = gamma^2 and z = 32 / N(gamma) is a datum.
  BinaryForm f(std::vector<Integer>{4, -1, 0, 3, 1});
  for (int t = 0; t < 20; ++t) {
    AlgebraElement gamma = random_element(rng, f, 3);
    OrbitDatum d{f, gamma * gamma, Rational(32) / norm(gamma)};
    REQUIRE(validate_datum(d));
    AlgebraElement beta = random_element(rng, f, 2);
    OrbitDatum e{f, beta * beta * d.alpha, d.z / norm(beta)};
    REQUIRE(validate_datum(e));
    RationalPencil p = pencil_from_datum(d).pencil, q = pencil_from_datum(e).pencil;
    // Multiplication by beta, from the basis (z', X, ...) to the basis (z, X, ...).
    const std::size_t n = 4;
    RatMatrix to_power = to_rational(IntMatrix::identity(n)), from_power = to_power;
    to_power(0, 0) = e.z;
    from_power(0, 0) = Rational(1) / d.z;
    RatMatrix g = from_power * multiplication_matrix(beta) * to_power;
    CHECK(determinant(g) == 1);
    CHECK(g.transpose() * p.A * g == q.A);
    CHECK(g.transpose() * p.B * g == q.B);
    GramMatrix hp = reduction_covariant(p, kPrec), hq = reduction_covariant(q, kPrec);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> col = g.column(i);
      CHECK(quadratic_value(hp, col).to_double() == doctest::Approx(hq(i, i).to_double()).epsilon(1e-12));
    }
  }
}

TEST_CASE("divisor data") {
  DivisorSpec a{quartic_x4_y4(), BinaryForm::from_ints({1, 0}), Rational(1)};
  CHECK(a.affine_count() == 1);
  OrbitDatum d = datum_from_divisor(a);
  CHECK(d.alpha == AlgebraElement::generator(quartic_x4_y4()));
  CHECK(d.z == 1);

  DivisorSpec b = divisor_from_point(quartic_x4_3y4(), Integer(1), Integer(1), Integer(2));
  CHECK(b.U.coeffs == BinaryForm::from_ints({1, -1}).coeffs);
  CHECK(b.w == 2);
  d = datum_from_divisor(b);
  CHECK(d.alpha == element(quartic_x4_3y4(), {-1, 1}));
  CHECK(d.z == Rational(1, 2));

  BinaryForm split = BinaryForm::from_ints({1, 0, 0, 0, -1});
  try {
    datum_from_divisor({split, BinaryForm::from_ints({1, -1}), Rational(1)});
    FAIL("expected DivisorMeetsWeierstrass");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisorMeetsWeierstrass);
  }
  try {
    datum_from_divisor({quartic_x4_3y4(), BinaryForm::from_ints({1, -1}), Rational(3)});
    FAIL("expected InconsistentW");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InconsistentW);
  }
  CHECK_THROWS_AS(datum_from_divisor({quartic_x4_3y4(), BinaryForm::from_ints({2, -2}), Rational(8)}), Error);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    DivisorSpec ds = random_point_divisor(rng, 6);
    CHECK(validate_datum(datum_from_divisor(ds)));
  }
}

TEST_CASE("norm of one formula") {
  DivisorSpec a{quartic_x4_y4(), BinaryForm::from_ints({1, 0}), Rational(1)};
  Estimate e = norm_of_one_formula(a, kPrec);
  CHECK(e.value.to_double() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(e.error.to_double() < 1e-20);
  DivisorSpec b = divisor_from_point(quartic_x4_3y4(), Integer(1), Integer(1), Integer(2));
  e = norm_of_one_formula(b, kPrec);
  CHECK(std::abs(e.value.to_double() - 0.8880738339771152) < 1e-15);

  for (const DivisorSpec& ds : {a, b}) {
    DatumPencil dp = pencil_from_datum(datum_from_divisor(ds));
    GramMatrix h = reduction_covariant(dp.pencil, kPrec);
    CHECK(std::abs(quadratic_value(h, dp.one_bar).to_double() - norm_of_one_formula(ds, kPrec).value.to_double()) <
          1e-12);
  }
  for (const auto& t : norm_of_one_terms(a, kPrec)) {
    CHECK(t.boundary);
    CHECK(std::abs((t.inside_chart - t.outside_chart).to_double()) < 1e-25);
  }

  std::mt19937_64 rng(19);
  for (int t = 0; t < 50; ++t) {
    DivisorSpec ds = random_point_divisor(rng, 6);
    DatumPencil dp = pencil_from_datum(datum_from_divisor(ds));
    GramMatrix h = reduction_covariant(dp.pencil, kPrec);
    Estimate formula = norm_of_one_formula(ds, kPrec);
    Real lhs = quadratic_value(h, dp.one_bar);
    CHECK(abs(lhs - formula.value).to_double() < 1e-12 * std::max(1.0, formula.value.to_double()));
  }
}

TEST_CASE("integralize") {
  Pencil worked(int_matrix({{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}}),
                int_matrix({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}}));
  IntegralRepresentative same = integralize(RationalPencil(worked));
  CHECK(same.pencil == worked);

  DivisorSpec b = divisor_from_point(quartic_x4_3y4(), Integer(1), Integer(1), Integer(2));
  DatumPencil dp = pencil_from_datum(datum_from_divisor(b));
  REQUIRE_FALSE(dp.pencil.integral());
  for (bool hint : {true, false}) {
    IntegralRepresentative r = hint ? integralize(dp.pencil, dp.one_bar) : integralize(dp.pencil);
    CHECK(invariant_form(r.pencil).coeffs == quartic_x4_3y4().coeffs);
    CHECK(determinant(r.basis) == 1);
    CHECK(act(*inverse(r.basis), dp.pencil) == RationalPencil(r.pencil));
    if (hint) {
      for (const auto& c : r.one_bar) CHECK(c.get_den() == 1);
      CHECK(content(std::vector<Integer>(r.one_bar.begin(), r.one_bar.end())) == 1);
    }
  }

  RationalPencil bad(to_rational(IntMatrix::identity(2)).scaled(Rational(1, 2)), to_rational(IntMatrix::identity(2)));
  CHECK_THROWS_AS(integralize(bad), Error);

  std::mt19937_64 rng(23);
  int ok = 0;
  for (int t = 0; t < 50; ++t) {
    DivisorSpec ds = random_point_divisor(rng, 6);
    DatumPencil d = pencil_from_datum(datum_from_divisor(ds));
    try {
      IntegralRepresentative r = integralize(d.pencil, d.one_bar);
      CHECK(invariant_form(r.pencil).coeffs == ds.f.coeffs);
      ++ok;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotFound);
    }
  }
  MESSAGE("integralized ", ok, " of 50");
  CHECK(ok >= 45);
}
