#include <random>

#include "doctest.h"
#include "pencils/covariant.hpp"
#include "pencils/errors.hpp"
#include "support.hpp"

using namespace pencils;
using namespace pencils::testing;

namespace {

constexpr long kPrec = 128;

double max_diff(const RealMatrix& a, const RealMatrix& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs((a(i, j) - b(i, j)).to_double()));
  return m;
}

void check_close(const GramMatrix& h, const std::vector<std::vector<double>>& want, double tol) {
  REQUIRE(h.n() == want.size());
  for (std::size_t i = 0; i < h.n(); ++i)
    for (std::size_t j = 0; j < h.n(); ++j) CHECK(h(i, j).to_double() == doctest::Approx(want[i][j]).epsilon(tol));
}

Pencil worked_orbit() {
  return Pencil(int_matrix({{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}}),
                int_matrix({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}}));
}

Pencil diag_example() { return diagonal_pencil({1, 1, 1, 1}, {2, 3, 0, -1}); }

}  // namespace

TEST_CASE("diagonal pencil covariant and variants") {
  Pencil p = diag_example();
  check_close(reduction_covariant(p, kPrec), {{2, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 1e-12);
  check_close(covariant_variant(p, CovariantVariant::R1, kPrec),
              {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 1e-12);
  try {
    covariant_variant(p, CovariantVariant::R2, kPrec);
    FAIL("expected SingularVariant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularVariant);
  }
  Pencil q = diagonal_pencil({2, -1, 3}, {5, 4, -1});
  for (auto which : {CovariantVariant::Max, CovariantVariant::R1, CovariantVariant::R2}) {
    GramMatrix h = covariant_variant(q, which, kPrec);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) CHECK(std::abs(h(i, j).to_double()) < 1e-20);
  }
}

TEST_CASE("simultaneous diagonalization") {
  DiagonalizingBasis b = simultaneous_diagonalize(worked_orbit(), kPrec);
  CHECK(b.residual.to_double() < 1e-30);
  for (std::size_t i = 0; i < 4; ++i) CHECK(abs(b.dA[i]).to_double() == doctest::Approx(abs(b.dB[i]).to_double()));

  Pencil rot(IntMatrix::identity(4), int_matrix({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, -3}}));
  b = simultaneous_diagonalize(rot, kPrec);
  CHECK(b.residual.to_double() < 1e-30);
  // Columns come in conjugate pairs or are real.
  for (std::size_t i = 0; i < 4; ++i) {
    bool closed = false;
    for (std::size_t j = 0; j < 4 && !closed; ++j) {
      double d = 0;
      for (std::size_t k = 0; k < 4; ++k) d = std::max(d, abs(b.P(k, i) - b.P(k, j).conj()).to_double());
      closed = d < 1e-25;
    }
    CHECK(closed);
  }
}

TEST_CASE("worked orbit covariant is the identity") {
  GramMatrix h = reduction_covariant(worked_orbit(), kPrec);
  check_close(h, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 1e-12);
  CHECK(h.error_bound.to_double() < 1e-20);
}

TEST_CASE("covariant matches an independent eigenvector oracle") {
  Pencil p(int_matrix({{2, 1, 0, -1}, {1, -3, 2, 0}, {0, 2, 1, 1}, {-1, 0, 1, 0}}),
           int_matrix({{0, 1, 1, 2}, {1, 1, 0, -1}, {1, 0, -2, 1}, {2, -1, 1, 3}}));
  check_close(reduction_covariant(p, kPrec),
              {{2.8238250505533884, 0.19144739518467746, 0.944451858797851, 0.538942283753121},
               {0.19144739518467746, 3.724335686088607, -3.299316622515083, -1.6822342572195788},
               {0.944451858797851, -3.299316622515083, 8.012192007892505, 5.986644212500445},
               {0.5389422837531211, -1.6822342572195788, 5.986644212500446, 6.421317938667393}},
              1e-9);
  Pencil q(int_matrix({{1, 2, 0}, {2, -1, 1}, {0, 1, 3}}), int_matrix({{2, 0, 1}, {0, 1, -1}, {1, -1, 0}}));
  check_close(reduction_covariant(q, kPrec),
              {{3.052845617874748, -0.42470817736318656, 2.1245798420692124},
               {-0.4247081773631865, 1.8639317512139473, -1.509436692009695},
               {2.1245798420692124, -1.5094366920096953, 5.1988207325594615}},
              1e-9);
}

TEST_CASE("determinant identity") {
  DetIdentity d = det_identity_check(diag_example(), kPrec);
  CHECK(d.agree);
  CHECK(d.det_h.to_double() == doctest::Approx(6));
  CHECK(d.mahler.to_double() == doctest::Approx(6));
  d = det_identity_check(worked_orbit(), kPrec);
  CHECK(d.agree);
  CHECK(d.det_h.to_double() == doctest::Approx(1));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    Pencil p = random_nondegenerate_pencil(rng, 4, 3);
    DetIdentity r = det_identity_check(p, kPrec);
    CHECK(r.agree);
  }
}

TEST_CASE("equivariance under unimodular change of basis") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + t % 2;
    Pencil p = random_nondegenerate_pencil(rng, n, 3);
    UnimodularMatrix g = random_unimodular(rng, n, 2, 4);
    GramMatrix h = reduction_covariant(p, kPrec);
    GramMatrix hg = reduction_covariant(act(g, p), kPrec);
    // g.H = g^{-T} H g^{-1}.
    GramMatrix expect = transform(h, g.inverse());
    double scale = max_abs(expect.entries).to_double();
    CHECK(max_diff(hg.entries, expect.entries) <= 1e-20 * scale);
  }
}

TEST_CASE("scale covariance and auxiliary independence") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    Pencil p = random_nondegenerate_pencil(rng, 4, 3);
    GramMatrix h = reduction_covariant(p, kPrec);
    const long lambda = (t % 2 ? -1 : 1) * (2 + t % 5);
    GramMatrix hl = reduction_covariant(Pencil(p.A.scaled(Integer(lambda)), p.B.scaled(Integer(lambda))), kPrec);
    CHECK(max_diff(hl.entries, h.entries.scaled(Real(static_cast<int>(std::abs(lambda)), kPrec))) <
          1e-20 * max_abs(hl.entries).to_double());

    BinaryForm f = invariant_form(p);
    int used = 0;
    for (auto rs : std::vector<std::pair<long, long>>{{0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 3}}) {
      if (f.evaluate(Integer(rs.second), Integer(-rs.first)) == 0) continue;
      GramMatrix h2 = reduction_covariant(p, kPrec, rs);
      CHECK(max_diff(h2.entries, h.entries) < 1e-20 * max_abs(h.entries).to_double());
      ++used;
    }
    CHECK(used >= 2);
  }
}

TEST_CASE("rational pencils clear denominators") {
  Pencil p(int_matrix({{1, 2, 0}, {2, -1, 1}, {0, 1, 3}}), int_matrix({{2, 0, 1}, {0, 1, -1}, {1, -1, 0}}));
  RationalPencil half(to_rational(p.A).scaled(Rational(1, 6)), to_rational(p.B).scaled(Rational(1, 6)));
  GramMatrix h = reduction_covariant(p, kPrec), hh = reduction_covariant(half, kPrec);
  CHECK(max_diff(hh.entries.scaled(Real(6.0, kPrec)), h.entries) < 1e-20);
}

TEST_CASE("degenerate pencils are rejected") {
  Pencil p = diagonal_pencil({1, 1, 1, 1}, {2, 2, 0, -1});
  CHECK_THROWS_AS(reduction_covariant(p, kPrec), Error);
  try {
    reduction_covariant(p, kPrec);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegeneratePencil);
  }
}
