#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "pencils/covariant.hpp"
#include "pencils/equidist.hpp"
#include "pencils/errors.hpp"
#include "pencils/heights.hpp"
#include "pencils/orbits.hpp"
#include "pencils/reduce.hpp"
#include "support.hpp"

using namespace pencils;
using namespace pencils::testing;

namespace {

constexpr long kPrec = 128;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> check;
};

template <class... T>
std::string cat(const T&... parts) {
  std::ostringstream s;
  (s << ... << parts);
  return s.str();
}

BinaryForm nondegenerate_monic(std::mt19937_64& rng, int n) {
  for (;;) {
    BinaryForm f = random_monic(rng, n, 5);
    if (discriminant(f) != 0) return f;
  }
}

Outcome worked_orbit() {
  BinaryForm f = BinaryForm::from_ints({1, 0, 0, 0, 1});
  DatumPencil dp = pencil_from_datum({f, AlgebraElement::generator(f), Rational(1)});
  Pencil expected(int_matrix({{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}}),
                  int_matrix({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}}));
  bool matrices = dp.pencil == RationalPencil(expected);
  bool form = invariant_form(expected) == f;
  return {matrices && form, cat("matrices ", matrices ? "exact" : "differ", ", form ", form ? "exact" : "differs")};
}

Outcome round_trip() {
  std::mt19937_64 rng(101);
  int ok = 0, total = 0;
  for (auto [n, cases] : {std::pair{4, 200}, std::pair{6, 50}}) {
    for (int t = 0; t < cases; ++t, ++total) {
      BinaryForm f = nondegenerate_monic(rng, n);
      AlgebraElement beta = random_element(rng, f, 3);
      OrbitDatum d{f, beta * beta, Rational(1) / norm(beta)};
      std::vector<Rational> expected(f.coeffs.begin(), f.coeffs.end());
      ok += validate_datum(d) && invariant_form(pencil_from_datum(d).pencil) == expected;
    }
  }
  return {ok == total, cat(ok, "/", total, " exact")};
}

Outcome det_identity() {
  std::mt19937_64 rng(102);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    Pencil p = random_nondegenerate_pencil(rng, 4, 3);
    Real det = determinant(reduction_covariant(p, kPrec));
    Real mahler = mahler_measure(invariant_form(p), kPrec).value;
    worst = std::max(worst, (abs(det - mahler) / mahler).to_double());
  }
  return {worst <= 1e-9, cat("max relative deviation ", worst)};
}

Outcome equivariance() {
  std::mt19937_64 rng(103);
  double worst = 0;
  for (int t = 0; t < 200; ++t) {
    Pencil p = random_nondegenerate_pencil(rng, 4, 3);
    UnimodularMatrix g = random_unimodular(rng, 4, 2);
    GramMatrix hp = reduction_covariant(p, kPrec);
    GramMatrix moved = reduction_covariant(act(g, p), kPrec);
    GramMatrix predicted = transform(hp, g.inverse());
    RealMatrix diff = moved.entries;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 4; ++k) diff(i, k) = moved(i, k) - predicted(i, k);
    worst = std::max(worst, (max_abs(diff) / max_abs(hp.entries)).to_double());
  }
  return {worst <= 1e-9, cat("max deviation / |H_p| = ", worst)};
}

double norm_gap(const DivisorSpec& ds) {
  DatumPencil dp = pencil_from_datum(datum_from_divisor(ds));
  Real direct = quadratic_value(reduction_covariant(dp.pencil, kPrec), dp.one_bar);
  return abs(direct - norm_of_one_formula(ds, kPrec).value).to_double();
}

Outcome norm_formula() {
  DivisorSpec a{BinaryForm::from_ints({1, 0, 0, 0, 1}), BinaryForm::from_ints({1, 0}), Rational(1)};
  DivisorSpec b = divisor_from_point(BinaryForm::from_ints({1, 0, 0, 0, 3}), Integer(1), Integer(1), Integer(2));
  double va = norm_of_one_formula(a, kPrec).value.to_double(), vb = norm_of_one_formula(b, kPrec).value.to_double();
  bool closed = std::abs(va - 1) <= 1e-8 && std::abs(vb - 0.8880738339771152) <= 1e-8;
  double worst = std::max(norm_gap(a), norm_gap(b));
  std::mt19937_64 rng(104);
  int done = 0;
  while (done < 50) {
    DivisorSpec ds = random_point_divisor(rng, 6);
    if (is_irreducible(ds.f) != Tristate::True) continue;
    worst = std::max(worst, norm_gap(ds));
    ++done;
  }
  return {closed && worst <= 1e-8,
          cat("examples ", va, ", ", vb, "; max gap ", worst, " over 52 divisors")};
}

Outcome divisor_validity() {
  std::mt19937_64 rng(105);
  int ok = 0;
  for (int t = 0; t < 100; ++t) ok += validate_datum(datum_from_divisor(random_point_divisor(rng, 6)));
  return {ok == 100, cat(ok, "/100 valid")};
}

/// Success only when the representative is integral and really lies in the orbit.
bool integralized(const DivisorSpec& ds, int& not_found, int& wrong) {
  DatumPencil dp = pencil_from_datum(datum_from_divisor(ds));
  try {
    IntegralRepresentative r = integralize(dp.pencil, dp.one_bar);
    auto inv = inverse(r.basis);
    bool good = inv && determinant(r.basis) == 1 && act(*inv, dp.pencil) == RationalPencil(r.pencil) &&
                invariant_form(r.pencil).coeffs == ds.f.coeffs;
    wrong += !good;
    return good;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotFound) ++not_found;
    else ++wrong;
    return false;
  }
}

Outcome integralization() {
  int not_found = 0, wrong = 0;
  bool example = integralized(
      divisor_from_point(BinaryForm::from_ints({1, 0, 0, 0, 3}), Integer(1), Integer(1), Integer(2)), not_found, wrong);
  std::mt19937_64 rng(106);
  int ok = 0;
  for (int t = 0; t < 50; ++t) ok += integralized(random_point_divisor(rng, 6), not_found, wrong);
  return {example && ok >= 45 && wrong == 0,
          cat("example ", example ? "ok" : "failed", ", random ", ok, "/50, NotFound ", not_found, ", wrong ", wrong)};
}

Outcome inequality_suite() {
  int violations = 0, instances = 0;
  double worst = 0;
  for (double X : {10.0, 100.0}) {
    FamilyParams fp{X, 0.3};
    for (const DivisorSpec& ds : sample_family_points(fp, 50, 107)) {
      BoundCheck prop = prop_bound_check(ds.f, ds.U, fp, kPrec);
      BoundCheck vec = vector_length_bound_check(ds, fp, kPrec);
      violations += !prop.holds + !vec.holds;
      worst = std::max(worst, abs(prop.lhs - vec.lhs).to_double());
      ++instances;
    }
  }
  return {instances == 100 && violations == 0 && worst <= 1e-6,
          cat(instances, " instances, ", violations, " violations, max lhs gap ", worst)};
}

Outcome cusp_implication() {
  std::mt19937_64 rng(108);
  std::uniform_real_distribution<double> dist(0.5, 2.0);
  int small = 0, counter = 0;
  for (int t = 0; t < 200; ++t) {
    const double s = 0.02 + 0.005 * (t % 100);
    GramMatrix h = planted_gram(rng, {s * s, dist(rng), dist(rng), dist(rng)}, kPrec);
    GramMatrix reduced = transform(h, lll_gram(h, Rational(1), kPrec));
    for (double eps : {0.1, 0.2, 0.4, 0.8}) {
      if (!epsilon_small_test(reduced, eps)) continue;
      ++small;
      counter += !cusp_membership(reduced, eps);
    }
  }
  return {counter == 0 && small > 0, cat(small, " small (matrix, eps) pairs, ", counter, " counterexamples")};
}

Outcome mu_decay() {
  SampleBatch batch = sample_pencils(4, 3, 10000, 2024);
  std::vector<double> eps = {0.8, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1, 0.05};
  std::vector<FrequencyRow> rows = small_vector_frequency(batch, eps);
  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i) monotone &= rows[i].frequency <= rows[i - 1].frequency;
  bool decay = rows.back().frequency < rows.front().frequency;
  return {monotone && decay, cat("freq(0.8) = ", rows.front().frequency, ", freq(0.05) = ", rows.back().frequency,
                                 monotone ? ", monotone" : ", not monotone")};
}

Outcome stabilizers() {
  bool ok = stabilizer_order(0, 4) == 4 && stabilizer_order(2, 4) == 8 && stabilizer_order(1, 6) == 8;
  return {ok, cat("(0,4) -> ", stabilizer_order(0, 4).get_str(), ", (2,4) -> ", stabilizer_order(2, 4).get_str(),
                  ", (1,6) -> ", stabilizer_order(1, 6).get_str())};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"worked orbit exactness", 1, worked_orbit},
      {"round-trip invariance", 120, round_trip},
      {"determinant identity", 120, det_identity},
      {"equivariance", 120, equivariance},
      {"norm formula agreement", 300, norm_formula},
      {"divisor datum validity", 60, divisor_validity},
      {"integralization", 600, integralization},
      {"inequality suite", 600, inequality_suite},
      {"cusp implication", 60, cusp_implication},
      {"small vector frequency decay", 600, mu_decay},
      {"stabilizer orders", 1, stabilizers},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, cat("threw: ", e.what())};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds < c.limit_seconds;
    bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s  %-30s %s; %.2fs (limit %.0fs)\n", pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), seconds,
                c.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
