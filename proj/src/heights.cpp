#include "pencils/heights.hpp"

#include <cmath>

#include "pencils/covariant.hpp"
#include "pencils/errors.hpp"
#include "pencils/random.hpp"

namespace pencils {

namespace {

const Real& additive_tolerance() {
  static const Real tol(1e-9, 64);
  return tol;
}

void require_family(const BinaryForm& f, const FamilyParams& fp) {
  if (!family_membership(f, fp)) throw Error(ErrorKind::PreconditionViolation, "f is not in the family F_delta(X)");
}

Real right_hand_side(int n, int m, const Real& hU, const FamilyParams& fp, long prec) {
  const Real logx = log(Real(fp.X, prec));
  const Real nn(n, prec);
  return nn * hU - Real(n + 1, prec) * logx + nn * Real(fp.delta, prec) * logx + kappa_constant(n, m, prec);
}

}  // namespace

Real divisor_height(const BinaryForm& U, long precision) {
  if (U.is_zero() || content(U.coeffs) != 1) throw Error(ErrorKind::NotPrimitive, "U must be primitive");
  return log(Real(height(U), precision));
}

bool point_height_bound_check(const BinaryForm& minpoly, const BinaryForm& U, long precision) {
  const int m = minpoly.degree();
  Real hD = divisor_height(U, precision);
  Estimate mm = mahler_measure(minpoly, precision);
  Real weil = log(mm.value);
  Real slack = mm.error / mm.value + additive_tolerance();
  return abs(hD - weil) <= Real(m, precision) * log(Real(2, precision)) + slack;
}

bool family_membership(const BinaryForm& f, const FamilyParams& fp) {
  if (!(fp.X > 0) || !(fp.delta >= 0) || !(fp.delta < 1)) throw Error(ErrorKind::RangeError, "need X > 0, 0 <= delta < 1");
  if (Real(height(f), 128) > Real(fp.X, 128)) throw Error(ErrorKind::HeightExceedsCutoff, "Ht(f) exceeds X");
  const int n = f.degree();
  Integer disc = discriminant(f);
  if (disc == 0) return false;
  // Threshold rounded upward so that borderline discriminants are rejected.
  const long prec = 256;
  Real threshold = pow(Real(fp.X, prec), Real(2 * n - 2, prec) - Real(fp.delta, prec));
  threshold *= Real(1, prec) + Real::pow2(-200, prec);
  if (Real(Integer(abs(disc)), prec) < threshold) return false;
  return is_irreducible(f) == Tristate::True;
}

Real kappa_constant(int n, int m, long precision) {
  if (n < 2 || m < 1) throw Error(ErrorKind::RangeError, "kappa needs n >= 2 and m >= 1");
  const Real nn(n, precision);
  Real first = nn * (log(Real(n * (m + 1), precision)) + Real((n - 1) * (n - 1), precision) * log(Real(2, precision)));
  Real second = Real(n * (2 * n - 3) - 1, precision) * log(Real(n * (n + 1), precision)) / Real(2, precision);
  return first + second;
}

BoundCheck prop_bound_check(const BinaryForm& f, const BinaryForm& U, const FamilyParams& fp, long precision) {
  require_family(f, fp);
  const int n = f.degree();
  Estimate sum = norm_of_one_formula(DivisorSpec{f, U, Rational(1)}, precision);
  Estimate c = mahler_measure(f, precision);
  BoundCheck out;
  out.lhs = Real(n, precision) * log(sum.value) - log(c.value);
  out.error = Real(n, precision) * sum.error / sum.value + c.error / c.value;
  out.rhs = right_hand_side(n, U.degree(), divisor_height(U, precision), fp, precision);
  out.holds = out.lhs <= out.rhs + additive_tolerance() + out.error;
  return out;
}

BoundCheck vector_length_bound_check(const DivisorSpec& ds, const FamilyParams& fp, long precision) {
  require_family(ds.f, fp);
  const int n = ds.f.degree();
  const int g = (n - 2) / 2;
  DatumPencil dp = pencil_from_datum(datum_from_divisor(ds));
  BoundCheck out;
  GramMatrix h;
  std::vector<Rational> w = dp.one_bar;
  try {
    IntegralRepresentative r = integralize(dp.pencil, dp.one_bar);
    h = reduction_covariant(r.pencil, precision);
    w = r.one_bar;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotFound) throw;
    out.flags.push_back("integralize_not_found");
    h = reduction_covariant(dp.pencil, precision);
  }
  const long prec = h(0, 0).precision();
  Real q = quadratic_value(h, w);
  Real det = determinant(h);
  Real l1(0.0, prec);
  for (const auto& c : w) l1 += abs(Real(c, prec));
  auto hinv = inverse(h.entries);
  const Real nn(n, prec);
  Real det_rel = nn * nn * h.error_bound * (hinv ? max_abs(*hinv) : Real(0.0, prec));
  out.lhs = nn * log(q) - log(det);
  out.error = nn * h.error_bound * l1 * l1 / q + det_rel;
  out.rhs = right_hand_side(n, 2 * g - 1, divisor_height(ds.U, precision), fp, prec);
  out.holds = out.lhs <= out.rhs + additive_tolerance() + out.error;
  return out;
}

std::vector<DivisorSpec> sample_family_points(const FamilyParams& fp, std::size_t count, std::uint64_t seed) {
  const long bound = static_cast<long>(std::floor(fp.X));
  std::vector<DivisorSpec> out;
  for (std::size_t i = 0; i < count; ++i) {
    ItemRng rng(seed, i);
    for (;;) {
      std::vector<Integer> c(5);
      for (auto& v : c) v = rng.uniform(-bound, bound);
      const bool affine = rng.next() % 2;
      const long t = rng.uniform(-3, 3);
      if (!affine && t == 0) continue;
      const std::size_t free = affine ? 4 : 0;
      c[free] = 0;
      const Integer rest = BinaryForm(c).evaluate(affine ? Integer(t) : Integer(1), affine ? Integer(1) : Integer(t));
      // b^2 - rest must be a coefficient of size at most X.
      const long lo = std::max<long>(0, static_cast<long>(std::ceil(std::sqrt(std::max(0.0, rest.get_d() - bound)))));
      const long hi = static_cast<long>(std::floor(std::sqrt(std::max(0.0, rest.get_d() + bound))));
      if (hi < std::max<long>(lo, 1)) continue;
      const long b = rng.uniform(std::max<long>(lo, 1), hi);
      c[free] = Integer(b) * b - rest;
      if (abs(c[free]) > bound) continue;
      BinaryForm f(c);
      if (f.coeffs[0] == 0 || !family_membership(f, fp)) continue;
      out.push_back(affine ? divisor_from_point(f, Integer(t), Integer(1), Integer(b))
                           : divisor_from_point(f, Integer(1), Integer(t), Integer(b)));
      break;
    }
  }
  return out;
}

}  // namespace pencils
