#include "pencils/covariant.hpp"

#include <optional>

#include "pencils/errors.hpp"

namespace pencils {

namespace {

constexpr long kMaxPrecisionFactor = 16;

Complex czero(long prec) { return {Real(0.0, prec), Real(0.0, prec)}; }

// Candidate auxiliary forms (r, s) with s != 0, in the order (0,1), (1,1), (1,-1), (1,2), (1,-2), (2,1), ...
std::vector<std::pair<long, long>> auxiliary_candidates() {
  std::vector<std::pair<long, long>> out{{0, 1}};
  for (long k = 2; k <= 6; ++k)
    for (long r = 1; r < k; ++r) {
      long s = k - r;
      out.emplace_back(r, s);
      out.emplace_back(r, -s);
    }
  return out;
}

std::pair<long, long> choose_auxiliary(const BinaryForm& f) {
  const int n = f.degree();
  const Real ht(height(f), 64);
  std::pair<long, long> best{0, 0};
  Real best_score(-1.0, 64);
  int seen = 0;
  for (const auto& [r, s] : auxiliary_candidates()) {
    Integer v = f.evaluate(Integer(s), Integer(-r));
    if (v == 0) continue;
    // |f(s, -r)| relative to the size of the form on that point.
    Real scale = ht * pow(Real(static_cast<double>(std::max(std::abs(r), std::abs(s))), 64), Real(n, 64));
    Real score = Real(Integer(abs(v)), 64) / scale;
    if (score > best_score) {
      best_score = score;
      best = {r, s};
    }
    if (++seen == 8) break;
  }
  if (best.second == 0) throw Error(ErrorKind::DegeneratePencil, "no auxiliary linear form found");
  return best;
}

ComplexMatrix complexify(const IntMatrix& m, long prec) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Complex(Real(m(i, j), prec), Real(0.0, prec));
  return out;
}

Complex bilinear(const IntMatrix& m, const std::vector<Complex>& u, const std::vector<Complex>& v, long prec) {
  Complex acc = czero(prec);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex row = czero(prec);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) row += v[j] * Real(m(i, j), prec);
    acc += u[i] * row;
  }
  return acc;
}

using Auxiliary = std::optional<std::pair<long, long>>;

DiagonalizingBasis diagonalize(const Pencil& p, const BinaryForm& f, const RootSet& roots, long prec,
                               const Auxiliary& forced) {
  const std::size_t n = p.n();
  if (forced && (forced->second == 0 || f.evaluate(Integer(forced->second), Integer(-forced->first)) == 0))
    throw Error(ErrorKind::PreconditionViolation, "auxiliary form needs s f(s, -r) != 0");
  auto [r, s] = forced ? *forced : choose_auxiliary(f);
  IntMatrix aux = p.A.scaled(Integer(s)) + p.B.scaled(Integer(r));
  ComplexMatrix Ac = complexify(aux, prec), Bc = complexify(p.B, prec);
  DiagonalizingBasis out;
  out.r = r;
  out.s = s;
  out.P = ComplexMatrix(n, n, czero(prec));
  const Real rr(static_cast<double>(r), prec), ss(static_cast<double>(s), prec);
  for (std::size_t i = 0; i < n; ++i) {
    const ProjectiveRoot& root = roots.roots[i];
    Complex x(root.x.re.with_precision(prec), root.x.im.with_precision(prec));
    Complex y(root.y.re.with_precision(prec), root.y.im.with_precision(prec));
    Complex lambda = x / (x * rr + y * ss);
    ComplexMatrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m(a, b) = Bc(a, b) - lambda * Ac(a, b);
    std::vector<Complex> v = null_vector(m);
    for (std::size_t a = 0; a < n; ++a) out.P(a, i) = v[a];
    out.dA.push_back(bilinear(p.A, v, v, prec));
    out.dB.push_back(bilinear(p.B, v, v, prec));
  }
  Real off(0.0, prec), diag(0.0, prec);
  for (std::size_t i = 0; i < n; ++i) {
    diag = max(diag, max(abs(out.dA[i]), abs(out.dB[i])));
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Complex> u = out.P.column(i), w = out.P.column(j);
      off = max(off, max(abs(bilinear(p.A, u, w, prec)), abs(bilinear(p.B, u, w, prec))));
    }
  }
  out.residual = diag.is_zero() ? Real(1.0, prec) : off / diag;
  return out;
}

struct Assembled {
  GramMatrix gram;
  bool ok;
};

Assembled assemble(const DiagonalizingBasis& basis, const RootSet& roots, CovariantVariant which, long prec) {
  const std::size_t n = basis.P.rows();
  std::vector<Real> d;
  Real scale(0.0, prec);
  for (std::size_t i = 0; i < n; ++i) scale = max(scale, max(abs(basis.dA[i]), abs(basis.dB[i])));
  const Real tiny = scale * Real::pow2(-prec / 2, prec);
  for (std::size_t i = 0; i < n; ++i) {
    Real a = abs(basis.dA[i]), b = abs(basis.dB[i]);
    Real v = which == CovariantVariant::Max ? max(a, b) : (which == CovariantVariant::R1 ? a : b);
    if (v <= tiny) {
      if (which == CovariantVariant::Max) return {GramMatrix{}, false};
      throw Error(ErrorKind::SingularVariant, "variant covariant has a vanishing diagonal value");
    }
    d.push_back(v);
  }
  auto Q = inverse(basis.P);
  if (!Q) return {GramMatrix{}, false};
  RealMatrix re(n, n, Real(0.0, prec));
  Real imag(0.0, prec), big(0.0, prec), pmax(0.0, prec), qmax(0.0, prec);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      pmax = max(pmax, abs(basis.P(j, k)));
      qmax = max(qmax, abs((*Q)(j, k)));
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) {
      Complex acc = czero(prec);
      for (std::size_t i = 0; i < n; ++i) acc += ((*Q)(i, j).conj() * (*Q)(i, k)) * d[i];
      re(j, k) = acc.re;
      re(k, j) = acc.re;
      imag = max(imag, abs(acc.im));
      big = max(big, abs(acc.re));
    }
  const Real nn(static_cast<double>(n), prec);
  if (imag > nn * Real::pow2(-prec / 2, prec) * big) return {GramMatrix{}, false};
  Real cond = pmax * qmax * nn;
  Real rel = cond * (roots.max_radius() + basis.residual) * nn + cond * cond * Real::pow2(-prec + 8, prec);
  GramMatrix g;
  g.entries = std::move(re);
  g.error_bound = big * rel + imag;
  g.precision = prec;
  return {std::move(g), true};
}

GramMatrix compute(const Pencil& p, CovariantVariant which, long precision, const Auxiliary& forced = {}) {
  BinaryForm f = invariant_form(p);
  if (discriminant(f) == 0) throw Error(ErrorKind::DegeneratePencil, "pencil has vanishing discriminant");
  for (long prec = precision; prec <= precision * kMaxPrecisionFactor; prec *= 2) {
    RootSet roots = complex_roots(f, prec);
    DiagonalizingBasis basis = diagonalize(p, f, roots, prec + 32, forced);
    Assembled a = assemble(basis, roots, which, prec + 32);
    if (a.ok) {
      a.gram.precision = precision;
      return a.gram;
    }
  }
  throw Error(ErrorKind::PrecisionExhausted, "covariant imaginary part did not vanish at maximum precision");
}

}  // namespace

GramMatrix GramMatrix::exact(const RealMatrix& m, long precision) {
  GramMatrix g;
  g.entries = m;
  g.error_bound = Real(0.0, precision);
  g.precision = precision;
  return g;
}

GramMatrix GramMatrix::diagonal(const std::vector<double>& d, long precision) {
  RealMatrix m(d.size(), d.size(), Real(0.0, precision));
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = Real(d[i], precision);
  return exact(m, precision);
}

Real determinant(const GramMatrix& h) { return determinant(h.entries); }

GramMatrix det_normalized(const GramMatrix& h) {
  Real det = determinant(h);
  if (det.sign() <= 0) throw Error(ErrorKind::PreconditionViolation, "Gram matrix is not positive definite");
  const long prec = det.precision();
  Real scale = pow(det, Real(-1.0, prec) / Real(static_cast<double>(h.n()), prec));
  GramMatrix out = h;
  out.entries = h.entries.scaled(scale);
  out.error_bound = h.error_bound * scale;
  out.det_normalized = true;
  return out;
}

GramMatrix transform(const GramMatrix& h, const IntMatrix& g) {
  GramMatrix out = h;
  out.entries = congruence(g, h.entries);
  Integer row = 0;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < g.rows(); ++i) s += abs(g(i, j));
    row = std::max<Integer>(row, s);
  }
  Real r(row, h.error_bound.precision());
  out.error_bound = h.error_bound * r * r;
  return out;
}

Real quadratic_value(const GramMatrix& h, const std::vector<Integer>& v) {
  const long prec = h(0, 0).precision();
  Real acc(0.0, prec);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Real row(0.0, prec);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) row += h(i, j) * Real(v[j], prec);
    acc += row * Real(v[i], prec);
  }
  return acc;
}

Real quadratic_value(const GramMatrix& h, const std::vector<Rational>& v) {
  const long prec = h(0, 0).precision();
  Real acc(0.0, prec);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Real row(0.0, prec);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) row += h(i, j) * Real(v[j], prec);
    acc += row * Real(v[i], prec);
  }
  return acc;
}

DiagonalizingBasis simultaneous_diagonalize(const Pencil& p, long precision) {
  BinaryForm f = invariant_form(p);
  if (discriminant(f) == 0) throw Error(ErrorKind::DegeneratePencil, "pencil has vanishing discriminant");
  RootSet roots = complex_roots(f, precision);
  return diagonalize(p, f, roots, precision + 32, {});
}

GramMatrix reduction_covariant(const Pencil& p, long precision) {
  return compute(p, CovariantVariant::Max, precision);
}

GramMatrix reduction_covariant(const Pencil& p, long precision, std::pair<long, long> auxiliary) {
  return compute(p, CovariantVariant::Max, precision, auxiliary);
}

GramMatrix reduction_covariant(const RationalPencil& p, long precision) {
  Integer d = lcm(common_denominator(p.A), common_denominator(p.B));
  Pencil scaled(*to_integer(p.A.scaled(Rational(d))), *to_integer(p.B.scaled(Rational(d))));
  GramMatrix h = reduction_covariant(scaled, precision);
  Real inv = Real(1.0, h(0, 0).precision()) / Real(d, h(0, 0).precision());
  h.entries = h.entries.scaled(inv);
  h.error_bound *= inv;
  return h;
}

GramMatrix covariant_variant(const Pencil& p, CovariantVariant which, long precision) {
  return compute(p, which, precision);
}

DetIdentity det_identity_check(const Pencil& p, long precision) {
  GramMatrix h = reduction_covariant(p, precision);
  BinaryForm f = invariant_form(p);
  Estimate m = mahler_measure(f, precision);
  DetIdentity out;
  out.det_h = determinant(h);
  out.mahler = m.value;
  const long prec = out.det_h.precision();
  auto hinv = inverse(h.entries);
  Real inv_norm = hinv ? max_abs(*hinv) : Real(0.0, prec);
  const Real n(static_cast<double>(h.n()), prec);
  out.tolerance = m.error + abs(out.det_h) * (n * n * h.error_bound * inv_norm + Real::pow2(-precision / 2, prec));
  out.agree = abs(out.det_h - out.mahler) <= out.tolerance;
  return out;
}

}  // namespace pencils
