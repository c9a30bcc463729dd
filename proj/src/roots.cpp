#include <Eigen/Dense>

#include <complex>
#include <optional>

#include "pencils/errors.hpp"
#include "pencils/forms.hpp"

namespace pencils {

namespace {

constexpr long kMaxPrecisionFactor = 32;

Complex make_complex(double re, double im, long prec) { return {Real(re, prec), Real(im, prec)}; }

std::vector<std::complex<double>> initial_guesses(const poly::ZPoly& F) {
  const int d = poly::degree(F);
  std::vector<std::complex<double>> out;
  if (d == 1) {
    out.emplace_back(-mpq_class(F[0], F[1]).get_d(), 0.0);
    return out;
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  const double lead = F.back().get_d();
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -F[static_cast<std::size_t>(i)].get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  bool finite = solver.info() == Eigen::Success;
  if (finite) {
    for (int i = 0; i < d; ++i) {
      std::complex<double> z = solver.eigenvalues()[i];
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) finite = false;
      out.push_back(z);
    }
  }
  if (!finite) {
    out.clear();
    for (int i = 0; i < d; ++i) out.push_back(std::polar(1.0, 0.4 + 2.0 * M_PI * i / d));
  }
  // Aberth needs pairwise distinct starting points.
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(out[i] - out[j]) < 1e-10 * std::max(1.0, std::abs(out[i])))
        out[i] += std::polar(1e-6 * std::max(1.0, std::abs(out[i])), 0.7 * static_cast<double>(i + 1));
  return out;
}

struct Evaluated {
  Complex value;
  Complex derivative;
  /// sum |a_k| |z|^k, used to bound rounding error of the evaluation.
  Real magnitude;
};

Evaluated horner(const std::vector<Real>& coeffs, const Complex& z, long prec) {
  Complex p(Real(0.0, prec), Real(0.0, prec));
  Complex dp = p;
  Real mag(0.0, prec);
  Real absz = abs(z);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z;
    p.re += coeffs[i];
    mag = mag * absz + abs(coeffs[i]);
  }
  return {p, dp, mag};
}

std::optional<RootSet> attempt(const BinaryForm& f, const poly::ZPoly& F, std::vector<Complex>& z, long prec) {
  const long wp = prec + 32;
  const int d = poly::degree(F);
  std::vector<Real> coeffs;
  for (const auto& c : F) coeffs.emplace_back(c, wp);
  for (auto& zi : z) zi = Complex(zi.re.with_precision(wp), zi.im.with_precision(wp));

  const Real one(1.0, wp);
  const Real stop = Real::pow2(-(wp - 8), wp);
  const int max_iterations = 100 + static_cast<int>(wp / 4);
  for (int it = 0; it < max_iterations; ++it) {
    bool converged = true;
    for (int i = 0; i < d; ++i) {
      Evaluated e = horner(coeffs, z[i], wp);
      if (e.value.is_zero()) continue;
      if (e.derivative.is_zero()) {
        z[i].re += Real::pow2(-wp / 4, wp);
        converged = false;
        continue;
      }
      Complex ratio = e.value / e.derivative;
      Complex sum(Real(0.0, wp), Real(0.0, wp));
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        Complex diff = z[i] - z[j];
        if (diff.is_zero()) continue;
        sum += Complex(one, Real(0.0, wp)) / diff;
      }
      Complex denom = Complex(one, Real(0.0, wp)) - ratio * sum;
      Complex w = denom.is_zero() ? ratio : ratio / denom;
      z[i] -= w;
      if (w.norm2() > stop * stop * max(one, z[i].norm2())) converged = false;
    }
    if (converged) break;
  }

  // Inclusion radii: each disc of radius d |F(z_i)| / |a_d prod (z_i - z_j)| around z_i;
  // pairwise disjoint discs each contain exactly one root.
  const Real lead = abs(coeffs.back());
  const Real eval_slack = Real::pow2(-(wp - 12), wp);
  std::vector<Real> radius(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    Evaluated e = horner(coeffs, z[i], wp);
    Real num = abs(e.value) + e.magnitude * eval_slack;
    Real den = lead;
    for (int j = 0; j < d; ++j)
      if (j != i) den *= abs(z[i] - z[j]);
    if (den.is_zero()) return std::nullopt;
    radius[i] = num * Real(d, wp) / den;
  }
  const Real tolerance = Real::pow2(-prec / 2, wp);
  for (int i = 0; i < d; ++i) {
    if (radius[i] > tolerance * max(one, abs(z[i]))) return std::nullopt;
    for (int j = 0; j < i; ++j)
      if (abs(z[i] - z[j]) <= radius[i] + radius[j]) return std::nullopt;
  }

  // Conjugation symmetry of a real polynomial.
  std::vector<int> partner(static_cast<std::size_t>(d), -1);
  std::vector<bool> is_real(static_cast<std::size_t>(d), false);
  for (int i = 0; i < d; ++i) {
    Complex c = z[i].conj();
    int hits = 0, hit = -1;
    for (int j = 0; j < d; ++j) {
      if (j == i) continue;
      if (abs(c - z[j]) <= radius[i] + radius[j]) {
        ++hits;
        hit = j;
      }
    }
    if (hits == 0 && abs(z[i].im) <= radius[i]) {
      is_real[i] = true;
    } else if (hits == 1 && abs(z[i].im) > radius[i]) {
      partner[i] = hit;
    } else {
      return std::nullopt;
    }
  }
  for (int i = 0; i < d; ++i) {
    if (is_real[i]) {
      z[i].im = Real(0.0, wp);
    } else if (partner[i] > i) {
      int j = partner[i];
      if (partner[j] != i) return std::nullopt;
      Complex avg((z[i].re + z[j].re) / Real(2, wp), (z[i].im - z[j].im) / Real(2, wp));
      z[i] = avg;
      z[j] = avg.conj();
    }
  }

  RootSet out;
  out.leading = f.coeffs.front();
  out.precision = prec;
  const Real zero(0.0, wp);
  for (int i = 0; i < d; ++i) {
    ProjectiveRoot r;
    Real modulus = abs(z[i]);
    r.real = is_real[i];
    r.boundary = abs(modulus - one) <= tolerance;
    r.inside = modulus <= one;
    if (r.inside) {
      r.value = z[i];
      r.x = z[i];
      r.y = Complex(one, zero);
      r.radius = radius[i];
    } else {
      r.value = Complex(one, zero) / z[i];
      r.x = Complex(one, zero);
      r.y = r.value;
      r.radius = radius[i] / (modulus * (modulus - radius[i]));
    }
    out.roots.push_back(std::move(r));
  }
  for (int k = d; k < f.degree(); ++k) {
    ProjectiveRoot r;
    r.inside = false;
    r.real = true;
    r.value = Complex(zero, zero);
    r.x = Complex(one, zero);
    r.y = Complex(zero, zero);
    r.radius = zero;
    out.roots.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Complex ProjectiveRoot::affine() const {
  if (at_infinity()) throw Error(ErrorKind::RangeError, "affine coordinate of the root at infinity");
  return x / y;
}

std::size_t RootSet::inside_count() const {
  std::size_t k = 0;
  for (const auto& r : roots) k += r.inside ? 1 : 0;
  return k;
}

Real RootSet::max_radius() const {
  Real m(0.0, precision);
  for (const auto& r : roots) m = max(m, r.radius);
  return m;
}

RootSet complex_roots(const BinaryForm& f, long precision) {
  if (discriminant(f) == 0) throw Error(ErrorKind::DegenerateForm, "form has vanishing discriminant");
  if (precision < 32) precision = 32;
  poly::ZPoly F = f.dehomogenize();
  std::vector<Complex> z;
  if (poly::degree(F) >= 1)
    for (const auto& g : initial_guesses(F)) z.push_back(make_complex(g.real(), g.imag(), precision));
  for (long prec = precision; prec <= precision * kMaxPrecisionFactor; prec *= 2) {
    if (auto r = attempt(f, F, z, prec)) return *r;
  }
  throw Error(ErrorKind::PrecisionExhausted, "root certification failed at maximum precision");
}

}  // namespace pencils
