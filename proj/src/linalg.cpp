#include "pencils/linalg.hpp"

#include "pencils/errors.hpp"

namespace pencils {

Real determinant(const RealMatrix& input) {
  if (!input.square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  RealMatrix m = input;
  long prec = 64;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prec = std::max(prec, m(i, j).precision());
  Real det(1.0, prec);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs(m(i, k)) > abs(m(p, k))) p = i;
    if (m(p, k).is_zero()) return Real(0.0, prec);
    if (p != k) {
      m.swap_rows(p, k);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      Real f = m(i, k) / m(k, k);
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

std::optional<RealMatrix> inverse(const RealMatrix& input) {
  const std::size_t n = input.rows();
  RealMatrix a = input;
  long prec = 64;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prec = std::max(prec, a(i, j).precision());
  RealMatrix inv(n, n, Real(0.0, prec));
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = Real(1.0, prec);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs(a(i, k)) > abs(a(p, k))) p = i;
    if (a(p, k).is_zero()) return std::nullopt;
    a.swap_rows(p, k);
    inv.swap_rows(p, k);
    Real piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      Real f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::optional<ComplexMatrix> inverse(const ComplexMatrix& input) {
  const std::size_t n = input.rows();
  ComplexMatrix a = input;
  const long prec = n ? a(0, 0).precision() : 64;
  const Complex zero(Real(0.0, prec), Real(0.0, prec));
  ComplexMatrix inv(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = Complex(Real(1.0, prec), Real(0.0, prec));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    Real best = a(k, k).norm2();
    for (std::size_t i = k + 1; i < n; ++i) {
      Real v = a(i, k).norm2();
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best.is_zero()) return std::nullopt;
    a.swap_rows(p, k);
    inv.swap_rows(p, k);
    Complex piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      Complex f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::vector<Complex> null_vector(const ComplexMatrix& input) {
  const std::size_t n = input.rows();
  ComplexMatrix a = input;
  const long prec = a(0, 0).precision();
  std::vector<std::size_t> col(n);
  for (std::size_t j = 0; j < n; ++j) col[j] = j;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pr = k, pc = k;
    Real best(-1.0, prec);
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) {
        Real v = a(i, j).norm2();
        if (v > best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (best.is_zero()) throw Error(ErrorKind::DegeneratePencil, "kernel has dimension greater than one");
    a.swap_rows(pr, k);
    a.swap_cols(pc, k);
    std::swap(col[pc], col[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Complex f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  // Free variable is the last permuted coordinate.
  std::vector<Complex> y(n, Complex(Real(0.0, prec), Real(0.0, prec)));
  y[n - 1] = Complex(Real(1.0, prec), Real(0.0, prec));
  for (std::size_t k = n - 1; k-- > 0;) {
    Complex s(Real(0.0, prec), Real(0.0, prec));
    for (std::size_t j = k + 1; j < n; ++j) s += a(k, j) * y[j];
    y[k] = -(s / a(k, k));
  }
  std::vector<Complex> v(n);
  for (std::size_t j = 0; j < n; ++j) v[col[j]] = y[j];
  std::size_t big = 0;
  for (std::size_t j = 1; j < n; ++j)
    if (v[j].norm2() > v[big].norm2()) big = j;
  Complex scale = v[big];
  for (auto& c : v) c /= scale;
  return v;
}

std::optional<LdlFactors> ldl(const RealMatrix& h) {
  const std::size_t n = h.rows();
  const long prec = n ? h(0, 0).precision() : 64;
  LdlFactors out{RealMatrix(n, n, Real(0.0, prec)), std::vector<Real>(n, Real(0.0, prec))};
  for (std::size_t j = 0; j < n; ++j) {
    Real dj = h(j, j);
    for (std::size_t k = 0; k < j; ++k) dj -= out.L(j, k) * out.L(j, k) * out.d[k];
    if (dj.sign() <= 0) return std::nullopt;
    out.d[j] = dj;
    out.L(j, j) = Real(1.0, prec);
    for (std::size_t i = j + 1; i < n; ++i) {
      Real s = h(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= out.L(i, k) * out.L(j, k) * out.d[k];
      out.L(i, j) = s / dj;
    }
  }
  return out;
}

RealMatrix congruence(const IntMatrix& g, const RealMatrix& h) {
  const std::size_t n = h.rows();
  const long prec = n ? h(0, 0).precision() : 64;
  RealMatrix hg(n, g.cols(), Real(0.0, prec));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < g.cols(); ++j)
        if (g(k, j) != 0) hg(i, j) += h(i, k) * Real(g(k, j), prec);
    }
  RealMatrix out(g.cols(), g.cols(), Real(0.0, prec));
  for (std::size_t i = 0; i < g.cols(); ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (g(k, i) == 0) continue;
      Real gki(g(k, i), prec);
      for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) += gki * hg(k, j);
    }
  return out;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  const long prec = a(0, 0).precision();
  ComplexMatrix c(a.rows(), b.cols(), Complex(Real(0.0, prec), Real(0.0, prec)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

}  // namespace pencils
