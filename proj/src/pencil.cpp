#include "pencils/pencil.hpp"

#include "pencils/errors.hpp"

namespace pencils {

namespace {

template <class M>
void check_shape(const M& a, const M& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "pencil matrices must be square of equal size");
  if (!a.symmetric() || !b.symmetric()) throw Error(ErrorKind::PreconditionViolation, "pencil matrices must be symmetric");
}

long sign_factor(std::size_t n) { return (n * (n - 1) / 2) % 2 == 0 ? 1 : -1; }

Rational node(std::size_t k) {
  if (k == 0) return 0;
  long m = static_cast<long>((k + 1) / 2);
  return k % 2 == 1 ? Rational(m) : Rational(-m);
}

// Coefficients f_0..f_n of the degree-n polynomial with the given values at node(0..n),
// returned as the binary form coefficient order (x^n first).
std::vector<Rational> interpolate(const std::vector<Rational>& values) {
  const std::size_t count = values.size();
  std::vector<Rational> xs(count);
  for (std::size_t k = 0; k < count; ++k) xs[k] = node(k);
  // Newton divided differences.
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level < count; ++level)
    for (std::size_t k = count - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
      if (k == level) break;
    }
  // Expand the Newton form into ascending monomial coefficients.
  std::vector<Rational> asc(count, Rational(0));
  for (std::size_t k = count; k-- > 0;) {
    // asc = asc * (t - xs[k]) + dd[k]
    std::vector<Rational> next(count, Rational(0));
    for (std::size_t i = 0; i + 1 < count; ++i) {
      next[i + 1] += asc[i];
      next[i] -= asc[i] * xs[k];
    }
    next[0] += dd[k];
    asc = std::move(next);
  }
  return std::vector<Rational>(asc.rbegin(), asc.rend());
}

}  // namespace

Pencil::Pencil(IntMatrix a, IntMatrix b) : A(std::move(a)), B(std::move(b)) { check_shape(A, B); }

RationalPencil::RationalPencil(RatMatrix a, RatMatrix b) : A(std::move(a)), B(std::move(b)) { check_shape(A, B); }

RationalPencil::RationalPencil(const Pencil& p) : A(to_rational(p.A)), B(to_rational(p.B)) {}

bool RationalPencil::integral() const { return to_integer(A).has_value() && to_integer(B).has_value(); }

Pencil RationalPencil::to_integral() const {
  auto a = to_integer(A), b = to_integer(B);
  if (!a || !b) throw Error(ErrorKind::PreconditionViolation, "pencil has non-integral entries");
  return Pencil(*a, *b);
}

UnimodularMatrix::UnimodularMatrix(IntMatrix m) : m_(std::move(m)), det_(0) {
  if (!m_.square()) throw Error(ErrorKind::DimensionMismatch, "unimodular matrix must be square");
  Integer d = determinant(m_);
  if (d == 1) {
    det_ = 1;
  } else if (d == -1) {
    det_ = -1;
  } else {
    throw Error(ErrorKind::PreconditionViolation, "matrix is not unimodular (det = " + d.get_str() + ")");
  }
}

IntMatrix UnimodularMatrix::inverse() const {
  auto inv = pencils::inverse(to_rational(m_));
  return *to_integer(*inv);
}

Pencil act(const UnimodularMatrix& g, const Pencil& p) {
  if (g.n() != p.n()) throw Error(ErrorKind::DimensionMismatch, "group element and pencil differ in size");
  IntMatrix gi = g.inverse();
  IntMatrix git = gi.transpose();
  return Pencil(git * p.A * gi, git * p.B * gi);
}

RationalPencil act(const RatMatrix& g, const RationalPencil& p) {
  if (g.rows() != p.n() || !g.square())
    throw Error(ErrorKind::DimensionMismatch, "group element and pencil differ in size");
  auto gi = inverse(g);
  if (!gi) throw Error(ErrorKind::PreconditionViolation, "singular change of basis");
  RatMatrix git = gi->transpose();
  return RationalPencil(git * p.A * *gi, git * p.B * *gi);
}

std::vector<Rational> invariant_form(const RationalPencil& p) {
  const std::size_t n = p.n();
  std::vector<Rational> values;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational t = node(k);
    RatMatrix m = p.A.scaled(t) - p.B;
    values.push_back(determinant(m) * sign_factor(n));
  }
  return interpolate(values);
}

BinaryForm invariant_form(const Pencil& p) {
  const std::size_t n = p.n();
  std::vector<Rational> values;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational t = node(k);
    IntMatrix m = p.A.scaled(Integer(t.get_num())) - p.B;
    values.emplace_back(determinant(m) * sign_factor(n));
  }
  std::vector<Integer> coeffs;
  for (const auto& c : interpolate(values)) {
    if (c.get_den() != 1) throw Error(ErrorKind::RangeError, "interpolated invariant form is not integral");
    coeffs.push_back(c.get_num());
  }
  return BinaryForm(std::move(coeffs));
}

Integer pencil_discriminant(const Pencil& p) { return discriminant(invariant_form(p)); }

}  // namespace pencils
