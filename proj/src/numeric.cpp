#include "pencils/numeric.hpp"

#include <algorithm>
#include <cctype>

#include "pencils/errors.hpp"

namespace pencils {

namespace {

std::string trimmed(std::string_view text) {
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  return std::string(text.substr(a, b - a));
}

bool valid_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string s = trimmed(text);
  if (!valid_integer_literal(s)) throw Error(ErrorKind::ParseError, "not an integer: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  std::string s = trimmed(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(std::string_view(s).substr(0, slash));
  Integer den = parse_integer(std::string_view(s).substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer determinant(const IntMatrix& input) {
  if (!input.square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational determinant(const RatMatrix& input) {
  if (!input.square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  Integer d = common_denominator(input);
  IntMatrix scaled = input.map<Integer>([&](const Rational& q) {
    Rational t = q * d;
    return Integer(t.get_num());
  });
  Rational det(determinant(scaled));
  for (std::size_t i = 0; i < input.rows(); ++i) det /= d;
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& input) {
  if (!input.square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = input.rows();
  RatMatrix a = input;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    a.swap_rows(k, p);
    inv.swap_rows(k, p);
    Rational piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RatMatrix to_rational(const IntMatrix& m) {
  return m.map<Rational>([](const Integer& v) { return Rational(v); });
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) return std::nullopt;
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

Integer common_denominator(const RatMatrix& m) {
  Integer d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(i, j).get_den_mpz_t());
  return d;
}

IntMatrix hermite_basis(const IntMatrix& generators) {
  const std::size_t n = generators.rows();
  const std::size_t m = generators.cols();
  IntMatrix g = generators;
  std::size_t col = 0;
  for (std::size_t row = 0; row < n; ++row) {
    // Gather the gcd of g(row, col..m-1) into column `col`.
    for (std::size_t j = col + 1; j < m; ++j) {
      if (g(row, j) == 0) continue;
      Integer a = g(row, col), b = g(row, j);
      Integer d, s, t;
      mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ad = a / d, bd = b / d;
      for (std::size_t i = 0; i < n; ++i) {
        Integer x = g(i, col), y = g(i, j);
        g(i, col) = s * x + t * y;
        g(i, j) = ad * y - bd * x;
      }
    }
    if (g(row, col) == 0) throw Error(ErrorKind::PreconditionViolation, "generators are not of full rank");
    if (g(row, col) < 0)
      for (std::size_t i = 0; i < n; ++i) g(i, col) = -g(i, col);
    for (std::size_t j = 0; j < col; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), g(row, j).get_mpz_t(), g(row, col).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t i = 0; i < n; ++i) g(i, j) -= q * g(i, col);
    }
    ++col;
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = g(i, j);
  return out;
}

RatMatrix lattice_basis(const RatMatrix& generators) {
  Integer d = common_denominator(generators);
  IntMatrix scaled = generators.map<Integer>([&](const Rational& q) {
    Rational t = q * d;
    return Integer(t.get_num());
  });
  IntMatrix h = hermite_basis(scaled);
  RatMatrix out = to_rational(h);
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) /= d;
  return out;
}

RatMatrix dual_basis(const RatMatrix& basis) {
  auto inv = inverse(basis);
  if (!inv) throw Error(ErrorKind::PreconditionViolation, "singular lattice basis");
  return inv->transpose();
}

Integer content(const std::vector<Integer>& values) {
  Integer g = 0;
  for (const auto& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

}  // namespace pencils
