#include "pencils/orbits.hpp"

#include <functional>

#include "pencils/errors.hpp"
#include "pencils/poly.hpp"

namespace pencils {

namespace {

poly::QPoly monic_modulus(const BinaryForm& f) {
  poly::QPoly m = poly::to_q(f.dehomogenize());
  const Rational lead = m.back();
  for (auto& c : m) c /= lead;
  return m;
}

void require_modulus(const BinaryForm& f) {
  if (f.degree() < 1 || f.coeffs[0] == 0)
    throw Error(ErrorKind::PreconditionViolation, "L_f needs a form of positive degree with f_0 != 0");
}

AlgebraElement from_poly(const BinaryForm& f, poly::QPoly p) { return AlgebraElement(f, std::move(p)); }

poly::QPoly as_poly(const AlgebraElement& a) {
  poly::QPoly p = a.coeffs;
  poly::trim(p);
  return p;
}

void check_same(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.modulus.coeffs != b.modulus.coeffs) throw Error(ErrorKind::DimensionMismatch, "elements of different algebras");
}

Integer mod(const Integer& a, const Integer& p) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& p) {
  Integer r;
  mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

/// Basis of the kernel of m modulo the prime p.
std::vector<std::vector<Integer>> kernel_mod(const IntMatrix& m, const Integer& p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = mod(m(i, j), p);
  std::vector<long> pivot_of(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t s = r;
    while (s < rows && a(s, c) == 0) ++s;
    if (s == rows) continue;
    a.swap_rows(s, r);
    Integer inv = inverse_mod(a(r, c), p);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) = mod(a(r, j) * inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Integer f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = mod(a(i, j) - f * a(r, j), p);
    }
    pivot_of[c] = static_cast<long>(r++);
  }
  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of[free] >= 0) continue;
    std::vector<Integer> v(cols, Integer(0));
    v[free] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_of[c] >= 0) v[c] = mod(-a(pivot_of[c], free), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
  std::vector<std::pair<Integer, int>> out;
  for (unsigned long d = 2; d <= 1000000 && Integer(d) * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(Integer(d), e);
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw Error(ErrorKind::NotFound, "covolume has a large composite factor");
    out.emplace_back(n, 1);
  }
  return out;
}

Integer denominator_square_root_bound(const RatMatrix& m) {
  // Least D with D^2 * m integral.
  Integer den = common_denominator(m), d = 1;
  for (const auto& [p, e] : factor_integer(den)) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>((e + 1) / 2));
    d *= pe;
  }
  return d;
}

RatMatrix hstack(const RatMatrix& a, const std::vector<std::vector<Rational>>& cols) {
  RatMatrix out(a.rows(), a.cols() + cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, a.cols() + j) = cols[j][i];
  }
  return out;
}

std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

struct OverlatticeSearch {
  const RationalPencil& p;
  const std::vector<RatMatrix>& ring;
  long budget;
  long nodes = 0;

  std::vector<std::vector<Rational>> closure_generators(const std::vector<Rational>& u) const {
    std::vector<std::vector<Rational>> gens{u};
    for (const auto& z : ring) gens.push_back(mat_vec(z, u));
    return gens;
  }

  std::optional<std::pair<IntMatrix, IntMatrix>> integral_grams(const RatMatrix& m) const {
    RatMatrix mt = m.transpose();
    auto ga = to_integer(mt * p.A * m), gb = to_integer(mt * p.B * m);
    if (!ga || !gb) return std::nullopt;
    return std::make_pair(*ga, *gb);
  }

  /// Extends m to an integral R_f-stable lattice whose index has no factor of `prime` left.
  std::optional<RatMatrix> extend(const RatMatrix& m, const Integer& remaining, const Integer& prime) {
    if (remaining % prime != 0) return m;
    if (++nodes > budget) return std::nullopt;
    auto grams = integral_grams(m);
    if (!grams) return std::nullopt;
    const std::size_t n = m.rows();
    IntMatrix stacked(2 * n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        stacked(i, j) = grams->first(i, j);
        stacked(n + i, j) = grams->second(i, j);
      }
    const auto kernel = kernel_mod(stacked, prime);
    const std::size_t k = kernel.size();
    if (k == 0) return std::nullopt;
    const Integer p2 = prime * prime;
    const Rational inv_p(1, prime);
    const Rational det_m = abs(determinant(m));
    // Projective points of the kernel: first nonzero coordinate 1.
    for (std::size_t lead = 0; lead < k; ++lead) {
      std::vector<Integer> coef(k, Integer(0));
      coef[lead] = 1;
      for (;;) {
        std::vector<Integer> y(n, Integer(0));
        for (std::size_t t = 0; t < k; ++t)
          for (std::size_t i = 0; i < n; ++i) y[i] += coef[t] * kernel[t][i];
        Integer qa = 0, qb = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            qa += y[i] * grams->first(i, j) * y[j];
            qb += y[i] * grams->second(i, j) * y[j];
          }
        if (qa % p2 == 0 && qb % p2 == 0) {
          std::vector<Rational> x(n, Rational(0));
          for (std::size_t i = 0; i < n; ++i) x[i] = Rational(y[i]) * inv_p;
          std::vector<Rational> u = mat_vec(m, x);
          RatMatrix next = lattice_basis(hstack(m, closure_generators(u)));
          Rational index = det_m / abs(determinant(next));
          if (index.get_den() == 1 && remaining % index.get_num() == 0) {
            if (auto done = extend(next, remaining / index.get_num(), prime)) return done;
          }
          if (nodes > budget) return std::nullopt;
        }
        // Advance the coordinates after `lead` as a base-p counter.
        std::size_t t = lead + 1;
        while (t < k && coef[t] == prime - 1) coef[t++] = 0;
        if (t >= k) break;
        ++coef[t];
      }
    }
    return std::nullopt;
  }
};

}  // namespace

AlgebraElement::AlgebraElement(BinaryForm f, std::vector<Rational> poly) : modulus(std::move(f)) {
  require_modulus(modulus);
  poly::trim(poly);
  poly::QPoly q, r;
  poly::divmod(poly, monic_modulus(modulus), q, r);
  coeffs.assign(static_cast<std::size_t>(modulus.degree()), Rational(0));
  for (std::size_t i = 0; i < r.size(); ++i) coeffs[i] = r[i];
}

AlgebraElement AlgebraElement::constant(const BinaryForm& f, const Rational& c) { return AlgebraElement(f, {c}); }

AlgebraElement AlgebraElement::generator(const BinaryForm& f) { return AlgebraElement(f, {Rational(0), Rational(1)}); }

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  return from_poly(a.modulus, poly::add(as_poly(a), as_poly(b)));
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  return from_poly(a.modulus, poly::sub(as_poly(a), as_poly(b)));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  return from_poly(a.modulus, poly::mul(as_poly(a), as_poly(b)));
}

AlgebraElement operator*(const AlgebraElement& a, const Rational& c) {
  return from_poly(a.modulus, poly::scale(as_poly(a), c));
}

AlgebraElement power(const AlgebraElement& a, unsigned long e) {
  AlgebraElement result = AlgebraElement::constant(a.modulus, 1), base = a;
  for (; e; e >>= 1) {
    if (e & 1) result = result * base;
    base = base * base;
  }
  return result;
}

std::optional<AlgebraElement> inverse(const AlgebraElement& a) {
  // Extended Euclid over Q: s * a + t * m = 1.
  poly::QPoly r0 = monic_modulus(a.modulus), r1 = as_poly(a), s0, s1{Rational(1)};
  while (!r1.empty()) {
    poly::QPoly q, r;
    poly::divmod(r0, r1, q, r);
    poly::QPoly s = poly::sub(s0, poly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (poly::degree(r0) != 0) return std::nullopt;
  return from_poly(a.modulus, poly::scale(s0, Rational(1) / r0[0]));
}

RatMatrix multiplication_matrix(const AlgebraElement& a) {
  const std::size_t n = a.n();
  RatMatrix m(n, n);
  AlgebraElement col = a, x = AlgebraElement::generator(a.modulus);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col.coeffs[i];
    col = col * x;
  }
  return m;
}

Rational tau_functional(const AlgebraElement& a) { return a.coeffs.back(); }

Rational norm(const AlgebraElement& a) { return determinant(multiplication_matrix(a)); }

int DivisorSpec::affine_count() const { return poly::degree(U.dehomogenize()); }

Integer DivisorSpec::leading() const {
  poly::ZPoly u = U.dehomogenize();
  return u.empty() ? Integer(0) : u.back();
}

DivisorSpec divisor_from_point(const BinaryForm& f, const Integer& a, const Integer& c, const Integer& b) {
  const int n = f.degree();
  if (n < 4 || n % 2) throw Error(ErrorKind::RangeError, "curve needs even degree n >= 4");
  if (gcd(a, c) != 1) throw Error(ErrorKind::NotPrimitive, "point coordinates (a : c) must be coprime");
  if (b * b != f.evaluate(a, c)) throw Error(ErrorKind::InvalidDatum, "point is not on the curve");
  const int g = (n - 2) / 2;
  Integer x = a, y = c, z = b;
  if (y < 0 || (y == 0 && x < 0)) {
    x = -x;
    y = -y;
    if ((g + 1) % 2) z = -z;
  }
  if (2 * g - 1 != 1) throw Error(ErrorKind::RangeError, "single-point divisors need n = 4");
  DivisorSpec ds;
  ds.f = f;
  ds.U = BinaryForm(std::vector<Integer>{y, -x});
  if (y == 0) {
    ds.U = BinaryForm(std::vector<Integer>{Integer(0), Integer(1)});
    ds.w = Rational(z);
  } else {
    Integer yg;
    mpz_pow_ui(yg.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(g + 1));
    ds.w = Rational(z, yg);
    ds.w.canonicalize();
  }
  return ds;
}

bool validate_datum(const OrbitDatum& d) {
  if (d.z == 0 || d.alpha.modulus.coeffs != d.f.coeffs) return false;
  const int n = d.f.degree();
  Integer rhs;
  mpz_pow_ui(rhs.get_mpz_t(), d.f.coeffs[0].get_mpz_t(), static_cast<unsigned long>(n + 1));
  return d.z * d.z * norm(d.alpha) == Rational(rhs);
}

DatumPencil pencil_from_datum(const OrbitDatum& d) {
  if (!validate_datum(d)) throw Error(ErrorKind::InvalidDatum, "z^2 N(alpha) != f_0^(n+1)");
  const std::size_t n = static_cast<std::size_t>(d.f.degree());
  const Rational f0(d.f.coeffs[0]);
  std::vector<AlgebraElement> basis;
  basis.push_back(AlgebraElement::constant(d.f, d.z));
  AlgebraElement x = AlgebraElement::generator(d.f);
  for (std::size_t i = 1; i < n; ++i) basis.push_back(power(x, i));
  RatMatrix A(n, n), B(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      AlgebraElement t = d.alpha * basis[i] * basis[j];
      A(i, j) = A(j, i) = tau_functional(t) / f0;
      B(i, j) = B(j, i) = tau_functional(t * x) / f0;
    }
  std::vector<Rational> one_bar(n, Rational(0));
  one_bar[0] = Rational(1) / d.z;
  return {RationalPencil(A, B), one_bar};
}

OrbitDatum datum_from_divisor(const DivisorSpec& ds) {
  const int n = ds.f.degree();
  if (n < 4 || n % 2) throw Error(ErrorKind::RangeError, "curve needs even degree n >= 4");
  if (ds.f.coeffs[0] == 0) throw Error(ErrorKind::PreconditionViolation, "f_0 must be nonzero");
  const int g = (n - 2) / 2;
  if (ds.U.degree() != 2 * g - 1) throw Error(ErrorKind::RangeError, "U must have degree 2g - 1");
  BinaryForm U = ds.U;
  if (content(U.coeffs) != 1) throw Error(ErrorKind::NotPrimitive, "U must be primitive");
  auto lead = std::find_if(U.coeffs.begin(), U.coeffs.end(), [](const Integer& c) { return c != 0; });
  if (*lead < 0)
    for (auto& c : U.coeffs) c = -c;
  if (ds.w == 0) throw Error(ErrorKind::DivisorMeetsWeierstrass, "w = 0 means a Weierstrass point");
  poly::ZPoly ux = U.dehomogenize();
  if (poly::degree(poly::gcd(poly::to_q(ux), poly::to_q(ds.f.dehomogenize()))) > 0)
    throw Error(ErrorKind::DivisorMeetsWeierstrass, "U(X,1) shares a factor with f(X,1)");
  OrbitDatum d;
  d.f = ds.f;
  d.alpha = AlgebraElement(ds.f, poly::to_q(ux));
  const Integer uk = ux.back();
  Integer ukg, f0n;
  mpz_pow_ui(ukg.get_mpz_t(), uk.get_mpz_t(), static_cast<unsigned long>(g + 1));
  mpz_pow_ui(f0n.get_mpz_t(), ds.f.coeffs[0].get_mpz_t(), static_cast<unsigned long>(n - 1));
  d.z = Rational(f0n) / Rational(ukg) / ds.w;
  if (!validate_datum(d)) throw Error(ErrorKind::InconsistentW, "w is inconsistent with U and f");
  return d;
}

IntegralRepresentative integralize(const RationalPencil& p, const std::optional<std::vector<Rational>>& one_bar,
                                   long budget) {
  const std::size_t n = p.n();
  std::vector<Rational> f = invariant_form(p);
  for (const auto& c : f)
    if (c.get_den() != 1) throw Error(ErrorKind::PreconditionViolation, "invariant form is not integral");
  IntegralRepresentative out;
  if (p.integral()) {
    out.pencil = p.to_integral();
    out.basis = to_rational(IntMatrix::identity(n));
    if (one_bar) out.one_bar = *one_bar;
    return out;
  }
  // The order R_f acts through Z_k = f_0 T^k + ... + f_{k-1} T with T = A^{-1} B.
  std::vector<RatMatrix> ring;
  if (f[0] != 0) {
    RatMatrix T = *inverse(p.A) * p.B;
    std::vector<RatMatrix> powers{to_rational(IntMatrix::identity(n))};
    for (std::size_t k = 1; k < n; ++k) powers.push_back(powers.back() * T);
    for (std::size_t k = 1; k < n; ++k) {
      RatMatrix z(n, n, Rational(0));
      for (std::size_t i = 0; i < k; ++i) z = z + powers[k - i].scaled(f[i]);
      ring.push_back(z);
    }
  }
  OverlatticeSearch search{p, ring, budget};
  std::vector<RatMatrix> starts;
  if (one_bar) {
    RatMatrix gens(n, ring.size() + 1);
    auto cols = search.closure_generators(*one_bar);
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) gens(i, j) = cols[j][i];
    if (determinant(gens * gens.transpose()) != 0) starts.push_back(lattice_basis(gens));
  }
  {
    RatMatrix gens = to_rational(IntMatrix::identity(n));
    for (const auto& z : ring) gens = hstack(gens, [&] {
      std::vector<std::vector<Rational>> cols;
      for (std::size_t j = 0; j < n; ++j) cols.push_back(z.column(j));
      return cols;
    }());
    starts.push_back(lattice_basis(gens));
  }
  for (RatMatrix m : starts) {
    RatMatrix mt = m.transpose();
    Integer d = lcm(denominator_square_root_bound(mt * p.A * m), denominator_square_root_bound(mt * p.B * m));
    m = m.scaled(Rational(d));
    Rational covolume = abs(determinant(m));
    if (covolume.get_den() != 1) continue;
    Integer remaining = covolume.get_num();
    std::optional<RatMatrix> current = m;
    for (const auto& [prime, e] : factor_integer(remaining)) {
      Integer before = Rational(abs(determinant(*current))).get_num();
      current = search.extend(*current, before, prime);
      if (!current) break;
    }
    if (!current || abs(determinant(*current)) != 1) continue;
    RatMatrix basis = *current;
    if (determinant(basis) < 0)
      for (std::size_t i = 0; i < n; ++i) basis(i, 0) = -basis(i, 0);
    RationalPencil moved(basis.transpose() * p.A * basis, basis.transpose() * p.B * basis);
    if (!moved.integral()) continue;
    out.pencil = moved.to_integral();
    out.basis = basis;
    if (one_bar) out.one_bar = mat_vec(*inverse(basis), *one_bar);
    return out;
  }
  throw Error(ErrorKind::NotFound, "no integral representative found within the search budget");
}

std::vector<RootTerms> norm_of_one_terms(const DivisorSpec& ds, long precision) {
  const BinaryForm& f = ds.f;
  RootSet roots = complex_roots(f, precision);
  const long prec = roots.precision + 32;
  // Charts: (t : 1) uses f(t,1), U(t,1); (1 : t) uses f(1,t), U(1,t).
  poly::ZPoly f_in = f.dehomogenize(), u_in = ds.U.dehomogenize();
  poly::ZPoly f_out(f.coeffs.begin(), f.coeffs.end()), u_out(ds.U.coeffs.begin(), ds.U.coeffs.end());
  poly::trim(f_out);
  poly::trim(u_out);
  auto eval = [&](const poly::ZPoly& q, const Complex& t) {
    return poly::evaluate(q, t, Complex(Real(0.0, prec), Real(0.0, prec)),
                          [&](const Integer& c) { return Complex(Real(c, prec), Real(0.0, prec)); });
  };
  auto term = [&](const poly::ZPoly& fq, const poly::ZPoly& uq, const Complex& t) {
    return abs(eval(uq, t)) / abs(eval(poly::derivative(fq), t));
  };
  std::vector<RootTerms> out;
  for (const auto& r : roots.roots) {
    if (r.at_infinity()) throw Error(ErrorKind::PreconditionViolation, "f_0 must be nonzero");
    Complex x(r.x.re.with_precision(prec), r.x.im.with_precision(prec));
    Complex y(r.y.re.with_precision(prec), r.y.im.with_precision(prec));
    Complex omega = x / y;
    RootTerms t;
    t.inside_chart = term(f_in, u_in, omega);
    t.boundary = r.boundary;
    if (omega.is_zero())
      t.outside_chart = Real(0.0, prec);
    else
      t.outside_chart = term(f_out, u_out, Complex(Real(1.0, prec), Real(0.0, prec)) / omega);
    out.push_back(std::move(t));
  }
  return out;
}

Estimate norm_of_one_formula(const DivisorSpec& ds, long precision) {
  const BinaryForm& f = ds.f;
  if (f.coeffs[0] == 0) throw Error(ErrorKind::PreconditionViolation, "f_0 must be nonzero");
  if (discriminant(f) == 0) throw Error(ErrorKind::DegenerateForm, "f has a repeated root");
  RootSet roots = complex_roots(f, precision);
  const long prec = roots.precision + 32;
  poly::ZPoly f_in = f.dehomogenize(), u_in = ds.U.dehomogenize();
  poly::ZPoly f_out(f.coeffs.begin(), f.coeffs.end()), u_out(ds.U.coeffs.begin(), ds.U.coeffs.end());
  poly::trim(f_out);
  poly::trim(u_out);
  const Complex zero(Real(0.0, prec), Real(0.0, prec));
  auto lift = [&](const Integer& c) { return Complex(Real(c, prec), Real(0.0, prec)); };
  Real value(0.0, prec), error(0.0, prec);
  for (const auto& r : roots.roots) {
    const bool inside = r.inside;
    const poly::ZPoly& fq = inside ? f_in : f_out;
    const poly::ZPoly& uq = inside ? u_in : u_out;
    Complex t(r.value.re.with_precision(prec), r.value.im.with_precision(prec));
    const poly::ZPoly d1 = poly::derivative(fq), d2 = poly::derivative(d1), du = poly::derivative(uq);
    Real u = abs(poly::evaluate(uq, t, zero, lift)), fd = abs(poly::evaluate(d1, t, zero, lift));
    Real slope = abs(poly::evaluate(du, t, zero, lift)) / fd +
                 u * abs(poly::evaluate(d2, t, zero, lift)) / (fd * fd);
    value += u / fd;
    error += Real(2.0, prec) * r.radius.with_precision(prec) * slope;
  }
  error += abs(value) * Real::pow2(-precision + 8, prec);
  return {value, error};
}

}  // namespace pencils
