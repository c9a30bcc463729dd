#include "pencils/reduce.hpp"

#include <cmath>
#include <functional>

#include "pencils/errors.hpp"

namespace pencils {

namespace {

constexpr std::size_t kMaxEnumerationDimension = 12;

Integer round_div(const Integer& a, const Integer& b) {
  // Nearest integer to a/b for b > 0.
  Integer num = 2 * a + b, den = 2 * b, q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

class IntegralLll {
 public:
  IntegralLll(const IntMatrix& gram, const Rational& delta)
      : n_(gram.rows()), G_(gram), U_(IntMatrix::identity(gram.rows())), d_(n_ + 1),
        lambda_(n_ + 1, std::vector<Integer>(n_ + 1)), p_(delta.get_num()), q_(delta.get_den()) {}

  IntMatrix run() {
    if (n_ <= 1) return U_;
    d_[0] = 1;
    d_[1] = G(1, 1);
    if (d_[1] <= 0) not_definite();
    std::size_t k = 2, kmax = 1;
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        for (std::size_t j = 1; j <= k; ++j) {
          Integer u = G(k, j);
          for (std::size_t i = 1; i < j; ++i) u = (d_[i] * u - lambda_[k][i] * lambda_[j][i]) / d_[i - 1];
          if (j < k)
            lambda_[k][j] = u;
          else
            d_[k] = u;
        }
        if (d_[k] <= 0) not_definite();
      }
      reduce(k, k - 1);
      const Integer& lam = lambda_[k][k - 1];
      if (q_ * d_[k] * d_[k - 2] < p_ * d_[k - 1] * d_[k - 1] - q_ * lam * lam) {
        swap(k, kmax);
        k = std::max<std::size_t>(2, k - 1);
        continue;
      }
      for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
      ++k;
    }
    return U_;
  }

 private:
  Integer& G(std::size_t i, std::size_t j) { return G_(i - 1, j - 1); }

  [[noreturn]] static void not_definite() {
    throw Error(ErrorKind::PreconditionViolation, "Gram matrix is not positive definite");
  }

  void reduce(std::size_t k, std::size_t l) {
    if (2 * abs(lambda_[k][l]) <= d_[l]) return;
    Integer r = round_div(lambda_[k][l], d_[l]);
    for (std::size_t i = 0; i < n_; ++i) U_(i, k - 1) -= r * U_(i, l - 1);
    Integer gkk = G(k, k) - 2 * r * G(k, l) + r * r * G(l, l);
    for (std::size_t i = 1; i <= n_; ++i) {
      if (i == k) continue;
      G(k, i) -= r * G(l, i);
      G(i, k) = G(k, i);
    }
    G(k, k) = gkk;
    lambda_[k][l] -= r * d_[l];
    for (std::size_t i = 1; i < l; ++i) lambda_[k][i] -= r * lambda_[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    U_.swap_cols(k - 1, k - 2);
    G_.swap_rows(k - 1, k - 2);
    G_.swap_cols(k - 1, k - 2);
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    Integer lam = lambda_[k][k - 1];
    Integer b = (d_[k - 2] * d_[k] + lam * lam) / d_[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Integer t = lambda_[i][k];
      lambda_[i][k] = (d_[k] * lambda_[i][k - 1] - lam * t) / d_[k - 1];
      lambda_[i][k - 1] = (b * t + lam * lambda_[i][k]) / d_[k];
    }
    d_[k - 1] = b;
  }

  std::size_t n_;
  IntMatrix G_;
  IntMatrix U_;
  std::vector<Integer> d_;
  std::vector<std::vector<Integer>> lambda_;
  Integer p_, q_;
};

IntMatrix integral_inverse(const IntMatrix& u) {
  auto inv = inverse(to_rational(u));
  if (!inv) throw Error(ErrorKind::PreconditionViolation, "matrix is singular");
  auto out = to_integer(*inv);
  if (!out) throw Error(ErrorKind::PreconditionViolation, "matrix is not unimodular");
  return *out;
}

}  // namespace

IntMatrix lll_gram(const IntMatrix& gram, const Rational& delta) {
  if (delta <= Rational(1, 4) || delta > 1) throw Error(ErrorKind::RangeError, "LLL parameter must lie in (1/4, 1]");
  if (!gram.square()) throw Error(ErrorKind::DimensionMismatch, "Gram matrix must be square");
  return IntegralLll(gram, delta).run();
}

IntMatrix lll_gram(const GramMatrix& h, const Rational& delta, long precision) {
  const std::size_t n = h.n();
  const long shift = precision - max_abs(h.entries).exponent();
  const Real scale = Real::pow2(shift, h(0, 0).precision());
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) g(i, j) = g(j, i) = (h(i, j) * scale).round();
  return lll_gram(g, delta);
}

bool is_lll_reduced(const GramMatrix& h, const Rational& delta, double tol) {
  auto f = ldl(h.entries);
  if (!f) return false;
  const std::size_t n = h.n();
  const double dl = delta.get_d();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(f->L(i, j).to_double()) > 0.5 + tol) return false;
  for (std::size_t k = 1; k < n; ++k) {
    const double mu = f->L(k, k - 1).to_double();
    const double lhs = f->d[k].to_double(), rhs = (dl - mu * mu) * f->d[k - 1].to_double();
    if (lhs < rhs * (1 - tol)) return false;
  }
  return true;
}

ReductionResult lll_reduce(const Pencil& p, const Rational& delta, long precision, bool sl_normalize) {
  GramMatrix h = reduction_covariant(p, precision);
  IntMatrix u = lll_gram(h, delta, precision);
  Integer det = determinant(u);
  if (sl_normalize && det < 0) {
    for (std::size_t i = 0; i < u.rows(); ++i) u(i, 0) = -u(i, 0);
    det = -det;
  }
  UnimodularMatrix g(integral_inverse(u));
  Pencil reduced = act(g, p);
  return ReductionResult{g, reduced, transform(h, u), det > 0 ? 1 : -1};
}

ShortVector shortest_vector(const GramMatrix& h) {
  const std::size_t n = h.n();
  if (n > kMaxEnumerationDimension) throw Error(ErrorKind::DimensionTooLarge, "enumeration is limited to n <= 12");
  if (n == 0) throw Error(ErrorKind::PreconditionViolation, "empty Gram matrix");
  const long prec = h(0, 0).precision();
  IntMatrix u = lll_gram(h, Rational(99, 100), std::max<long>(prec / 2, 64));
  GramMatrix reduced = transform(h, u);
  auto f = ldl(reduced.entries);
  if (!f) throw Error(ErrorKind::PreconditionViolation, "Gram matrix is not positive definite");
  std::vector<long double> d(n);
  std::vector<std::vector<long double>> L(n, std::vector<long double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = f->d[i].to_long_double();
    for (std::size_t j = 0; j < n; ++j) L[i][j] = f->L(i, j).to_long_double();
  }
  const long double slack = 1 + 1e-9L;
  long double bound = reduced(0, 0).to_long_double();
  for (std::size_t i = 1; i < n; ++i) bound = std::min(bound, reduced(i, i).to_long_double());
  bound *= slack;

  std::vector<std::pair<long double, std::vector<long>>> found;
  std::vector<long> y(n, 0);
  // Depth-first over coordinates n-1 .. 0 with partial sums of d_j (y_j - c_j)^2.
  std::function<void(std::size_t, long double)> descend = [&](std::size_t level, long double partial) {
    const std::size_t j = level - 1;
    long double c = 0;
    for (std::size_t i = j + 1; i < n; ++i) c -= L[i][j] * y[i];
    const long double room = (bound - partial) / d[j];
    if (room < 0) return;
    const long double w = std::sqrt(room);
    for (long v = static_cast<long>(std::ceil(c - w)); v <= static_cast<long>(std::floor(c + w)); ++v) {
      y[j] = v;
      const long double next = partial + d[j] * (v - c) * (v - c);
      if (next > bound) continue;
      if (j > 0) {
        descend(j, next);
        continue;
      }
      if (std::all_of(y.begin(), y.end(), [](long t) { return t == 0; })) continue;
      if (next * slack < bound) {
        bound = next * slack;
        std::erase_if(found, [&](const auto& e) { return e.first > bound; });
      }
      found.emplace_back(next, y);
    }
    y[j] = 0;
  };
  descend(n, 0);
  if (found.empty()) throw Error(ErrorKind::PrecisionExhausted, "enumeration found no vector");

  std::vector<std::pair<Real, std::vector<Integer>>> exact;
  for (const auto& [_, yv] : found) {
    std::vector<Integer> x(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x[i] += u(i, j) * yv[j];
    auto lead = std::find_if(x.begin(), x.end(), [](const Integer& t) { return t != 0; });
    if (*lead < 0)
      for (auto& t : x) t = -t;
    exact.emplace_back(quadratic_value(h, x), std::move(x));
  }
  Real best = exact.front().first;
  for (const auto& e : exact) best = min(best, e.first);
  const Real tie = abs(best) * Real::pow2(-prec / 2, prec) + h.error_bound * Real(4 * static_cast<int>(n * n), prec);
  const std::vector<Integer>* pick = nullptr;
  Real pick_norm = best;
  for (const auto& [norm, x] : exact) {
    if (norm - best > tie) continue;
    if (!pick || std::lexicographical_compare(pick->begin(), pick->end(), x.begin(), x.end())) {
      pick = &x;
      pick_norm = norm;
    }
  }
  return ShortVector{*pick, pick_norm};
}

Real shortest_vector_ratio(const GramMatrix& h) {
  ShortVector s = shortest_vector(h);
  const long prec = s.norm.precision();
  Real det = determinant(h);
  return sqrt(s.norm) / pow(det, Real(1.0, prec) / Real(static_cast<int>(2 * h.n()), prec));
}

bool epsilon_small_test(const GramMatrix& h, double eps) {
  if (!(eps > 0)) throw Error(ErrorKind::RangeError, "eps must be positive");
  Real ratio = shortest_vector_ratio(h);
  return ratio < Real(eps, ratio.precision());
}

double default_siegel_constant() { return std::sqrt(3.0) / 2; }

IwasawaCoordinates iwasawa_coordinates(const GramMatrix& h, double c) {
  GramMatrix hn = det_normalized(h);
  auto f = ldl(hn.entries);
  if (!f) throw Error(ErrorKind::PreconditionViolation, "Gram matrix is not positive definite");
  const std::size_t n = h.n();
  const long prec = hn(0, 0).precision();
  IwasawaCoordinates w;
  for (std::size_t i = 0; i < n; ++i) w.t.push_back(Real(1.0, prec) / sqrt(f->d[i]));
  // nu = L^{-T}; L is unit lower triangular.
  RealMatrix linv(n, n, Real(0.0, prec));
  for (std::size_t j = 0; j < n; ++j) {
    linv(j, j) = Real(1.0, prec);
    for (std::size_t i = j + 1; i < n; ++i) {
      Real s(0.0, prec);
      for (std::size_t k = j; k < i; ++k) s += f->L(i, k) * linv(k, j);
      linv(i, j) = -s;
    }
  }
  w.nu = linv.transpose();
  const Real cr(c, prec);
  w.satisfies_siegel = true;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(w.t[i] / w.t[i + 1] > cr)) w.satisfies_siegel = false;
  return w;
}

RealMatrix gram_from_iwasawa(const IwasawaCoordinates& w) {
  const std::size_t n = w.t.size();
  const long prec = w.t.front().precision();
  // H = nu^{-T} diag(t^-2) nu^{-1}; nu^{-1} is upper unipotent.
  RealMatrix ninv(n, n, Real(0.0, prec));
  for (std::size_t j = 0; j < n; ++j) {
    ninv(j, j) = Real(1.0, prec);
    for (std::size_t i = j; i-- > 0;) {
      Real s(0.0, prec);
      for (std::size_t k = i + 1; k <= j; ++k) s += w.nu(i, k) * ninv(k, j);
      ninv(i, j) = -s;
    }
  }
  RealMatrix out(n, n, Real(0.0, prec));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k <= std::min(i, j); ++k)
        out(i, j) += ninv(k, i) * ninv(k, j) / (w.t[k] * w.t[k]);
  return out;
}

bool cusp_membership(const GramMatrix& h, double eps, double c) {
  if (!(eps > 0)) throw Error(ErrorKind::RangeError, "eps must be positive");
  IwasawaCoordinates w = iwasawa_coordinates(h, c);
  const long prec = w.t[0].precision();
  Real threshold = pow(Real(c, prec), Real(static_cast<int>(h.n()) - 1, prec)) / Real(eps, prec);
  return w.t[0] > threshold;
}

Integer stabilizer_order(long m, long n) {
  if (n <= 0 || n % 2 != 0) throw Error(ErrorKind::RangeError, "n must be a positive even integer");
  if (m < 0 || 2 * m > n) throw Error(ErrorKind::RangeError, "m must satisfy 0 <= m <= n/2");
  const unsigned long e = static_cast<unsigned long>(m > 0 ? n / 2 + m - 1 : n / 2);
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace pencils
