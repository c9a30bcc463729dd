#include "pencils/poly.hpp"

#include <algorithm>
#include <random>

#include "pencils/errors.hpp"

namespace pencils::poly {

QPoly to_q(const ZPoly& p) {
  QPoly q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i];
  return q;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.empty()) throw Error(ErrorKind::RangeError, "polynomial division by zero");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

QPoly rem(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  return r;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    QPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty()) {
    Rational lead = x.back();
    for (auto& c : x) c /= lead;
  }
  return x;
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  Integer g = content(p);
  if (g == 0) return {};
  if (p.back() < 0) g = -g;
  ZPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] / g;
  return out;
}

ZPoly primitive_from(const QPoly& p) {
  Integer d = 1;
  for (const auto& c : p) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational t = p[i] * d;
    z[i] = t.get_num();
  }
  trim(z);
  return primitive_part(z);
}

bool divides(const ZPoly& divisor, const ZPoly& dividend) {
  if (divisor.empty()) return dividend.empty();
  ZPoly r = dividend;
  trim(r);
  const Integer& lead = divisor.back();
  while (!r.empty() && r.size() >= divisor.size()) {
    if (!mpz_divisible_p(r.back().get_mpz_t(), lead.get_mpz_t())) return false;
    Integer c = r.back() / lead;
    std::size_t shift = r.size() - divisor.size();
    for (std::size_t i = 0; i < divisor.size(); ++i) r[shift + i] -= c * divisor[i];
    r.pop_back();
    trim(r);
  }
  return r.empty();
}

Integer resultant(const ZPoly& a, const ZPoly& b) {
  const int m = degree(a), k = degree(b);
  if (m < 0 || k < 0) return 0;
  if (m == 0 && k == 0) return 1;
  const std::size_t size = static_cast<std::size_t>(m + k);
  IntMatrix s(size, size, Integer(0));
  for (int r = 0; r < k; ++r)
    for (int i = 0; i <= m; ++i) s(r, r + i) = a[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= k; ++i) s(k + r, r + i) = b[k - i];
  return determinant(s);
}

Integer norm2_squared(const ZPoly& p) {
  Integer s = 0;
  for (const auto& c : p) s += c * c;
  return s;
}

int real_root_count(const QPoly& input) {
  QPoly p = input;
  trim(p);
  if (p.size() <= 1) return 0;
  auto normalise = [](QPoly& q) {
    Rational lead = abs(q.back());
    for (auto& c : q) c /= lead;
  };
  std::vector<QPoly> seq;
  seq.push_back(p);
  seq.push_back(derivative(p));
  normalise(seq[0]);
  normalise(seq[1]);
  while (seq.back().size() > 1) {
    QPoly r = rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    normalise(r);
    seq.push_back(std::move(r));
  }
  auto variations = [&](bool at_plus) {
    int count = 0, last = 0;
    for (const auto& q : seq) {
      int s = sgn(q.back());
      if (!at_plus && (q.size() - 1) % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return variations(false) - variations(true);
}

namespace modp {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

}  // namespace

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs reduce(const ZPoly& a, std::uint64_t p) {
  Coeffs out(a.size());
  Integer pz(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a[i].get_mpz_t(), pz.get_mpz_t());
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

Coeffs mul(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(c);
  return c;
}

Coeffs add(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + b[i]) % p;
  trim(c);
  return c;
}

Coeffs sub(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + p - b[i]) % p;
  trim(c);
  return c;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

void divmod(const Coeffs& a, const Coeffs& b, std::uint64_t p, Coeffs& q, Coeffs& r) {
  if (b.empty()) throw Error(ErrorKind::RangeError, "polynomial division by zero mod p");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  std::uint64_t inv = inverse(b.back(), p);
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    std::uint64_t c = mulmod(r.back(), inv, p);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = (r[shift + i] + p - mulmod(c, b[i], p)) % p;
    r.pop_back();
    trim(r);
  }
  trim(q);
}

Coeffs rem(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs q, r;
  divmod(a, b, p, q, r);
  return r;
}

Coeffs monic(const Coeffs& a, std::uint64_t p) {
  if (a.empty()) return a;
  std::uint64_t inv = inverse(a.back(), p);
  Coeffs out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mulmod(a[i], inv, p);
  return out;
}

Coeffs gcd(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    Coeffs r = rem(x, y, p);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x, p);
}

void bezout(const Coeffs& a, const Coeffs& b, std::uint64_t p, Coeffs& s, Coeffs& t) {
  Coeffs r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    Coeffs q, r;
    divmod(r0, r1, p, q, r);
    Coeffs s2 = sub(s0, mul(q, s1, p), p);
    Coeffs t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw Error(ErrorKind::PreconditionViolation, "bezout of non-coprime polynomials");
  std::uint64_t inv = inverse(r0[0], p);
  s = s0;
  t = t0;
  for (auto& c : s) c = mulmod(c, inv, p);
  for (auto& c : t) c = mulmod(c, inv, p);
}

Coeffs powmod(const Coeffs& base, const Integer& e, const Coeffs& mod, std::uint64_t p) {
  Coeffs result{1};
  Coeffs b = rem(base, mod, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), mod, p);
  }
  return result;
}

std::vector<std::pair<int, Coeffs>> distinct_degree(const Coeffs& input, std::uint64_t p) {
  std::vector<std::pair<int, Coeffs>> out;
  Coeffs f = monic(input, p);
  Coeffs x{0, 1};
  Coeffs h = x;
  Integer pz(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = powmod(h, pz, f, p);
    Coeffs g = gcd(sub(h, x, p), f, p);
    if (g.size() > 1) {
      out.emplace_back(d, g);
      Coeffs q, r;
      divmod(f, g, p, q, r);
      f = q;
      h = rem(h, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(degree(f), f);
  return out;
}

namespace {

void split_equal_degree(const Coeffs& g, int d, std::uint64_t p, std::mt19937_64& rng,
                        std::vector<Coeffs>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  Integer pd = 1;
  for (int i = 0; i < d; ++i) pd *= static_cast<unsigned long>(p);
  Integer e = (pd - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  for (;;) {
    Coeffs a(static_cast<std::size_t>(degree(g)));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (a.size() <= 1) continue;
    Coeffs b = sub(powmod(a, e, g, p), Coeffs{1}, p);
    Coeffs h = gcd(b, g, p);
    if (h.size() > 1 && h.size() < g.size()) {
      Coeffs q, r;
      divmod(g, h, p, q, r);
      split_equal_degree(h, d, p, rng, out);
      split_equal_degree(monic(q, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Coeffs> factor(const Coeffs& f, std::uint64_t p) {
  std::mt19937_64 rng(0x5eed ^ p);
  std::vector<Coeffs> out;
  for (const auto& [d, g] : distinct_degree(f, p)) split_equal_degree(g, d, p, rng, out);
  return out;
}

}  // namespace modp

namespace {

ZPoly lift_coeffs(const modp::Coeffs& a) {
  ZPoly z(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) z[i] = static_cast<unsigned long>(a[i]);
  return z;
}

ZPoly reduce_mod(const ZPoly& a, const Integer& m) {
  ZPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(out[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  trim(out);
  return out;
}

// Two-factor linear Hensel lifting: target = g * h mod p, g monic, lc(h) = lc(target).
void lift_pair(const ZPoly& target, ZPoly& g, ZPoly& h, std::uint64_t p, const Integer& modulus) {
  const modp::Coeffs g0 = modp::reduce(g, p), h0 = modp::reduce(h, p);
  modp::Coeffs s, t;
  modp::bezout(g0, h0, p, s, t);
  Integer pk(static_cast<unsigned long>(p));
  while (pk < modulus) {
    ZPoly e = sub(target, mul(g, h));
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
    modp::Coeffs ep = modp::reduce(e, p);
    modp::Coeffs dg = modp::rem(modp::mul(t, ep, p), g0, p);
    modp::Coeffs dh, r;
    modp::divmod(modp::sub(ep, modp::mul(dg, h0, p), p), g0, p, dh, r);
    g = add(g, scale(lift_coeffs(dg), pk));
    h = add(h, scale(lift_coeffs(dh), pk));
    pk *= static_cast<unsigned long>(p);
  }
}

}  // namespace

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<modp::Coeffs>& factors, std::uint64_t p,
                               const Integer& modulus) {
  std::vector<ZPoly> out;
  ZPoly target = f;
  const Integer lc = f.back();
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    ZPoly g = lift_coeffs(modp::monic(factors[i], p));
    modp::Coeffs rest{modp::reduce(ZPoly{lc}, p)};
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = modp::mul(rest, factors[j], p);
    ZPoly h = lift_coeffs(rest);
    h.back() = lc;
    lift_pair(target, g, h, p, modulus);
    out.push_back(reduce_mod(g, modulus));
    target = reduce_mod(h, modulus);
    target.back() = lc;
  }
  Integer inv;
  mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  out.push_back(reduce_mod(scale(target, inv), modulus));
  return out;
}

}  // namespace pencils::poly
