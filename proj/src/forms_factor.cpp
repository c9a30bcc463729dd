#include <bit>
#include <set>

#include "pencils/forms.hpp"

namespace pencils {

namespace {

constexpr int kPrimeCandidates = 400;
constexpr int kUsablePrimes = 6;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::set<int> subset_degree_sums(const std::vector<int>& degrees) {
  std::set<int> sums{0};
  for (int d : degrees) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  return sums;
}

Integer symmetric_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

}  // namespace

Tristate is_irreducible(const BinaryForm& f) {
  const int n = f.degree();
  if (n <= 0 || f.is_zero()) return Tristate::False;
  if (n == 1) return Tristate::True;
  // x or y divides f.
  if (f.coeffs.front() == 0 || f.coeffs.back() == 0) return Tristate::False;

  poly::ZPoly F = poly::primitive_part(f.dehomogenize());
  poly::QPoly g = poly::gcd(poly::to_q(F), poly::derivative(poly::to_q(F)));
  if (poly::degree(g) > 0) return Tristate::False;

  const Integer lc = F.back();
  const Integer disc = poly::resultant(F, poly::derivative(F));

  std::set<int> allowed;
  for (int k = 1; k < n; ++k) allowed.insert(k);
  std::uint64_t best_prime = 0;
  std::size_t best_count = 0;
  int usable = 0;
  int tried = 0;
  for (std::uint64_t p = 3; tried < kPrimeCandidates && usable < kUsablePrimes; p += 2) {
    if (!is_prime(p)) continue;
    ++tried;
    Integer pz(static_cast<unsigned long>(p));
    if (mpz_divisible_p(lc.get_mpz_t(), pz.get_mpz_t()) || mpz_divisible_p(disc.get_mpz_t(), pz.get_mpz_t()))
      continue;
    ++usable;
    auto ddf = poly::modp::distinct_degree(poly::modp::reduce(F, p), p);
    std::vector<int> degrees;
    for (const auto& [d, prod] : ddf)
      for (int k = 0; k < poly::degree(prod) / d; ++k) degrees.push_back(d);
    if (degrees.size() == 1) return Tristate::True;
    std::set<int> sums = subset_degree_sums(degrees);
    std::set<int> kept;
    for (int s : allowed)
      if (sums.count(s)) kept.insert(s);
    allowed = std::move(kept);
    if (allowed.empty()) return Tristate::True;
    if (best_prime == 0 || degrees.size() < best_count) {
      best_prime = p;
      best_count = degrees.size();
    }
  }
  if (best_prime == 0) return Tristate::Unknown;

  // Zassenhaus: lift the modular factorisation and test factor combinations.
  const std::uint64_t p = best_prime;
  std::vector<poly::modp::Coeffs> factors = poly::modp::factor(poly::modp::reduce(F, p), p);
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), poly::norm2_squared(F).get_mpz_t());
  Integer bound = 2 * abs(lc) * (norm + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  Integer modulus(static_cast<unsigned long>(p));
  while (modulus <= bound) modulus *= static_cast<unsigned long>(p);
  std::vector<poly::ZPoly> lifted = poly::hensel_lift(F, factors, p, modulus);

  const std::size_t r = lifted.size();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << r); ++mask) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (2 * size > r) continue;
    int deg = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) deg += poly::degree(lifted[i]);
    if (!allowed.count(deg)) continue;
    poly::ZPoly candidate{lc};
    for (std::size_t i = 0; i < r; ++i) {
      if (!(mask >> i & 1)) continue;
      candidate = poly::mul(candidate, lifted[i]);
      for (auto& c : candidate) c = symmetric_mod(c, modulus);
    }
    candidate = poly::primitive_part(candidate);
    if (poly::degree(candidate) > 0 && poly::divides(candidate, F)) return Tristate::False;
  }
  return Tristate::True;
}

}  // namespace pencils
