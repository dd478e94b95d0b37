#include "holo/modular.hpp"

#include <algorithm>
#include <tuple>

#include "holo/error.hpp"

namespace holo {

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) {
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw Error(ErrorKind::Internal, "residue not invertible");
  return static_cast<u64>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

u64 reduce(const Integer& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

std::optional<u64> reduce(const Rational& q, u64 p) {
  u64 d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (d == 0) return std::nullopt;
  return mul_mod(mpz_fdiv_ui(q.get_num_mpz_t(), p), inv_mod(d, p), p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 s : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % s == 0) return n == s;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // Deterministic below 3.4e14; this file only deals with n < 2^32.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeSet PrimeSet::make(std::size_t count) {
  PrimeSet s;
  for (std::size_t i = 0; i < count; ++i) s.grow();
  return s;
}

u64 PrimeSet::next_candidate() const {
  u64 lo = kBound;
  for (u64 p : primes_) lo = std::min(lo, p);
  for (u64 p : skipped_) lo = std::min(lo, p);
  return lo - 1;
}

u64 PrimeSet::grow() {
  u64 c = next_candidate();
  while (!is_prime(c)) --c;
  primes_.push_back(c);
  return c;
}

void PrimeSet::skip(u64 p) {
  auto it = std::find(primes_.begin(), primes_.end(), p);
  if (it != primes_.end()) primes_.erase(it);
  skipped_.push_back(p);
}

void crt_accumulate(Integer& x, Integer& m, u64 r, u64 p) {
  if (m == 1) {
    x = r % p;
    m = p;
    return;
  }
  u64 xm = reduce(x, p);
  u64 mm = reduce(m, p);
  u64 t = mul_mod(sub_mod(r % p, xm, p), inv_mod(mm, p), p);
  x += m * t;
  m *= p;
}

Integer crt_combine(const std::vector<std::pair<Integer, u64>>& residues) {
  std::vector<u64> seen;
  Integer x = 0, m = 1;
  for (const auto& [r, p] : residues) {
    if (std::find(seen.begin(), seen.end(), p) != seen.end())
      throw Error(ErrorKind::DuplicatePrime, "prime " + std::to_string(p) + " given twice");
    seen.push_back(p);
    crt_accumulate(x, m, reduce(r, p), p);
  }
  return x;
}

std::optional<Rational> rational_reconstruct(const Integer& v, const Integer& m) {
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1 = v % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), t1.get_mpz_t(), m.get_mpz_t());
  if (g != 1) return std::nullopt;
  return make_rational(r1, t1);
}

Rational rational_reconstruct_or_throw(const Integer& v, const Integer& m) {
  auto r = rational_reconstruct(v, m);
  if (!r) throw Error(ErrorKind::NoReconstruction, "no small fraction for residue");
  return *r;
}

}  // namespace holo
