#include <random>

#include "doctest.h"
#include "holo/error.hpp"
#include "holo/modular.hpp"
#include "holo/poly.hpp"

using namespace holo;

namespace {

Poly lin(long a) { return Poly{Rational(a), Rational(1)}; }  // n + a

Poly random_poly(std::mt19937_64& rng, int deg, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng), 1 + std::abs(d(rng)) % 3);
  for (auto& v : c) v.canonicalize();
  if (c.back() == 0) c.back() = 1;
  return Poly(c);
}

}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(to_string(parse_rational("-161/248832")) == "-161/248832");
  CHECK(to_string(parse_rational(" 6/4 ")) == "3/2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(parse_rational("+5") == 5);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK(rising_factorial(Rational(3, 5), 2) == Rational(3, 5) * Rational(8, 5));
  CHECK(binomial(10, 5) == 252);
}

TEST_CASE("integer roots") {
  CHECK(integer_roots(lin(2) * lin(-3)) == std::vector<Integer>{-2, 3});
  CHECK(integer_roots(lin(1) * lin(1)) == std::vector<Integer>{-1});
  CHECK(integer_roots(Poly{1, 0, 1}).empty());
  CHECK(integer_roots(Poly{0, 0, 5}) == std::vector<Integer>{0});
  CHECK(integer_roots(Poly{Rational(3, 5), 1}).empty());
  CHECK_THROWS_AS(integer_roots(Poly()), Error);
  // 31(n+3)(5n+11)
  CHECK(integer_roots(Poly{31} * lin(3) * Poly{11, 5}) == std::vector<Integer>{-3});

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-40, 40);
  for (int trial = 0; trial < 100; ++trial) {
    Poly p = random_poly(rng, 2, 9);
    std::vector<long> planted;
    for (int k = 0; k < 3; ++k) {
      long r = d(rng);
      planted.push_back(r);
      p *= lin(-r);
    }
    auto roots = integer_roots(p);
    for (long r : planted) CHECK(std::find(roots.begin(), roots.end(), Integer(r)) != roots.end());
    for (const auto& r : roots) CHECK(p.eval(Rational(r)) == 0);
    for (long n = -60; n <= 60; ++n) {
      bool zero = p.eval(Rational(n)) == 0;
      bool listed = std::find(roots.begin(), roots.end(), Integer(n)) != roots.end();
      CHECK(zero == listed);
    }
  }
}

TEST_CASE("crt combine") {
  CHECK(crt_combine({{1, 3}, {2, 5}}) == 7);
  PrimeSet ps = PrimeSet::make(5);
  std::vector<std::pair<Integer, u64>> zeros;
  for (u64 p : ps.primes()) zeros.emplace_back(0, p);
  CHECK(crt_combine(zeros) == 0);
  CHECK_THROWS_AS(crt_combine({{1, 3}, {2, 3}}), Error);

  gmp_randclass gr(gmp_randinit_default);
  gr.seed(11);
  Integer m = 1;
  for (u64 p : ps.primes()) m *= p;
  for (int trial = 0; trial < 50; ++trial) {
    Integer x = gr.get_z_range(m);
    std::vector<std::pair<Integer, u64>> res;
    for (u64 p : ps.primes()) res.emplace_back(reduce(x, p), p);
    CHECK(crt_combine(res) == x);
  }
}

TEST_CASE("prime set") {
  PrimeSet ps = PrimeSet::make(10);
  CHECK(ps.size() == 10);
  for (u64 p : ps.primes()) {
    CHECK(is_prime(p));
    CHECK(p < PrimeSet::kBound);
    CHECK(std::count(ps.primes().begin(), ps.primes().end(), p) == 1);
  }
  u64 bad = ps.primes()[3];
  ps.skip(bad);
  CHECK(ps.size() == 9);
  CHECK(ps.skipped() == std::vector<u64>{bad});
  u64 fresh = ps.grow();
  CHECK(fresh != bad);
  CHECK(fresh < ps.primes().front());
}

TEST_CASE("rational reconstruction") {
  const u64 p = 1000000007;
  u64 v = mul_mod(2, inv_mod(3, p), p);
  auto r = rational_reconstruct(Integer(v), Integer(p));
  REQUIRE(r);
  CHECK(*r == Rational(2, 3));

  Integer huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 10, 40);
  CHECK(*rational_reconstruct(5, huge) == 5);

  // Exhaustive oracle for a small modulus: v has a reconstruction exactly when
  // some a/b below the bound maps to it.
  const long M = 1009;
  long bound = 0;
  while ((bound + 1) * (bound + 1) <= M / 2) ++bound;
  for (long val = 0; val < M; ++val) {
    bool exists = false;
    for (long b = 1; b <= bound && !exists; ++b)
      for (long a = -bound; a <= bound; ++a)
        if (((a - b * val) % M + M) % M == 0) {
          exists = true;
          break;
        }
    auto got = rational_reconstruct(val, M);
    CHECK(got.has_value() == exists);
    if (!exists) CHECK_THROWS_AS(rational_reconstruct_or_throw(val, M), Error);
    if (got) {
      CHECK(abs(got->get_num()) <= bound);
      CHECK(got->get_den() <= bound);
    }
  }

  std::mt19937_64 rng(3);
  Integer mod = 1;
  PrimeSet ps = PrimeSet::make(3);
  for (u64 q : ps.primes()) mod *= q;
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int trial = 0; trial < 200; ++trial) {
    Rational x(d(rng), 1 + std::abs(d(rng)));
    x.canonicalize();
    Integer res = 0, m = 1;
    for (u64 q : ps.primes()) crt_accumulate(res, m, *reduce(x, q), q);
    CHECK(*rational_reconstruct(res, mod) == x);
  }
}

TEST_CASE("polynomial arithmetic is exact") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = random_poly(rng, 4, 20), b = random_poly(rng, 3, 20);
    CHECK((a + b) - b == a);
    CHECK(divexact(a * b, b) == a);
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("polynomial gcd") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    Poly f = random_poly(rng, 3, 10), g = random_poly(rng, 2, 10), h = random_poly(rng, 2, 10);
    Poly lhs = gcd(f * h, g * h);
    Poly rhs = monic(h * gcd(f, g));
    CHECK(lhs == rhs);
  }
  CHECK(gcd(Poly(), Poly()).is_zero());
  CHECK(gcd(lin(1) * lin(2), lin(2) * lin(5)) == lin(2));
}

TEST_CASE("polynomial helpers") {
  Poly p{Rational(1, 2), Rational(-3, 4)};
  CHECK(to_string(canonical(p), "n") == "3*n - 2");
  CHECK(to_string(Poly{-2, -4}, "n") == "-4*n - 2");
  CHECK(to_string(Poly{0, -1, 16}, "x") == "16*x^2 - x");
  CHECK(to_string(Poly(), "x") == "0");
  CHECK(Poly{1, 2, 1}.shift(1) == Poly{4, 4, 1});
  CHECK(falling_factorial_poly(2) == Poly{0, -1, 1});
  CHECK(rising_factorial_poly(1, 2) == Poly{2, 3, 1});
  CHECK(Poly{1, 1}.scale_variable(2) == Poly{1, 2});
  ZPoly a{6, 5, 1}, b{2, 1};
  CHECK(divexact(a, b) == ZPoly{3, 1});
  auto [q, r] = pseudo_divmod(ZPoly{1, 0, 3}, ZPoly{1, 2});
  CHECK(ZPoly{4} * ZPoly{1, 0, 3} == q * ZPoly{1, 2} + r);
}
