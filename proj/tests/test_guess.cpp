#include <random>

#include "doctest.h"
#include "holo/error.hpp"
#include "holo/eval.hpp"
#include "holo/guess.hpp"

using namespace holo;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<Rational> catalan(std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < n; ++k) out.emplace_back(binomial(2 * k, k) / Integer(k + 1));
  return out;
}

std::vector<Rational> almkvist_zudilin() {
  return ints({1, -3, 9, -3, -279, 2997, -19431, 65853, 292329, -7202523, 69363009, -407637387, 702049401,
               17222388453L, -261933431751L});
}

Recurrence canon(std::vector<Poly> c) {
  Recurrence r;
  r.coeffs = std::move(c);
  return canonical(r);
}

GuessConfig with_path(ArithPath p) {
  GuessConfig c;
  c.path = p;
  return c;
}

bool annihilates(const OreOperator& op, const std::vector<Rational>& data) {
  auto r = apply_operator(op, data);
  for (const auto& v : r)
    if (v != 0) return false;
  return !r.empty();
}

}  // namespace

TEST_CASE("guess matrix kernel") {
  auto m = build_guess_matrix(ints({1, 4, 36, 400, 4900, 63504, 853776}), 1, 2);
  CHECK(m.size() == 6);
  CHECK(m[0].size() == 6);
  auto kq = rational_kernel(m);
  PrimeSet primes;
  auto kp = modular_kernel(m, primes);
  REQUIRE(kq.size() == 1);
  CHECK(kq == kp);
  std::vector<Rational> expect = ints({-4, -16, -16, 1, 2, 1});
  Rational s = kq[0][3];
  for (std::size_t i = 0; i < 6; ++i) CHECK(kq[0][i] == expect[i] * s);

  auto c = rational_kernel(build_guess_matrix(ints({7, 7, 7, 7}), 1, 0));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == ints({-1, 1}));
  CHECK_THROWS_AS(build_guess_matrix(ints({1}), 1, 0), Error);
}

TEST_CASE("modular kernel") {
  Matrix<Rational> id(4, std::vector<Rational>(4, Rational(0)));
  for (int i = 0; i < 4; ++i) id[i][i] = 1;
  PrimeSet primes;
  CHECK(modular_kernel(id, primes).empty());
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int t = 0; t < 10; ++t) {
    // rank 3 matrix, 6 x 5, with rational entries
    Matrix<Rational> a(6, std::vector<Rational>(3)), b(3, std::vector<Rational>(5));
    for (auto& row : a)
      for (auto& x : row) x = make_rational(d(rng), 1 + std::abs(d(rng)));
    for (auto& row : b)
      for (auto& x : row) x = make_rational(d(rng), 1 + std::abs(d(rng)));
    Matrix<Rational> m(6, std::vector<Rational>(5, Rational(0)));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 3; ++k) m[i][j] += a[i][k] * b[k][j];
    CHECK(modular_kernel(m, primes) == rational_kernel(m));
  }
}

TEST_CASE("Catalan and Almkvist-Zudilin recurrences") {
  for (auto path : {ArithPath::Modular, ArithPath::Rational}) {
    auto rep = guess_rec(catalan(6), with_path(path));
    REQUIRE(rep.rec);
    CHECK(rep.rec->coeffs == canon({Poly{-2, -4}, Poly{2, 1}}).coeffs);
    CHECK(rep.rec->initial == ints({1}));

    auto az = guess_rec(almkvist_zudilin(), with_path(path));
    REQUIRE(az.rec);
    Recurrence expect = canon({Poly{1, 1} * Poly{1, 1} * Poly{1, 1} * Rational(81),
                               Poly{3, 2} * Poly{17, 21, 7}, Poly{2, 1} * Poly{2, 1} * Poly{2, 1}});
    CHECK(az.rec->coeffs == expect.coeffs);
    CHECK(unroll(*az.rec, 15) == almkvist_zudilin());
  }
}

TEST_CASE("differential equation guesses") {
  std::vector<Rational> cb;
  for (std::size_t n = 0; n <= 10; ++n) {
    Integer b = binomial(2 * n, n);
    cb.emplace_back(b * b);
  }
  for (auto path : {ArithPath::Modular, ArithPath::Rational}) {
    auto rep = guess_diffeq(cb, with_path(path));
    REQUIRE(rep.ode);
    DiffEquation expect;
    expect.coeffs = {Poly{4}, Poly{-1, 32}, Poly{0, -1, 16}};
    CHECK(rep.ode->coeffs == canonical(expect).coeffs);
    auto ones = guess_diffeq(std::vector<Rational>(12, Rational(1)), with_path(path));
    REQUIRE(ones.ode);
    CHECK(ones.ode->coeffs == std::vector<Poly>{Poly{1}, Poly{-1, 1}});
  }
}

TEST_CASE("algebraic guesses") {
  for (auto path : {ArithPath::Modular, ArithPath::Rational}) {
    auto m = guess_algeq(ints({1, 1, 2, 4, 9, 21, 51, 127, 323}), with_path(path));
    REQUIRE(m.alg);
    CHECK(m.alg->coeffs_y == std::vector<Poly>{Poly{1}, Poly{-1, 1}, Poly{0, 0, 1}});
    auto one = guess_algeq(ints({1, 0, 0, 0, 0, 0, 0, 0}), with_path(path));
    REQUIRE(one.alg);
    CHECK(one.alg->coeffs_y == std::vector<Poly>{Poly{-1}, Poly{1}});
    auto c = guess_algeq(catalan(30), with_path(path));
    REQUIRE(c.alg);
    CHECK(c.alg->coeffs_y == std::vector<Poly>{Poly{1}, Poly{-1}, Poly{0, 1}});
    auto geo = guess_algeq(std::vector<Rational>(8, Rational(1)), with_path(path));
    REQUIRE(geo.alg);
    CHECK(geo.alg->coeffs_y == std::vector<Poly>{Poly{1}, Poly{-1, 1}});
  }
}

TEST_CASE("series type selection") {
  std::vector<Rational> fact;
  Integer f = 1;
  for (long n = 0; n < 12; ++n) {
    if (n > 0) f *= n;
    fact.emplace_back(f);
  }
  GuessConfig cfg;
  cfg.series = SeriesType::Auto;
  auto rep = guess_rec(fact, cfg);
  REQUIRE(rep.rec);
  CHECK(rep.series_used == SeriesType::Exponential);
  CHECK(rep.rec->coeffs == std::vector<Poly>{Poly{-1}, Poly{1}});
  auto cat = guess_rec(catalan(12), cfg);
  CHECK(cat.series_used == SeriesType::Ordinary);
}

TEST_CASE("no relation on generic data") {
  auto rep = guess_rec(ints({3, -1, 4, 1, -5, 9}));
  CHECK(!rep.found());
  CHECK(!rep.trace.empty());
  CHECK_THROWS_AS(guess_rec(ints({1, 2, 3})), Error);
  GuessConfig bad;
  bad.margin = 0;
  CHECK_THROWS_AS(guess_rec(catalan(10), bad), Error);
}

TEST_CASE("plant and recover") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> coef(-6, 6);
  std::uniform_int_distribution<int> ord(1, 3), deg(0, 4);
  for (int t = 0; t < 50; ++t) {
    int r = ord(rng), d = deg(rng);
    Recurrence rec;
    for (int i = 0; i <= r; ++i) {
      std::vector<Rational> c;
      for (int k = 0; k <= d; ++k) c.emplace_back(coef(rng));
      rec.coeffs.emplace_back(c);
    }
    // Leading coefficient without non-negative integer roots keeps the data free.
    std::vector<Rational> lead;
    for (int k = 0; k <= d; ++k) lead.emplace_back(k == 0 ? 1 + std::abs(coef(rng)) : std::abs(coef(rng)));
    rec.coeffs.back() = Poly(lead);
    if (rec.coeffs.front().is_zero()) rec.coeffs.front() = Poly{1};
    for (int i = 0; i < r; ++i) rec.initial.emplace_back(coef(rng));
    const std::size_t n = static_cast<std::size_t>((r + 1) * (d + 1) + r + 3 + 5 + 4);
    auto data = unroll(rec, n);
    for (auto path : {ArithPath::Modular, ArithPath::Rational}) {
      auto rep = guess_rec(data, with_path(path));
      REQUIRE(rep.rec);
      CHECK(rep.rec->order() <= r);
      CHECK(annihilates(rep.rec->op(), data));
      CHECK(unroll(*rep.rec, n) == data);
    }
  }
}
