#include <random>

#include "doctest.h"
#include "holo/convert.hpp"
#include "holo/error.hpp"
#include "holo/eval.hpp"

using namespace holo;

namespace {

bool solves(const DiffEquation& deq, const std::vector<Rational>& s) {
  auto r = apply_operator(deq.op(), s);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != deq.inhomogeneous[i]) return false;
  return !r.empty();
}

bool solves(const Recurrence& rec, const std::vector<Rational>& u) {
  auto r = apply_operator(rec.op(), u);
  for (std::size_t j = 0; j < r.size(); ++j)
    if (r[j] != rec.inhomogeneous.eval(Rational(static_cast<long>(j)))) return false;
  return !r.empty();
}

std::vector<Rational> central_binomial_squares(std::size_t n) {
  std::vector<Rational> s;
  for (std::size_t k = 0; k < n; ++k) {
    Integer b = binomial(2 * k, k);
    s.emplace_back(b * b);
  }
  return s;
}

std::vector<Rational> motzkin(std::size_t n) {
  std::vector<Integer> m{1};
  while (m.size() < n) {
    std::size_t k = m.size() - 1;
    Integer next = m[k];
    for (std::size_t i = 0; i + 1 <= k; ++i) next += m[i] * m[k - 1 - i];
    m.push_back(next);
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(m[i]);
  return out;
}

Recurrence apery() {
  Recurrence r;
  r.coeffs = {Poly{1, 3, 3, 1}, -(Poly{3, 2} * Poly{39, 51, 17}), Poly{8, 12, 6, 1}};
  r.initial = {1, 5};
  return r;
}

std::vector<Rational> apery_oracle(std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < n; ++k) {
    Integer s = 0;
    for (std::size_t j = 0; j <= k; ++j) {
      Integer b = binomial(k, j) * binomial(k + j, j);
      s += b * b;
    }
    out.emplace_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("theta_to_diff expands powers of x D") {
  auto t = theta_to_diff(Poly{0, 0, 1});
  REQUIRE(t.size() == 3);
  CHECK(t[0] == Poly());
  CHECK(t[1] == Poly{0, 1});
  CHECK(t[2] == Poly{0, 0, 1});
  auto c = theta_to_diff(Poly{5});
  REQUIRE(c.size() == 1);
  CHECK(c[0] == Poly{5});
}

TEST_CASE("central binomial squares: recurrence to ODE and back") {
  Recurrence rec;
  rec.coeffs = {Poly{-4, -16, -16}, Poly{1, 2, 1}};
  rec.initial = {1};
  DiffEquation deq = rec_to_diffeq(rec);
  DiffEquation expect;
  expect.coeffs = {Poly{-4}, Poly{1, -32}, Poly{0, 1, -16}};
  expect = canonical(expect);
  CHECK(deq.coeffs == expect.coeffs);
  CHECK(deq.homogeneous());
  REQUIRE(!deq.initial.empty());
  CHECK(deq.initial[0] == 1);
  auto oracle = central_binomial_squares(50);
  CHECK(solves(deq, oracle));

  Recurrence back = diffeq_to_rec(deq);
  CHECK(back.coeffs == canonical(rec).coeffs);
  CHECK(back.initial[0] == 1);
  CHECK(solves(back, oracle));
  CHECK(unroll(back, 50) == oracle);
}

TEST_CASE("geometric and exponential series") {
  Recurrence geo;
  geo.coeffs = {Poly{-1}, Poly{1}};
  geo.initial = {1};
  DiffEquation d = rec_to_diffeq(geo);
  CHECK(d.coeffs == std::vector<Poly>{Poly{1}, Poly{-1, 1}});
  CHECK(d.homogeneous());
  CHECK(series_from_diffeq(d, 10) == std::vector<Rational>(10, Rational(1)));

  DiffEquation e;
  e.coeffs = {Poly{-1}, Poly{1}};
  e.initial = {1};
  Recurrence r = diffeq_to_rec(e);
  CHECK(r.coeffs == std::vector<Poly>{Poly{-1}, Poly{1, 1}});
  CHECK(r.initial == std::vector<Rational>{1});
}

TEST_CASE("Apery recurrence converts to an annihilating ODE") {
  auto oracle = apery_oracle(60);
  CHECK(unroll(apery(), 60) == oracle);
  DiffEquation deq = rec_to_diffeq(apery());
  CHECK(solves(deq, oracle));
  CHECK(series_from_diffeq(deq, 60) == oracle);
  Recurrence back = diffeq_to_rec(deq);
  CHECK(solves(back, oracle));
}

TEST_CASE("induced recurrence keeps the index offset") {
  DiffEquation d;
  d.coeffs = {Poly{0, 0, 1}, Poly{}, Poly{1}};  // y'' + x^2 y = 0
  auto ind = induced_recurrence(d);
  CHECK(ind.offset == -2);
  REQUIRE(ind.coeffs.size() == 5);
  CHECK(ind.coeffs[0] == Poly{1});
  CHECK(ind.coeffs[4] == falling_factorial_poly(2).shift(Rational(4)));
}

TEST_CASE("roundtrip on random recurrences") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-4, 4);
  int done = 0;
  while (done < 30) {
    std::uniform_int_distribution<int> ord(1, 2), deg(0, 2);
    int r = ord(rng);
    Recurrence rec;
    for (int i = 0; i <= r; ++i) {
      std::vector<Rational> c;
      int dg = deg(rng);
      for (int k = 0; k <= dg; ++k) c.emplace_back(coef(rng));
      rec.coeffs.emplace_back(c);
    }
    if (rec.coeffs.back().is_zero()) continue;
    std::size_t need = required_initial_count(rec);
    if (need > 8) continue;
    for (std::size_t i = 0; i < need; ++i) rec.initial.emplace_back(coef(rng));
    auto terms = unroll(rec, 50);
    if (!solves(rec, terms)) continue;  // random values broke a constraint at a leading root
    DiffEquation deq = rec_to_diffeq(rec);
    CHECK(solves(deq, terms));
    Recurrence back = diffeq_to_rec(deq);
    CHECK(solves(back, terms));
    ++done;
  }
}

TEST_CASE("algebraic equations to ODEs") {
  SUBCASE("Motzkin") {
    AlgebraicEquation alg;
    alg.coeffs_y = {Poly{1}, Poly{-1, 1}, Poly{0, 0, 1}};
    alg.seed = 1;
    auto m = motzkin(50);
    CHECK(algebraic_series(alg, 50) == m);
    DiffEquation exact = algeq_to_diffeq(alg, {60, 6, 1});
    DiffEquation modular = algeq_to_diffeq(alg, {60, 6, 2});
    CHECK(exact.coeffs == modular.coeffs);
    CHECK(exact.inhomogeneous == modular.inhomogeneous);
    CHECK(solves(exact, m));
    CHECK(series_from_diffeq(exact, 50) == m);
    auto h = homogenize_diffeq(exact);
    CHECK(!h.already_homogeneous);
    CHECK(h.relation.homogeneous());
    CHECK(series_from_diffeq(h.relation, 50) == m);
    CHECK(series_from_algeq(alg, 20) == motzkin(20));
  }
  SUBCASE("y - 1") {
    AlgebraicEquation alg;
    alg.coeffs_y = {Poly{-1}, Poly{1}};
    alg.seed = 1;
    DiffEquation d = algeq_to_diffeq(alg);
    CHECK(d.coeffs == std::vector<Poly>{Poly(), Poly{1}});
    CHECK(d.homogeneous());
    CHECK(d.initial[0] == 1);
    auto s = series_from_algeq(alg, 5);
    CHECK(s == std::vector<Rational>{1, 0, 0, 0, 0});
  }
  SUBCASE("square root of 1 - 4x") {
    AlgebraicEquation alg;
    alg.coeffs_y = {Poly{-1, 4}, Poly{}, Poly{1}};
    alg.seed = 1;
    auto s = algebraic_series(alg, 50);
    auto sq = series_mul(s, s, 50);
    std::vector<Rational> expect(50, Rational(0));
    expect[0] = 1;
    expect[1] = -4;
    CHECK(sq == expect);
    DiffEquation d = algeq_to_diffeq(alg);
    CHECK(d.order() == 1);
    CHECK(solves(d, s));
    DiffEquation dm = algeq_to_diffeq(alg, {60, 6, 2});
    CHECK(dm.coeffs == d.coeffs);
  }
  SUBCASE("errors") {
    AlgebraicEquation alg;
    alg.coeffs_y = {Poly{0, 1}, Poly{}, Poly{1}};  // y^2 + x, seed 0
    alg.seed = 0;
    CHECK_THROWS_AS(algeq_to_diffeq(alg), Error);
    try {
      algeq_to_diffeq(alg);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SingularSeed);
    }
  }
  SUBCASE("repeated factor is removed") {
    AlgebraicEquation alg;
    // (y - 1 - x)^2 (y + 1)
    Poly a{-1, -1};
    std::vector<Poly> sq{a * a, a * Rational(2), Poly{1}};
    alg.coeffs_y = {sq[0], sq[0] + sq[1], sq[1] + sq[2], sq[2]};
    alg.seed = -1;
    DiffEquation d = algeq_to_diffeq(alg);
    auto s = series_from_diffeq(d, 10);
    CHECK(s == std::vector<Rational>{-1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  }
}

TEST_CASE("homogenization") {
  SUBCASE("y' = 1") {
    DiffEquation d;
    d.coeffs = {Poly(), Poly{1}};
    d.inhomogeneous = Poly{1};
    d.initial = {0};
    auto h = homogenize_diffeq(d);
    CHECK(h.relation.coeffs == std::vector<Poly>{Poly(), Poly(), Poly{1}});
    CHECK(h.relation.homogeneous());
  }
  SUBCASE("x y' - y = x^2") {
    DiffEquation d;
    d.coeffs = {Poly{-1}, Poly{0, 1}};
    d.inhomogeneous = Poly{0, 0, 1};
    auto h = homogenize_diffeq(d).relation;
    CHECK(h.order() == 2);
    CHECK(h.homogeneous());
    for (long c = -2; c <= 2; ++c) {
      std::vector<Rational> s{0, Rational(c), 1, 0, 0, 0, 0, 0};
      CHECK(solves(d, s));
      CHECK(solves(h, s));
    }
  }
  SUBCASE("u(n+1) - u(n) = 1") {
    Recurrence r;
    r.coeffs = {Poly{-1}, Poly{1}};
    r.inhomogeneous = Poly{1};
    r.initial = {0};
    auto h = homogenize_rec(r);
    CHECK(!h.already_homogeneous);
    CHECK(h.relation.coeffs == std::vector<Poly>{Poly{1}, Poly{-2}, Poly{1}});
    CHECK(unroll(h.relation, 10) == unroll(r, 10));
  }
  SUBCASE("u(n+1) - u(n) = n") {
    Recurrence r;
    r.coeffs = {Poly{-1}, Poly{1}};
    r.inhomogeneous = Poly{0, 1};
    r.initial = {0};
    auto h = homogenize_rec(r).relation;
    CHECK(h.order() == 3);
    std::vector<Rational> tri{0, 0, 1, 3, 6, 10};
    CHECK(unroll(r, 6) == tri);
    CHECK(unroll(h, 6) == tri);
    auto z = apply_operator(h.op(), tri);
    for (const auto& v : z) CHECK(v == 0);
  }
  SUBCASE("already homogeneous") {
    Recurrence r;
    r.coeffs = {Poly{-1}, Poly{1}};
    r.initial = {1};
    auto h = homogenize_rec(r);
    CHECK(h.already_homogeneous);
    CHECK(h.relation.coeffs == r.coeffs);
    DiffEquation d;
    d.coeffs = {Poly{-1}, Poly{1}};
    CHECK(homogenize_diffeq(d).already_homogeneous);
  }
  SUBCASE("inhomogeneous recurrence to ODE") {
    Recurrence r;
    r.coeffs = {Poly{-1}, Poly{1}};
    r.inhomogeneous = Poly{0, 1};
    r.initial = {0};
    auto d = rec_to_diffeq(r);
    CHECK(solves(d, unroll(r, 30)));
  }
}
