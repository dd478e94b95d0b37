#include <random>

#include "doctest.h"
#include "holo/error.hpp"
#include "holo/ore.hpp"

using namespace holo;

namespace {

OreOperator diffop(std::vector<Poly> c) { return OreOperator::from_polys(OreKind::Differential, "x", c); }
OreOperator shiftop(std::vector<Poly> c) { return OreOperator::from_polys(OreKind::Shift, "n", c); }

Poly rpoly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng));
  if (c.back() == 0) c.back() = 1;
  return Poly(c);
}

OreOperator rop(std::mt19937_64& rng, OreKind kind, int order, int deg) {
  std::vector<Poly> c;
  for (int i = 0; i <= order; ++i) c.push_back(rpoly(rng, deg));
  return OreOperator::from_polys(kind, kind == OreKind::Differential ? "x" : "n", c);
}

std::vector<Rational> exp_series(const Rational& a, std::size_t n) {
  std::vector<Rational> s;
  Rational t = 1;
  for (std::size_t k = 0; k < n; ++k) {
    s.push_back(t);
    t = t * a / static_cast<long>(k + 1);
  }
  return s;
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("commutation rules") {
  OreOperator d = OreOperator::generator(OreKind::Differential, "x");
  OreOperator x = diffop({Poly{0, 1}});
  CHECK(ore_mul(d, x) == diffop({Poly{1}, Poly{0, 1}}));
  OreOperator s = OreOperator::generator(OreKind::Shift, "n");
  OreOperator n = shiftop({Poly{0, 1}});
  CHECK(ore_mul(s, n) == shiftop({Poly(), Poly{1, 1}}));
  OreOperator a = diffop({Poly{1, 2}, Poly{0, 0, 3}});
  CHECK(ore_mul(a, diffop({Poly{1}})) == a);
  CHECK_THROWS_AS(ore_mul(a, s), Error);
}

TEST_CASE("product matches sequential application") {
  OreOperator a = diffop({Poly{-1}, Poly{1}});     // D - 1
  OreOperator b = diffop({Poly{0, 1}, Poly{1}});   // D + x
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    Poly f = rpoly(rng, 8);
    std::vector<Rational> data;
    for (int i = 0; i < 12; ++i) data.push_back(f[static_cast<std::size_t>(i)]);
    auto seq = apply_operator(a, apply_operator(b, data));
    auto prod = apply_operator(ore_mul(a, b), data);
    CHECK(seq == prod);
  }
}

TEST_CASE("right division") {
  std::mt19937_64 rng(2);
  for (OreKind kind : {OreKind::Differential, OreKind::Shift}) {
    for (int t = 0; t < 15; ++t) {
      OreOperator q = rop(rng, kind, 2, 2), b = rop(rng, kind, 2, 1), a = rop(rng, kind, 4, 2);
      auto dm = right_divmod(ore_mul(q, b), b);
      CHECK(dm.remainder.is_zero());
      CHECK(dm.quotient == q);
      auto dm2 = right_divmod(a, b);
      CHECK(ore_mul(dm2.quotient, b) + dm2.remainder == a);
      CHECK(dm2.remainder.order() < b.order());
    }
  }
  OreOperator small = diffop({Poly{1, 1}});
  OreOperator big = diffop({Poly{1}, Poly{0, 1}, Poly{2}});
  auto dm = right_divmod(small, big);
  CHECK(dm.quotient.is_zero());
  CHECK(dm.remainder == small);
  CHECK_THROWS_AS(right_divmod(big, diffop({})), Error);
}

TEST_CASE("gcrd and lclm on constructed pairs") {
  std::mt19937_64 rng(3);
  for (OreKind kind : {OreKind::Differential, OreKind::Shift}) {
    for (int t = 0; t < 25; ++t) {
      OreOperator g = rop(rng, kind, 1 + t % 2, 1);
      OreOperator q1 = rop(rng, kind, 1, 1), q2 = rop(rng, kind, 2, 1);
      OreOperator a = ore_mul(q1, g), b = ore_mul(q2, g);
      OreOperator h = gcrd(a, b);
      CHECK(h == g.canonical());
      CHECK(right_divmod(a, h).remainder.is_zero());
      CHECK(right_divmod(b, h).remainder.is_zero());

      OreOperator l = lclm(a, b);
      CHECK(right_divmod(l, a).remainder.is_zero());
      CHECK(right_divmod(l, b).remainder.is_zero());
      CHECK(l.order() <= a.order() + b.order());
      CHECK(l.order() == a.order() + b.order() - g.order());
    }
  }
  OreOperator a = diffop({Poly{3, 1}, Poly{0, 2}, Poly{1, 0, 1}});
  CHECK(gcrd(a, a) == a.canonical());
  CHECK(lclm(a, a) == a.canonical());
}

TEST_CASE("lclm of exponential operators") {
  OreOperator a = diffop({Poly{-1}, Poly{1}}), b = diffop({Poly{-2}, Poly{1}});
  OreOperator l = lclm(a, b);
  CHECK(l.order() == 2);
  CHECK(all_zero(apply_operator(l, exp_series(1, 32))));
  CHECK(all_zero(apply_operator(l, exp_series(2, 32))));
  std::vector<Rational> sum = exp_series(1, 32);
  auto e2 = exp_series(2, 32);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += e2[i];
  CHECK(all_zero(apply_operator(l, sum)));
}

TEST_CASE("apply to sequences") {
  OreOperator fib = shiftop({Poly{-1}, Poly{-1}, Poly{1}});
  std::vector<Rational> f{0, 1, 1, 2, 3, 5};
  CHECK(apply_operator(fib, f) == std::vector<Rational>(4, Rational(0)));
  OreOperator cat = shiftop({Poly{-2, -4}, Poly{2, 1}});
  std::vector<Rational> c{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  CHECK(all_zero(apply_operator(cat, c)));
  CHECK(apply_operator(shiftop({}), c) == std::vector<Rational>(10, Rational(0)));
  CHECK_THROWS_AS(apply_operator(fib, {1, 1}), Error);
}

TEST_CASE("canonical form") {
  OreOperator a = diffop({Poly{Rational(1, 2), Rational(1, 2)}, Poly{Rational(-3, 2), Rational(-3, 2)}});
  OreOperator c = a.canonical();
  CHECK(c == diffop({Poly{-1}, Poly{3}}));
  CHECK(c.canonical() == c);
  OreOperator r(OreKind::Differential, "x", {RatFun(Poly{1}, Poly{0, 1}), RatFun(1)});
  CHECK(r.canonical() == diffop({Poly{1}, Poly{0, 1}}));
  CHECK(r.canonical().monic() == r);
  CHECK(to_string(c) == "kind=diff var=x; [[-1]; [3]]");
  CHECK(to_pretty(diffop({Poly{1}, Poly{0, 1}, Poly{-1, 1}})) == "(x - 1)*Dx^2 + x*Dx + 1");
}
