#include <random>

#include "doctest.h"
#include "holo/error.hpp"
#include "holo/io.hpp"

using namespace holo;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

Poly random_poly(std::mt19937& g, int maxdeg) {
  std::uniform_int_distribution<int> deg(0, maxdeg), num(-30, 30), den(1, 7);
  std::vector<Rational> c;
  int d = deg(g);
  for (int i = 0; i <= d; ++i) c.push_back(make_rational(num(g), den(g)));
  return Poly(c);
}

Poly nonzero_poly(std::mt19937& g, int maxdeg) {
  Poly p = random_poly(g, maxdeg);
  return p.is_zero() ? Poly{1} : p;
}

std::vector<Rational> random_values(std::mt19937& g, int n) {
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 50);
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.push_back(make_rational(num(g), den(g)));
  return v;
}

}  // namespace

TEST_CASE("b-file with Fibonacci prefix") {
  SequenceFile s = parse_sequence("0 0\n1 1\n2 1\n3 2");
  CHECK(s.format == SequenceFormat::BFile);
  CHECK(s.values() == std::vector<Rational>{0, 1, 1, 2});
  CHECK(s.entries[3].index == 3);
}

TEST_CASE("plain rationals and comments") {
  SequenceFile s = parse_sequence("# header\n1\n\n-161/248832\n");
  CHECK(s.format == SequenceFormat::Plain);
  CHECK(s.values() == std::vector<Rational>{1, make_rational(-161, 248832)});
}

TEST_CASE("sequence errors") {
  CHECK(kind_of([] { parse_sequence("1 1\n3 2"); }) == ErrorKind::NonContiguousIndices);
  CHECK(kind_of([] { parse_sequence("1 1\n1 2"); }) == ErrorKind::NonContiguousIndices);
  CHECK(kind_of([] { parse_sequence("1\n2\nx3\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_sequence("1\n2 3\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_sequence("1 2 3\n"); }) == ErrorKind::ParseError);
  try {
    parse_sequence("1\n2\nx3\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("sequence round trip") {
  std::mt19937 g(7);
  for (int t = 0; t < 30; ++t) {
    SequenceFile s;
    s.format = t % 2 ? SequenceFormat::BFile : SequenceFormat::Plain;
    auto v = random_values(g, 1 + t);
    for (std::size_t i = 0; i < v.size(); ++i)
      s.entries.push_back({s.format == SequenceFormat::BFile ? std::optional<long>(long(i) + t - 5) : std::nullopt, v[i]});
    SequenceFile back = parse_sequence(format_sequence(s));
    CHECK(back.format == s.format);
    CHECK(back.entries == s.entries);
  }
}

TEST_CASE("polynomial parser") {
  std::string var;
  CHECK(parse_poly("-4*n - 2", var) == Poly{-2, -4});
  CHECK(var == "n");
  var.clear();
  CHECK(parse_poly("(5n+6)(n+2)", var) == Poly{12, 16, 5});
  var = "x";
  CHECK(parse_poly("3/8*x^2 - x/2 + 1", var) == Poly{Rational(1), Rational(-1, 2), Rational(3, 8)});
  CHECK(kind_of([&] { parse_poly("x + y", var); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_poly("x / x", var); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_poly("(x + 1", var); }) == ErrorKind::ParseError);
}

TEST_CASE("Catalan pretty form") {
  Recurrence r;
  r.coeffs = {Poly{-2, -4}, Poly{2, 1}};
  std::string s = format_relation(r, FormatMode::Pretty);
  CHECK(s == "(n + 2)*u(n+1) + (-4*n - 2)*u(n) = 0\n");
  r.inhomogeneous = Poly{1, 3};
  CHECK(format_relation(r, FormatMode::Pretty).find("= 3*n + 1") != std::string::npos);
}

TEST_CASE("hand written relations") {
  Relation r = parse_relation("u(n+2) - u(n+1) - u(n) = 0\nu(0) = 0\nu(1) = 1\n");
  const auto& rec = std::get<Recurrence>(r);
  CHECK(rec.coeffs == std::vector<Poly>{Poly{-1}, Poly{-1}, Poly{1}});
  CHECK(rec.initial == std::vector<Rational>{0, 1});
  Relation d = parse_relation("(1 - 4*x)*y'(x) - 2*y(x) = 0\n[x^0]y(x) = 1");
  CHECK(std::get<DiffEquation>(d).coeffs == std::vector<Poly>{Poly{-2}, Poly{1, -4}});
  Relation a = parse_relation("x^2*y^2 + (x - 1)*y + 1 = 0\ny(0) = 1");
  CHECK(std::get<AlgebraicEquation>(a).coeffs_y == std::vector<Poly>{Poly{1}, Poly{-1, 1}, Poly{0, 0, 1}});
  Relation j = parse_relation(R"({"kind": "rec", "coefficients": ["-4*n-2", [2, 1]], "initial": [1]})");
  CHECK(std::get<Recurrence>(j).coeffs == std::vector<Poly>{Poly{-2, -4}, Poly{2, 1}});
  CHECK(kind_of([] { parse_relation("u(n+1) + y(x) = 0"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_relation("u(n+1) - u(n)\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_relation("u(n+1) - u(n) = 0\nu(1) = 2\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_relation(R"({"kind": "rec")"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_relation(R"({"kind": "foo", "coefficients": []})"); }) == ErrorKind::ParseError);
}

TEST_CASE("relation round trips") {
  std::mt19937 g(11);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<int> order(0, 4);
    int r = order(g);
    if (t % 3 == 2 && r == 0) r = 1;
    std::vector<Poly> cs;
    for (int i = 0; i < r; ++i) cs.push_back(random_poly(g, 3));
    cs.push_back(nonzero_poly(g, 3));
    Relation rel;
    if (t % 3 == 0) {
      Recurrence x;
      x.coeffs = cs;
      x.initial = random_values(g, r + 1);
      if (t % 2) x.inhomogeneous = random_poly(g, 2);
      x.var = t % 4 ? "n" : "k";
      rel = x;
    } else if (t % 3 == 1) {
      DiffEquation x;
      x.coeffs = cs;
      x.initial = random_values(g, r);
      if (t % 2) x.inhomogeneous = random_poly(g, 2);
      x.var = t % 4 ? "x" : "z";
      rel = x;
    } else {
      AlgebraicEquation x;
      x.coeffs_y = cs;
      x.seed = random_values(g, 1)[0];
      rel = x;
    }
    for (FormatMode mode : {FormatMode::Json, FormatMode::Pretty}) {
      std::string s = format_relation(rel, mode);
      Relation back = parse_relation(s);
      CHECK(format_relation(back, mode) == s);
      CHECK(format_relation(back, FormatMode::Json) == format_relation(rel, FormatMode::Json));
    }
  }
}
