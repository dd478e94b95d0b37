#include "holo/eval.hpp"

#include <algorithm>

#include "holo/convert.hpp"
#include "holo/error.hpp"

namespace holo {

std::vector<long> required_initial_indices(const std::vector<Poly>& coeffs) {
  if (coeffs.empty() || coeffs.back().is_zero())
    throw Error(ErrorKind::InvalidInput, "relation needs a nonzero leading coefficient");
  const long r = static_cast<long>(coeffs.size()) - 1;
  std::vector<long> idx;
  for (long i = 0; i < r; ++i) idx.push_back(i);
  if (coeffs.back().degree() > 0)
    for (const auto& root : integer_roots(coeffs.back()))
      if (root >= 0) idx.push_back(root.get_si() + r);
  return idx;
}

std::size_t required_initial_count(const std::vector<Poly>& coeffs) {
  auto idx = required_initial_indices(coeffs);
  return idx.empty() ? 0 : static_cast<std::size_t>(idx.back() + 1);
}

std::size_t required_initial_count(const Recurrence& rec) { return required_initial_count(rec.coeffs); }

std::size_t required_initial_count(const DiffEquation& deq) {
  return required_initial_count(induced_recurrence(deq).coeffs);
}

namespace {

struct IntRelation {
  std::vector<ZPoly> coeffs;
  Integer scale;  // original = coeffs / scale
};

IntRelation integral(const std::vector<Poly>& coeffs) {
  Integer den = 1;
  for (const auto& q : coeffs)
    for (const auto& c : q.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntRelation out;
  out.scale = den;
  for (const auto& q : coeffs) {
    std::vector<Integer> z;
    for (const auto& c : q.coeffs()) z.push_back(c.get_num() * (den / c.get_den()));
    out.coeffs.emplace_back(std::move(z));
  }
  return out;
}

void eval_at(const ZPoly& p, long x, Integer& out) {
  out = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    out *= x;
    out += *it;
  }
}

[[noreturn]] void throw_missing(const std::vector<Poly>& coeffs, std::size_t have, std::size_t n) {
  std::string list;
  for (long i : required_initial_indices(coeffs)) {
    if (i < static_cast<long>(have) || i >= static_cast<long>(n)) continue;
    if (!list.empty()) list += ", ";
    list += std::to_string(i);
  }
  throw Error(ErrorKind::MissingInitialTerms, "initial terms required at indices " + list);
}

}  // namespace

std::vector<Rational> unroll_raw(const std::vector<Poly>& coeffs, const std::function<Rational(long)>& rhs,
                                 const std::vector<Rational>& initial, std::size_t n) {
  if (coeffs.empty() || coeffs.back().is_zero())
    throw Error(ErrorKind::InvalidInput, "relation needs a nonzero leading coefficient");
  const long r = static_cast<long>(coeffs.size()) - 1;
  std::vector<Rational> u(initial.begin(), initial.begin() + static_cast<long>(std::min(n, initial.size())));
  if (u.size() >= n) return u;
  if (static_cast<long>(u.size()) < r) throw_missing(coeffs, u.size(), n);
  const IntRelation rel = integral(coeffs);
  Integer cv;
  Rational acc;
  u.reserve(n);
  for (std::size_t idx = u.size(); idx < n; ++idx) {
    const long j = static_cast<long>(idx) - r;
    eval_at(rel.coeffs[static_cast<std::size_t>(r)], j, cv);
    if (cv == 0) throw_missing(coeffs, idx, n);
    Integer lead = cv;
    acc = rhs ? Rational(rhs(j) * rel.scale) : Rational(0);
    for (long i = 0; i < r; ++i) {
      const Rational& t = u[static_cast<std::size_t>(j + i)];
      if (t == 0 || rel.coeffs[static_cast<std::size_t>(i)].is_zero()) continue;
      eval_at(rel.coeffs[static_cast<std::size_t>(i)], j, cv);
      acc -= t * cv;
    }
    acc /= lead;
    u.push_back(acc);
  }
  return u;
}

std::vector<Rational> unroll(const Recurrence& rec, std::size_t n) {
  rec.validate();
  if (rec.homogeneous()) return unroll_raw(rec.coeffs, nullptr, rec.initial, n);
  const Poly& g = rec.inhomogeneous;
  return unroll_raw(rec.coeffs, [&g](long j) { return g.eval(Rational(j)); }, rec.initial, n);
}

namespace {

Matrix<Integer> identity(std::size_t r) {
  Matrix<Integer> m(r, std::vector<Integer>(r, Integer(0)));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

Matrix<Integer> mat_mul(const Matrix<Integer>& a, const Matrix<Integer>& b) {
  const std::size_t r = a.size();
  Matrix<Integer> c(r, std::vector<Integer>(r, Integer(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < r; ++j)
        mpz_addmul(c[i][j].get_mpz_t(), a[i][k].get_mpz_t(), b[k][j].get_mpz_t());
    }
  return c;
}

}  // namespace

SplitMatrix combine(const SplitMatrix& left, const SplitMatrix& right) {
  if (left.hi != right.lo) throw Error(ErrorKind::Internal, "split intervals do not touch");
  SplitMatrix out;
  out.m = mat_mul(right.m, left.m);
  out.den = left.den * right.den;
  out.lo = left.lo;
  out.hi = right.hi;
  return out;
}

SplitMatrix split_product(const std::vector<ZPoly>& coeffs, long lo, long hi, long threshold) {
  const std::size_t r = coeffs.size() - 1;
  if (hi - lo > std::max(threshold, 1L)) {
    long mid = lo + (hi - lo) / 2;
    return combine(split_product(coeffs, lo, mid, threshold), split_product(coeffs, mid, hi, threshold));
  }
  SplitMatrix s;
  s.m = identity(r);
  s.den = 1;
  s.lo = lo;
  s.hi = hi;
  std::vector<Integer> cv(r + 1);
  for (long k = lo; k < hi; ++k) {
    for (std::size_t i = 0; i <= r; ++i) eval_at(coeffs[i], k, cv[i]);
    // new = A(k) * m: rows shift up scaled by c_r, last row -sum c_i row_i
    Matrix<Integer> next(r, std::vector<Integer>(r));
    for (std::size_t i = 0; i + 1 < r; ++i)
      for (std::size_t j = 0; j < r; ++j) next[i][j] = cv[r] * s.m[i + 1][j];
    for (std::size_t j = 0; j < r; ++j) {
      Integer acc = 0;
      for (std::size_t i = 0; i < r; ++i) mpz_submul(acc.get_mpz_t(), cv[i].get_mpz_t(), s.m[i][j].get_mpz_t());
      next[r - 1][j] = acc;
    }
    s.m = std::move(next);
    s.den *= cv[r];
  }
  return s;
}

Rational nth_term(const Recurrence& rec, std::size_t n, long threshold) {
  rec.validate();
  if (!rec.homogeneous()) throw Error(ErrorKind::InvalidInput, "nth_term needs a homogeneous recurrence");
  const std::size_t r = static_cast<std::size_t>(rec.order());
  const std::size_t count = std::max<std::size_t>(required_initial_count(rec), r);
  if (n < count + 2 * static_cast<std::size_t>(std::max(threshold, 1L))) return unroll(rec, n + 1)[n];
  if (r == 0) return 0;
  auto init = unroll(rec, count);
  const long start = static_cast<long>(count - r);
  const IntRelation rel = integral(rec.coeffs);
  SplitMatrix s = split_product(rel.coeffs, start, static_cast<long>(n), threshold);
  Integer common = 1;
  for (std::size_t i = 0; i < r; ++i)
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), init[static_cast<std::size_t>(start) + i].get_den_mpz_t());
  Integer acc = 0;
  for (std::size_t j = 0; j < r; ++j) {
    const Rational& v = init[static_cast<std::size_t>(start) + j];
    Integer scaled = v.get_num() * (common / v.get_den());
    mpz_addmul(acc.get_mpz_t(), s.m[0][j].get_mpz_t(), scaled.get_mpz_t());
  }
  return make_rational(acc, s.den * common);
}

std::vector<Rational> series_from_diffeq(const DiffEquation& deq, std::size_t n) {
  deq.validate();
  InducedRecurrence ind = induced_recurrence(deq);
  const auto& rhs = ind.rhs;
  std::function<Rational(long)> f;
  if (!rhs.empty())
    f = [&rhs](long j) {
      auto it = rhs.find(j);
      return it == rhs.end() ? Rational(0) : it->second;
    };
  return unroll_raw(ind.coeffs, f, deq.initial, n);
}

std::vector<Rational> series_from_algeq(const AlgebraicEquation& alg, std::size_t n) {
  DiffEquation deq = algeq_to_diffeq(alg);
  auto s = series_from_diffeq(deq, n);
  for (const auto& v : alg.substitute(s, n))
    if (v != 0) throw Error(ErrorKind::Internal, "series of the differential equation does not satisfy P");
  return s;
}

NamedSpec two_f1(const Rational& a, const Rational& b, const Rational& c) {
  return {NamedKind::TwoF1, a, b, c};
}
NamedSpec pow1p(const Rational& c) { return {NamedKind::Pow1p, 0, 0, c}; }
NamedSpec exp_series() { return {NamedKind::Exp, 0, 0, 0}; }

NamedSeries named_series(const NamedSpec& spec, std::size_t n) {
  NamedSeries out;
  const Poly x{0, 1};
  switch (spec.kind) {
    case NamedKind::TwoF1: {
      if (is_integer(spec.c) && spec.c <= 0)
        throw Error(ErrorKind::InvalidParameter, "2F1 lower parameter must not be a non-positive integer");
      // (n + c)(n + 1) u(n+1) - (n + a)(n + b) u(n) = 0
      out.rec.coeffs = {-(Poly{spec.a, 1} * Poly{spec.b, 1}), Poly{spec.c, 1} * Poly{1, 1}};
      // x(1 - x) y'' + (c - (a + b + 1) x) y' - a b y = 0
      out.deq.coeffs = {Poly{-spec.a * spec.b}, Poly{spec.c, -(spec.a + spec.b + 1)}, Poly{0, 1, -1}};
      break;
    }
    case NamedKind::Pow1p:
      // (n + 1) u(n+1) - (c - n) u(n) = 0
      out.rec.coeffs = {Poly{-spec.c, 1}, Poly{1, 1}};
      out.deq.coeffs = {Poly{-spec.c}, Poly{1, 1}};
      break;
    case NamedKind::Exp:
      out.rec.coeffs = {Poly{-1}, Poly{1, 1}};
      out.deq.coeffs = {Poly{-1}, Poly{1}};
      break;
  }
  out.rec.initial = {1};
  out.deq.initial = {1};
  out.terms = unroll(out.rec, n);
  return out;
}

}  // namespace holo
