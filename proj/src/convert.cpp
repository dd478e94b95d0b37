#include "holo/convert.hpp"

#include <algorithm>

#include "holo/error.hpp"
#include "holo/eval.hpp"

namespace holo {

InducedRecurrence induced_recurrence(const DiffEquation& deq) {
  deq.validate();
  long kmin = 0, kmax = 0;
  bool first = true;
  for (std::size_t i = 0; i < deq.coeffs.size(); ++i) {
    const auto& p = deq.coeffs[i].coeffs();
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] == 0) continue;
      long k = static_cast<long>(i) - static_cast<long>(j);
      if (first) {
        kmin = kmax = k;
        first = false;
      }
      kmin = std::min(kmin, k);
      kmax = std::max(kmax, k);
    }
  }
  InducedRecurrence out;
  out.offset = kmin;
  out.coeffs.assign(static_cast<std::size_t>(kmax - kmin + 1), Poly());
  for (std::size_t i = 0; i < deq.coeffs.size(); ++i) {
    const auto& p = deq.coeffs[i].coeffs();
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] == 0) continue;
      long t = static_cast<long>(i) - static_cast<long>(j) - kmin;
      // p_ij (n + t)(n + t - 1)...(n + t - i + 1)
      out.coeffs[static_cast<std::size_t>(t)] += falling_factorial_poly(static_cast<long>(i)).shift(Rational(t)) * p[j];
    }
  }
  const auto& q = deq.inhomogeneous.coeffs();
  for (std::size_t m = 0; m < q.size(); ++m) {
    long n = static_cast<long>(m) + kmin;
    if (n >= 0 && q[m] != 0) out.rhs[n] = q[m];
  }
  return out;
}

std::vector<Poly> theta_to_diff(const Poly& c) {
  const long deg = c.degree();
  if (deg < 0) return {};
  // Stirling numbers of the second kind S(m, j), m <= deg.
  std::vector<std::vector<Integer>> s(static_cast<std::size_t>(deg + 1));
  for (long m = 0; m <= deg; ++m) {
    s[m].assign(static_cast<std::size_t>(m + 1), Integer(0));
    if (m == 0) {
      s[0][0] = 1;
      continue;
    }
    for (long j = 1; j <= m; ++j) {
      Integer v = s[m - 1].size() > static_cast<std::size_t>(j) ? s[m - 1][j] * j : Integer(0);
      v += s[m - 1][j - 1];
      s[m][j] = v;
    }
  }
  std::vector<Poly> out(static_cast<std::size_t>(deg + 1));
  for (long j = 0; j <= deg; ++j) {
    Rational b = 0;
    for (long m = j; m <= deg; ++m) b += c[m] * Rational(s[m][j]);
    out[j] = Poly::monomial(static_cast<std::size_t>(j), b);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

namespace {

// Prefix of the sequence defined by rec, as long as the given initial terms
// allow, capped at `want` (and never shorter than rec.initial).
std::vector<Rational> extend_rec_initial(const Recurrence& rec, std::size_t want) {
  if (rec.initial.size() >= want) return rec.initial;
  try {
    return unroll(rec, want);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::MissingInitialTerms) throw;
    return rec.initial;
  }
}

std::vector<Rational> extend_ode_initial(const DiffEquation& deq, std::size_t want) {
  if (deq.initial.size() >= want) return deq.initial;
  try {
    return series_from_diffeq(deq, want);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::MissingInitialTerms) throw;
    return deq.initial;
  }
}

}  // namespace

Homogenized<DiffEquation> homogenize_diffeq(const DiffEquation& deq) {
  deq.validate();
  if (deq.homogeneous()) return {deq, true};
  const Poly& q = deq.inhomogeneous;
  OreOperator left = OreOperator::from_polys(OreKind::Differential, deq.var, {-q.derivative(), q});
  DiffEquation out = diffeq_from_op(ore_mul(left, deq.op()));
  out.initial = extend_ode_initial(deq, std::max<std::size_t>(required_initial_count(out), deq.initial.size()));
  return {out, false};
}

Homogenized<Recurrence> homogenize_rec(const Recurrence& rec) {
  rec.validate();
  if (rec.homogeneous()) return {rec, true};
  const long e = rec.inhomogeneous.degree();
  OreOperator s1 = OreOperator::from_polys(OreKind::Shift, rec.var, {Poly{-1}, Poly{1}});
  OreOperator left = s1;
  for (long i = 0; i < e; ++i) left = ore_mul(s1, left);
  Recurrence out = recurrence_from_op(ore_mul(left, rec.op()));
  out.initial = extend_rec_initial(rec, std::max<std::size_t>(required_initial_count(out), rec.initial.size()));
  return {out, false};
}

DiffEquation rec_to_diffeq(const Recurrence& input) {
  input.validate();
  Recurrence rec = input.homogeneous() ? input : homogenize_rec(input).relation;
  const long r = rec.order();
  if (static_cast<long>(rec.initial.size()) < r)
    throw Error(ErrorKind::MissingInitialTerms, "rec_to_diffeq needs the first " + std::to_string(r) + " terms");
  // x^r * sum_k x^-k c_k(theta - k) (f - T_k) = 0, T_k = sum_{m<k} u_m x^m.
  std::vector<Poly> ops;
  Poly rhs;
  for (long k = 0; k <= r; ++k) {
    const Poly& ck = rec.coeffs[static_cast<std::size_t>(k)];
    if (ck.is_zero()) continue;
    auto parts = theta_to_diff(ck.shift(Rational(-k)));
    if (parts.size() > ops.size()) ops.resize(parts.size());
    for (std::size_t j = 0; j < parts.size(); ++j) ops[j] += parts[j].shift_up(static_cast<std::size_t>(r - k));
    for (long m = 0; m < k; ++m) {
      Rational v = rec.initial[static_cast<std::size_t>(m)] * ck.eval(Rational(m - k));
      if (v != 0) rhs += Poly::monomial(static_cast<std::size_t>(m + r - k), v);
    }
  }
  while (!ops.empty() && ops.back().is_zero()) ops.pop_back();
  DiffEquation deq;
  deq.coeffs = std::move(ops);
  deq.inhomogeneous = std::move(rhs);
  deq.var = "x";
  deq = canonical(deq);
  if (deq.order() == 0 && !deq.homogeneous()) {
    deq.initial = rec.initial;
    deq = homogenize_diffeq(deq).relation;
  }
  deq.initial = extend_rec_initial(rec, std::max<std::size_t>(required_initial_count(deq), rec.initial.size()));
  return deq;
}

Recurrence diffeq_to_rec(const DiffEquation& deq) {
  InducedRecurrence ind = induced_recurrence(deq);
  Recurrence rec;
  rec.coeffs = ind.coeffs;
  if (!ind.rhs.empty()) {
    Poly kill{1};
    for (const auto& [n0, v] : ind.rhs) kill *= Poly{Rational(-n0), 1};
    for (auto& c : rec.coeffs) c *= kill;
  }
  rec = canonical(rec);
  std::size_t want = std::max<std::size_t>(required_initial_count(rec), deq.initial.size());
  if (deq.initial.size() >= want) {
    rec.initial = deq.initial;
  } else {
    try {
      rec.initial = series_from_diffeq(deq, want);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::MissingInitialTerms) throw;
      rec.initial = deq.initial;
    }
  }
  return rec;
}

std::vector<Rational> algebraic_series(const AlgebraicEquation& alg, std::size_t n) {
  const auto& P = alg.coeffs_y;
  const long d = alg.degree_y();
  if (d < 0) throw Error(ErrorKind::ZeroPolynomial, "P is zero");
  std::vector<Rational> y(n, Rational(0));
  if (n == 0) return y;
  const Rational y0 = alg.seed;
  Rational p0 = 0, py = 0, pw = 1;
  for (long i = 0; i <= d; ++i) {
    p0 += P[i][0] * pw;
    if (i + 1 <= d) py += P[i + 1][0] * pw * (i + 1);
    pw *= y0;
  }
  if (p0 != 0) throw Error(ErrorKind::InvalidInput, "seed is not a root of P(0, y)");
  if (py == 0) throw Error(ErrorKind::SingularSeed, "dP/dy vanishes at (0, seed)");
  y[0] = y0;
  // pw_[i][m] = [x^m] y^i, maintained online.
  std::vector<std::vector<Rational>> pows(static_cast<std::size_t>(d + 1), std::vector<Rational>(n, Rational(0)));
  pows[0][0] = 1;
  for (long i = 1; i <= d; ++i) pows[i][0] = pows[i - 1][0] * y0;
  std::vector<Rational> dpow(static_cast<std::size_t>(d + 1));  // i * y0^(i-1)
  for (long i = 1; i <= d; ++i) dpow[i] = (i == 1 ? Rational(1) : pows[i - 1][0] * i);
  for (std::size_t m = 1; m < n; ++m) {
    for (long i = 1; i <= d; ++i) {
      Rational acc = 0;
      for (std::size_t l = 0; l < m; ++l)
        if (pows[i - 1][l] != 0 && y[m - l] != 0) acc += pows[i - 1][l] * y[m - l];
      acc += pows[i - 1][m] * y0;
      pows[i][m] = acc;
    }
    Rational c = 0;
    for (long i = 0; i <= d; ++i) {
      const auto& pc = P[i].coeffs();
      for (std::size_t k = 0; k < pc.size() && k <= m; ++k)
        if (pc[k] != 0) c += pc[k] * pows[i][m - k];
    }
    Rational ym = -c / py;
    y[m] = ym;
    if (ym != 0)
      for (long i = 1; i <= d; ++i) pows[i][m] += dpow[i] * ym;
  }
  return y;
}

}  // namespace holo
