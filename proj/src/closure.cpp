#include "holo/closure.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "holo/convert.hpp"
#include "holo/error.hpp"
#include "holo/eval.hpp"
#include "holo/linalg.hpp"

namespace holo {

namespace {

using Vec = std::vector<RatFun>;

// First Q(x)-dependency among v, next(v), next(next(v)), ...; returns its
// coefficients as polynomials, lowest first.
std::vector<Poly> first_dependency(Vec v, const std::function<Vec(const Vec&)>& next, std::size_t max_len) {
  PolyDependency dep(v.size());
  std::vector<Poly> scale;
  for (std::size_t k = 0; k <= max_len; ++k) {
    if (k > 0) v = next(v);
    Poly L{1};
    for (const auto& c : v)
      if (!c.is_polynomial()) L = divexact(L * c.den(), gcd(L, c.den()));
    std::vector<Poly> w;
    for (const auto& c : v) w.push_back(divexact(L, c.den()) * c.num());
    scale.push_back(L);
    if (auto res = dep.add(w)) {
      std::vector<Poly> out;
      for (std::size_t j = 0; j < res->size(); ++j) out.push_back((*res)[j] * scale[j]);
      return out;
    }
  }
  throw Error(ErrorKind::Internal, "closure ansatz found no dependency");
}

Recurrence homogeneous(const Recurrence& r) {
  r.validate();
  return r.homogeneous() ? r : homogenize_rec(r).relation;
}

DiffEquation homogeneous(const DiffEquation& d) {
  d.validate();
  return d.homogeneous() ? d : homogenize_diffeq(d).relation;
}

// Order 0 with nonzero coefficient forces u(n) = 0 wherever c_0(n) != 0.
bool is_zero_sequence(const Recurrence& r) { return r.order() == 0; }
bool is_zero_series(const DiffEquation& d) { return d.order() == 0; }

Recurrence zero_recurrence(const std::string& var) {
  Recurrence z;
  z.coeffs = {Poly{1}};
  z.var = var;
  return z;
}

long bad_bound(const Recurrence& a, const Recurrence& b) {
  return std::max(largest_nonnegative_integer_root(a.coeffs.back()),
                  largest_nonnegative_integer_root(b.coeffs.back()));
}

// Makes rec hold at every n in [0, bound] on the given terms by multiplying
// with n - n0 where it fails, then attaches initial terms.
Recurrence finish(Recurrence rec, long bound, const std::function<std::vector<Rational>(std::size_t)>& terms_of) {
  rec = canonical(rec);
  const long r = rec.order();
  if (bound >= 0) {
    auto t = terms_of(static_cast<std::size_t>(bound + r + 1));
    Poly fix{1};
    for (long n0 = 0; n0 <= bound; ++n0) {
      Rational acc = 0;
      for (long i = 0; i <= r; ++i) acc += rec.coeffs[i].eval(Rational(n0)) * t[n0 + i];
      if (acc != 0) fix *= Poly{Rational(-n0), 1};
    }
    if (fix.degree() > 0) {
      for (auto& c : rec.coeffs) c *= fix;
      rec = canonical(rec);
    }
  }
  std::size_t want = std::max<std::size_t>(required_initial_count(rec), static_cast<std::size_t>(r));
  rec.initial = terms_of(want);
  return rec;
}

}  // namespace

Recurrence rec_add(const Recurrence& a0, const Recurrence& b0) {
  Recurrence a = homogeneous(a0), b = homogeneous(b0);
  if (is_zero_sequence(a)) return b;
  if (is_zero_sequence(b)) return a;
  auto terms = [&](std::size_t n) {
    auto u = unroll(a, n), v = unroll(b, n);
    for (std::size_t i = 0; i < n; ++i) u[i] += v[i];
    return u;
  };
  Recurrence out = recurrence_from_op(lclm(a.op(), b.op()));
  out.var = a.var;
  return finish(out, bad_bound(a, b), terms);
}

Recurrence rec_mul(const Recurrence& a0, const Recurrence& b0) {
  Recurrence a = homogeneous(a0), b = homogeneous(b0);
  if (is_zero_sequence(a) || is_zero_sequence(b)) return zero_recurrence(a.var);
  const std::size_t r1 = static_cast<std::size_t>(a.order()), r2 = static_cast<std::size_t>(b.order());
  // Coordinates on u(n+i) v(n+j), index i * r2 + j.
  std::vector<RatFun> ra, rb;
  for (std::size_t k = 0; k < r1; ++k) ra.push_back(-(RatFun(a.coeffs[k]) / RatFun(a.coeffs[r1])));
  for (std::size_t k = 0; k < r2; ++k) rb.push_back(-(RatFun(b.coeffs[k]) / RatFun(b.coeffs[r2])));
  auto next = [&](const Vec& v) {
    Vec out(r1 * r2);
    for (std::size_t i = 0; i < r1; ++i)
      for (std::size_t j = 0; j < r2; ++j) {
        const RatFun& c = v[i * r2 + j];
        if (c.is_zero()) continue;
        RatFun s = ore_sigma(OreKind::Shift, c);
        // u(n+i+1) v(n+j+1)
        std::vector<std::pair<std::size_t, RatFun>> us, vs;
        if (i + 1 < r1) us.push_back({i + 1, RatFun(1)});
        else
          for (std::size_t k = 0; k < r1; ++k) us.push_back({k, ra[k]});
        if (j + 1 < r2) vs.push_back({j + 1, RatFun(1)});
        else
          for (std::size_t k = 0; k < r2; ++k) vs.push_back({k, rb[k]});
        for (const auto& [ui, uc] : us) {
          if (uc.is_zero()) continue;
          RatFun su = s * uc;
          for (const auto& [vi, vc] : vs)
            if (!vc.is_zero()) out[ui * r2 + vi] += su * vc;
        }
      }
    return out;
  };
  Vec start(r1 * r2);
  start[0] = RatFun(1);
  auto c = first_dependency(start, next, r1 * r2 + 1);
  Recurrence out;
  out.coeffs = c;
  out.var = a.var;
  auto terms = [&](std::size_t n) {
    auto u = unroll(a, n), v = unroll(b, n);
    for (std::size_t i = 0; i < n; ++i) u[i] *= v[i];
    return u;
  };
  return finish(out, bad_bound(a, b), terms);
}

Recurrence geometric_scale(const Recurrence& r, const Rational& w) {
  if (w == 0) throw Error(ErrorKind::ZeroRatio, "geometric ratio must be nonzero");
  Recurrence g;
  g.coeffs = {Poly{-w}, Poly{1}};
  g.initial = {1};
  g.var = r.var;
  return rec_mul(r, g);
}

namespace {

std::vector<Rational> series_of(const DiffEquation& d, std::size_t n) { return series_from_diffeq(d, n); }

DiffEquation finish(DiffEquation d, const std::function<std::vector<Rational>(std::size_t)>& series) {
  std::size_t want = std::max<std::size_t>(required_initial_count(d), static_cast<std::size_t>(d.order()));
  d.initial = series(std::max<std::size_t>(want, 1));
  return d;
}

std::vector<RatFun> reduction(const DiffEquation& d) {
  const std::size_t s = static_cast<std::size_t>(d.order());
  std::vector<RatFun> r;
  for (std::size_t k = 0; k < s; ++k) r.push_back(-(RatFun(d.coeffs[k]) / RatFun(d.coeffs[s])));
  return r;
}

}  // namespace

DiffEquation diffeq_add(const DiffEquation& a0, const DiffEquation& b0) {
  DiffEquation a = homogeneous(a0), b = homogeneous(b0);
  if (is_zero_series(a)) return b;
  if (is_zero_series(b)) return a;
  DiffEquation out = diffeq_from_op(lclm(a.op(), b.op()));
  out.var = a.var;
  return finish(out, [&](std::size_t n) {
    auto u = series_of(a, n), v = series_of(b, n);
    for (std::size_t i = 0; i < n; ++i) u[i] += v[i];
    return u;
  });
}

DiffEquation diffeq_mul(const DiffEquation& a0, const DiffEquation& b0) {
  DiffEquation a = homogeneous(a0), b = homogeneous(b0);
  if (is_zero_series(a)) return a;
  if (is_zero_series(b)) return b;
  const std::size_t s1 = static_cast<std::size_t>(a.order()), s2 = static_cast<std::size_t>(b.order());
  auto ra = reduction(a), rb = reduction(b);
  auto next = [&](const Vec& v) {
    Vec out(s1 * s2);
    for (std::size_t i = 0; i < s1; ++i)
      for (std::size_t j = 0; j < s2; ++j) {
        const RatFun& c = v[i * s2 + j];
        if (c.is_zero()) continue;
        out[i * s2 + j] += c.derivative();
        if (i + 1 < s1) out[(i + 1) * s2 + j] += c;
        else
          for (std::size_t k = 0; k < s1; ++k)
            if (!ra[k].is_zero()) out[k * s2 + j] += c * ra[k];
        if (j + 1 < s2) out[i * s2 + j + 1] += c;
        else
          for (std::size_t k = 0; k < s2; ++k)
            if (!rb[k].is_zero()) out[i * s2 + k] += c * rb[k];
      }
    return out;
  };
  Vec start(s1 * s2);
  start[0] = RatFun(1);
  DiffEquation out;
  out.coeffs = first_dependency(start, next, s1 * s2 + 1);
  out.var = a.var;
  out = canonical(out);
  return finish(out, [&](std::size_t n) { return series_mul(series_of(a, n), series_of(b, n), n); });
}

DiffEquation diffeq_pow(const DiffEquation& a0, unsigned k) {
  DiffEquation a = homogeneous(a0);
  if (k == 0) {
    DiffEquation one;
    one.coeffs = {Poly(), Poly{1}};
    one.initial = {1};
    one.var = a.var;
    return one;
  }
  if (k == 1 || is_zero_series(a)) return a;
  const std::size_t s = static_cast<std::size_t>(a.order());
  auto ra = reduction(a);
  // Exponent vectors of total degree k in s variables.
  std::vector<std::vector<unsigned>> mons;
  std::map<std::vector<unsigned>, std::size_t> index;
  std::vector<unsigned> e(s, 0);
  std::function<void(std::size_t, unsigned)> gen = [&](std::size_t pos, unsigned left) {
    if (pos + 1 == s) {
      e[pos] = left;
      index[e] = mons.size();
      mons.push_back(e);
      return;
    }
    for (unsigned t = left + 1; t-- > 0;) {
      e[pos] = t;
      gen(pos + 1, left - t);
    }
  };
  gen(0, k);
  auto next = [&](const Vec& v) {
    Vec out(mons.size());
    for (std::size_t m = 0; m < mons.size(); ++m) {
      const RatFun& c = v[m];
      if (c.is_zero()) continue;
      out[m] += c.derivative();
      for (std::size_t i = 0; i < s; ++i) {
        if (mons[m][i] == 0) continue;
        auto base = mons[m];
        RatFun f = c * RatFun(static_cast<long>(base[i]));
        base[i] -= 1;
        if (i + 1 < s) {
          base[i + 1] += 1;
          out[index.at(base)] += f;
        } else {
          for (std::size_t j = 0; j < s; ++j) {
            if (ra[j].is_zero()) continue;
            auto t = base;
            t[j] += 1;
            out[index.at(t)] += f * ra[j];
          }
        }
      }
    }
    return out;
  };
  Vec start(mons.size());
  std::vector<unsigned> fk(s, 0);
  fk[0] = k;
  start[index.at(fk)] = RatFun(1);
  DiffEquation out;
  out.coeffs = first_dependency(start, next, mons.size() + 1);
  out.var = a.var;
  out = canonical(out);
  return finish(out, [&](std::size_t n) {
    auto f = series_of(a, n);
    std::vector<Rational> p(n, Rational(0));
    if (n > 0) p[0] = 1;
    for (unsigned i = 0; i < k; ++i) p = series_mul(p, f, n);
    return p;
  });
}

DiffEquation diffeq_apply(const DiffEquation& a0, const std::vector<Poly>& m) {
  DiffEquation a = homogeneous(a0);
  const std::size_t s = static_cast<std::size_t>(a.order());
  OreOperator M = OreOperator::from_polys(OreKind::Differential, a.var, m);
  if (s == 0 || M.is_zero()) {
    DiffEquation z;
    z.coeffs = {Poly{1}};
    z.var = a.var;
    return z;
  }
  auto ra = reduction(a);
  auto next = [&](const Vec& v) {
    Vec out(s);
    for (std::size_t i = 0; i < s; ++i) {
      const RatFun& c = v[i];
      if (c.is_zero()) continue;
      out[i] += c.derivative();
      if (i + 1 < s) out[i + 1] += c;
      else
        for (std::size_t k = 0; k < s; ++k) out[k] += c * ra[k];
    }
    return out;
  };
  Vec start(s);
  {
    Vec cur(s);
    cur[0] = RatFun(1);
    for (std::size_t i = 0; i < M.coeffs().size(); ++i) {
      if (i > 0) cur = next(cur);
      for (std::size_t k = 0; k < s; ++k) start[k] += M.coeffs()[i] * cur[k];
    }
  }
  bool zero = std::all_of(start.begin(), start.end(), [](const RatFun& c) { return c.is_zero(); });
  DiffEquation out;
  out.var = a.var;
  if (zero) {
    out.coeffs = {Poly{1}};
    return out;
  }
  out.coeffs = first_dependency(start, next, s + 1);
  out = canonical(out);
  return finish(out, [&](std::size_t n) {
    auto f = series_of(a, n + static_cast<std::size_t>(M.order()));
    auto g = apply_operator(M, f);
    g.resize(n, Rational(0));
    return g;
  });
}

}  // namespace holo
