#include "holo/guess.hpp"

#include <algorithm>
#include <functional>

#include "holo/convert.hpp"
#include "holo/error.hpp"
#include "holo/eval.hpp"

namespace holo {

std::string to_string(ArithPath p) { return p == ArithPath::Modular ? "modular" : "rational"; }

std::string to_string(SeriesType s) {
  switch (s) {
    case SeriesType::Ordinary: return "ogf";
    case SeriesType::Exponential: return "egf";
    case SeriesType::Auto: return "auto";
  }
  return "ogf";
}

void GuessConfig::validate() const {
  if (margin < 1) throw Error(ErrorKind::InvalidInput, "margin must be at least 1");
  if (validation < 0) throw Error(ErrorKind::InvalidInput, "validation must be non-negative");
  if (max_order < 1) throw Error(ErrorKind::InvalidInput, "max order must be at least 1");
}

namespace {

enum class Kind { Rec, Ode, Alg };

// Falling factorial m (m-1) ... (m-i+1).
Integer falling(long m, long i) {
  Integer r = 1;
  for (long t = 0; t < i; ++t) r *= (m - t);
  return r;
}

u64 falling_mod(long m, long i, u64 p) {
  u64 r = 1;
  for (long t = 0; t < i; ++t) {
    long v = m - t;
    u64 vm = v >= 0 ? static_cast<u64>(v) % p : p - (static_cast<u64>(-v) % p);
    r = mul_mod(r, vm % p, p);
  }
  return r;
}

long rows_of(Kind kind, long a, long n) { return kind == Kind::Alg ? n : n - a; }

std::vector<std::vector<Rational>> powers(const std::vector<Rational>& y, long upto) {
  const std::size_t n = y.size();
  std::vector<std::vector<Rational>> p{std::vector<Rational>(n, Rational(0))};
  if (n > 0) p[0][0] = 1;
  for (long i = 1; i <= upto; ++i) p.push_back(series_mul(p.back(), y, n));
  return p;
}

std::vector<std::vector<u64>> powers_mod(const std::vector<u64>& y, long upto, u64 p) {
  const std::size_t n = y.size();
  std::vector<std::vector<u64>> out{std::vector<u64>(n, 0)};
  if (n > 0) out[0][0] = 1;
  for (long i = 1; i <= upto; ++i) {
    std::vector<u64> r(n, 0);
    const auto& a = out.back();
    for (std::size_t s = 0; s < n; ++s) {
      if (a[s] == 0) continue;
      for (std::size_t t = 0; s + t < n; ++t) r[s + t] = (r[s + t] + a[s] * y[t]) % p;
    }
    out.push_back(std::move(r));
  }
  return out;
}

template <class T, class Pow>
Matrix<T> build(Kind kind, const std::vector<T>& y, const Pow& pw, long a, long b,
                const std::function<T(long, long)>& ff, const std::function<T(long)>& from_long,
                const std::function<T(const T&, const T&)>& mul) {
  const long n = static_cast<long>(y.size());
  const long rows = rows_of(kind, a, n);
  const long cols = (a + 1) * (b + 1);
  Matrix<T> m(static_cast<std::size_t>(std::max(rows, 0L)), std::vector<T>(static_cast<std::size_t>(cols), from_long(0)));
  for (long r = 0; r < rows; ++r)
    for (long i = 0; i <= a; ++i)
      for (long k = 0; k <= b; ++k) {
        T& e = m[r][i * (b + 1) + k];
        switch (kind) {
          case Kind::Rec: {
            // r^k u(r+i)
            T pk = from_long(1);
            for (long t = 0; t < k; ++t) pk = mul(pk, from_long(r));
            e = mul(pk, y[r + i]);
            break;
          }
          case Kind::Ode: {
            long idx = r - k + i;
            if (r - k >= 0) e = mul(ff(idx, i), y[idx]);
            break;
          }
          case Kind::Alg:
            if (r - k >= 0) e = pw[i][r - k];
            break;
        }
      }
  return m;
}

Matrix<Rational> build_q(Kind kind, const std::vector<Rational>& y, const std::vector<std::vector<Rational>>& pw,
                         long a, long b) {
  return build<Rational>(
      kind, y, pw, a, b, [](long m, long i) { return Rational(falling(m, i)); },
      [](long v) { return Rational(v); }, [](const Rational& x, const Rational& z) { return Rational(x * z); });
}

Matrix<u64> build_p(Kind kind, const std::vector<u64>& y, const std::vector<std::vector<u64>>& pw, long a, long b,
                    u64 p) {
  return build<u64>(
      kind, y, pw, a, b, [p](long m, long i) { return falling_mod(m, i, p); },
      [p](long v) { return v >= 0 ? static_cast<u64>(v) % p : p - static_cast<u64>(-v) % p; },
      [p](const u64& x, const u64& z) { return mul_mod(x, z, p); });
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

long max_degree(const std::vector<Poly>& c) {
  long d = 0;
  for (const auto& p : c) d = std::max(d, p.degree());
  return d;
}

std::vector<Poly> to_polys(const std::vector<Rational>& v, long a, long b) {
  std::vector<Poly> c;
  for (long i = 0; i <= a; ++i) {
    std::vector<Rational> q(v.begin() + i * (b + 1), v.begin() + (i + 1) * (b + 1));
    c.emplace_back(q);
  }
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  return c;
}

AlgebraicEquation canonical_alg(std::vector<Poly> c, const Rational& seed) {
  std::vector<ZPoly> z;
  Integer den = 1;
  for (const auto& q : c)
    for (const auto& x : q.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  ZPoly g;
  for (const auto& q : c) {
    z.push_back(to_zpoly(q * Rational(den)));
    if (!z.back().is_zero()) g = g.is_zero() ? primitive_part(z.back()) : gcd(g, z.back());
  }
  Integer cont = 0;
  for (auto& q : z) {
    if (!q.is_zero() && g.degree() > 0) q = divexact(q, g);
    if (!q.is_zero()) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), content(q).get_mpz_t());
  }
  if (z.back().leading() < 0) cont = -cont;
  AlgebraicEquation alg;
  for (auto& q : z) alg.coeffs_y.push_back(to_poly(q.is_zero() ? q : divexact(q, cont)));
  alg.seed = seed;
  return alg;
}

struct Outcome {
  std::optional<Recurrence> rec;
  std::optional<DiffEquation> ode;
  std::optional<AlgebraicEquation> alg;
  long order = 0, degree = 0;
};

// Turns a kernel vector into a relation that annihilates all of `full`.
std::optional<Outcome> accept(Kind kind, const std::vector<Rational>& v, long a, long b,
                              const std::vector<Rational>& full, std::string& why) {
  auto c = to_polys(v, a, b);
  Outcome out;
  const std::size_t n = full.size();
  switch (kind) {
    case Kind::Rec: {
      if (c.size() < 2) return std::nullopt;
      Recurrence r;
      r.coeffs = c;
      r = canonical(r);
      std::size_t need = std::max<std::size_t>(required_initial_count(r), static_cast<std::size_t>(r.order()));
      if (need > n) {
        why = "missing-initial";
        return std::nullopt;
      }
      if (!all_zero(apply_operator(r.op(), full))) return std::nullopt;
      r.initial.assign(full.begin(), full.begin() + static_cast<long>(need));
      out.order = r.order();
      out.degree = max_degree(r.coeffs);
      out.rec = r;
      return out;
    }
    case Kind::Ode: {
      if (c.size() < 2) return std::nullopt;
      DiffEquation d;
      d.coeffs = c;
      d = canonical(d);
      std::size_t need = std::max<std::size_t>(required_initial_count(d), static_cast<std::size_t>(d.order()));
      if (need > n) {
        why = "missing-initial";
        return std::nullopt;
      }
      if (!all_zero(apply_operator(d.op(), full))) return std::nullopt;
      d.initial.assign(full.begin(), full.begin() + static_cast<long>(std::max<std::size_t>(need, 1)));
      out.order = d.order();
      out.degree = max_degree(d.coeffs);
      out.ode = d;
      return out;
    }
    case Kind::Alg: {
      if (c.size() < 2) return std::nullopt;
      AlgebraicEquation alg = canonical_alg(c, full.empty() ? Rational(0) : full[0]);
      if (!all_zero(alg.substitute(full, n))) return std::nullopt;
      out.order = alg.degree_y();
      out.degree = alg.degree_x();
      out.alg = alg;
      return out;
    }
  }
  return std::nullopt;
}

GuessReport sweep(Kind kind, const std::vector<Rational>& terms, const GuessConfig& cfg) {
  GuessReport rep;
  PrimeSet primes;
  const long slack = kind == Kind::Rec ? 1 : 0;
  struct Phase {
    long margin, validation;
    int id;
  };
  std::vector<Phase> phases{{cfg.margin, cfg.validation, 1}};
  if (cfg.short_data && (cfg.validation > 0 || cfg.margin > slack)) phases.push_back({slack, 0, 2});

  for (const auto& ph : phases) {
    const long n_fit = static_cast<long>(terms.size()) - ph.validation;
    if (n_fit <= 1) continue;
    std::vector<Rational> fit(terms.begin(), terms.begin() + n_fit);

    // Precheck prime with every fitted term reducible.
    u64 p0 = 0;
    std::vector<u64> fit_p;
    if (cfg.path == ArithPath::Modular) {
      for (u64 cand = PrimeSet::kBound - 1;; --cand) {
        if (!is_prime(cand)) continue;
        fit_p.clear();
        bool ok = true;
        for (const auto& t : fit) {
          auto r = reduce(t, cand);
          if (!r) {
            ok = false;
            break;
          }
          fit_p.push_back(*r);
        }
        if (ok) {
          p0 = cand;
          break;
        }
      }
    }
    std::vector<std::vector<Rational>> pw;
    std::vector<std::vector<u64>> pw_p;

    for (long a = 1; a <= cfg.max_order; ++a) {
      const long rows = rows_of(kind, a, n_fit);
      long dmax = (rows - ph.margin) / (a + 1) - 1;
      if (rows - ph.margin < a + 1) dmax = -1;
      if (cfg.max_degree >= 0) dmax = std::min(dmax, cfg.max_degree);
      if (dmax < 0) {
        if (kind == Kind::Alg && rows - ph.margin >= a + 1) continue;
        break;
      }
      if (kind == Kind::Alg) {
        if (static_cast<long>(pw.size()) <= a && cfg.path == ArithPath::Rational) pw = powers(fit, a);
        if (static_cast<long>(pw_p.size()) <= a && cfg.path == ArithPath::Modular) pw_p = powers_mod(fit_p, a, p0);
      }
      for (long b = 0; b <= dmax; ++b) {
        SweepEntry entry{a, b, ph.id, "no-kernel"};
        std::vector<std::vector<Rational>> basis;
        if (cfg.path == ArithPath::Modular) {
          Matrix<u64> mp = build_p(kind, fit_p, pw_p, a, b, p0);
          if (rank_mod(mp, p0) == static_cast<std::size_t>((a + 1) * (b + 1))) {
            rep.trace.push_back(entry);
            continue;
          }
          if (kind == Kind::Alg && static_cast<long>(pw.size()) <= a) pw = powers(fit, a);
          basis = modular_kernel(build_q(kind, fit, pw, a, b), primes);
        } else {
          if (kind == Kind::Alg && static_cast<long>(pw.size()) <= a) pw = powers(fit, a);
          basis = rational_kernel(build_q(kind, fit, pw, a, b));
        }
        if (basis.empty()) {
          rep.trace.push_back(entry);
          continue;
        }
        std::string why = "rejected";
        auto got = accept(kind, basis.front(), a, b, terms, why);
        if (!got) {
          entry.outcome = why;
          rep.trace.push_back(entry);
          continue;
        }
        entry.outcome = "found";
        rep.trace.push_back(entry);
        rep.rec = got->rec;
        rep.ode = got->ode;
        rep.alg = got->alg;
        rep.validated = static_cast<std::size_t>(ph.validation);
        rep.primes = primes.primes();
        rep.skipped_primes = primes.skipped();
        if (p0 != 0 && std::find(rep.primes.begin(), rep.primes.end(), p0) == rep.primes.end())
          rep.primes.insert(rep.primes.begin(), p0);
        return rep;
      }
    }
  }
  rep.primes = primes.primes();
  rep.skipped_primes = primes.skipped();
  return rep;
}

std::pair<long, long> size_of(const GuessReport& r) {
  if (r.rec) return {r.rec->order(), max_degree(r.rec->coeffs)};
  if (r.ode) return {r.ode->order(), max_degree(r.ode->coeffs)};
  if (r.alg) return {r.alg->degree_y(), r.alg->degree_x()};
  return {0, 0};
}

GuessReport guess(Kind kind, const std::vector<Rational>& terms, const GuessConfig& cfg) {
  cfg.validate();
  if (terms.size() < 6) throw Error(ErrorKind::NotEnoughData, "guessing needs at least 6 terms");
  std::vector<Rational> egf;
  if (cfg.series != SeriesType::Ordinary) {
    Integer f = 1;
    for (std::size_t n = 0; n < terms.size(); ++n) {
      if (n > 0) f *= static_cast<unsigned long>(n);
      egf.push_back(terms[n] / Rational(f));
    }
  }
  if (cfg.series == SeriesType::Exponential) {
    auto r = sweep(kind, egf, cfg);
    r.series_used = SeriesType::Exponential;
    return r;
  }
  auto o = sweep(kind, terms, cfg);
  o.series_used = SeriesType::Ordinary;
  if (cfg.series == SeriesType::Ordinary) return o;
  auto e = sweep(kind, egf, cfg);
  e.series_used = SeriesType::Exponential;
  if (!e.found()) {
    if (!o.found()) o.trace.insert(o.trace.end(), e.trace.begin(), e.trace.end());
    return o;
  }
  if (!o.found() || size_of(e) < size_of(o)) return e;
  return o;
}

}  // namespace

Matrix<Rational> build_guess_matrix(const std::vector<Rational>& terms, long r, long d) {
  if (r < 0 || d < 0 || static_cast<long>(terms.size()) - r <= 0)
    throw Error(ErrorKind::NotEnoughData, "no equation fits the given terms");
  return build_q(Kind::Rec, terms, {}, r, d);
}

Matrix<Rational> build_ode_matrix(const std::vector<Rational>& series, long s, long d) {
  if (s < 0 || d < 0 || static_cast<long>(series.size()) - s <= 0)
    throw Error(ErrorKind::NotEnoughData, "no equation fits the given coefficients");
  return build_q(Kind::Ode, series, {}, s, d);
}

Matrix<Rational> build_alg_matrix(const std::vector<Rational>& series, long dy, long dx) {
  if (dy < 0 || dx < 0 || series.empty()) throw Error(ErrorKind::NotEnoughData, "no coefficients given");
  return build_q(Kind::Alg, series, powers(series, dy), dy, dx);
}

std::vector<std::vector<Rational>> rational_kernel(const Matrix<Rational>& m) {
  if (m.empty()) return {};
  Matrix<Rational> r = m;
  Echelon e = rref(r);
  return kernel_from_rref(r, e);
}

std::vector<std::vector<Rational>> modular_kernel(const Matrix<Rational>& m, PrimeSet& primes) {
  if (m.empty() || m[0].empty()) return {};
  const std::size_t cols = m[0].size();
  std::optional<std::vector<std::size_t>> best;
  std::vector<std::vector<Integer>> acc;
  std::vector<u64> acc_primes;
  Integer modulus = 1;
  std::size_t idx = 0, bad_run = 0, used = 0;
  while (true) {
    if (bad_run > 40) throw Error(ErrorKind::UnluckyPrimeExhaustion, "too many consecutive unlucky primes");
    if (used > 2000) throw Error(ErrorKind::ReconstructionFailed, "kernel entries did not reconstruct");
    const u64 p = idx < primes.size() ? primes.primes()[idx] : primes.grow();
    Matrix<u64> mp(m.size(), std::vector<u64>(cols));
    bool ok = true;
    for (std::size_t r = 0; r < m.size() && ok; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        auto v = reduce(m[r][c], p);
        if (!v) {
          ok = false;
          break;
        }
        mp[r][c] = *v;
      }
    if (!ok) {
      primes.skip(p);
      ++bad_run;
      continue;
    }
    ++idx;
    ++used;
    Echelon e = rref_mod(mp, p);
    if (e.pivots.size() == cols) return {};
    if (!best || e.pivots.size() > best->size() || (e.pivots.size() == best->size() && e.pivots < *best)) {
      if (best) {
        for (u64 q : acc_primes) primes.skip(q);
        idx -= acc_primes.size();
        ++bad_run;
      }
      best = e.pivots;
      acc.clear();
      acc_primes.clear();
      modulus = 1;
    } else if (e.pivots != *best) {
      primes.skip(p);
      --idx;
      ++bad_run;
      continue;
    }
    bad_run = 0;
    auto ker = kernel_from_rref_mod(mp, e, p);
    if (acc.empty()) acc.assign(ker.size(), std::vector<Integer>(cols, Integer(0)));
    for (std::size_t k = 0; k < ker.size(); ++k)
      for (std::size_t c = 0; c < cols; ++c) {
        Integer x = acc[k][c], mm = modulus;
        crt_accumulate(x, mm, ker[k][c], p);
        acc[k][c] = x;
      }
    modulus *= p;
    acc_primes.push_back(p);
    std::vector<std::vector<Rational>> out;
    bool rec_ok = true;
    for (std::size_t k = 0; k < acc.size() && rec_ok; ++k) {
      std::vector<Rational> v;
      for (const auto& x : acc[k]) {
        auto q = rational_reconstruct(x, modulus);
        if (!q) {
          rec_ok = false;
          break;
        }
        v.push_back(*q);
      }
      out.push_back(std::move(v));
    }
    if (!rec_ok) continue;
    bool verified = true;
    for (const auto& v : out) {
      for (const auto& row : m) {
        Rational s = 0;
        for (std::size_t c = 0; c < cols; ++c)
          if (v[c] != 0 && row[c] != 0) s += row[c] * v[c];
        if (s != 0) {
          verified = false;
          break;
        }
      }
      if (!verified) break;
    }
    if (verified) return out;
  }
}

GuessReport guess_rec(const std::vector<Rational>& terms, const GuessConfig& cfg) { return guess(Kind::Rec, terms, cfg); }
GuessReport guess_diffeq(const std::vector<Rational>& terms, const GuessConfig& cfg) {
  return guess(Kind::Ode, terms, cfg);
}
GuessReport guess_algeq(const std::vector<Rational>& terms, const GuessConfig& cfg) {
  return guess(Kind::Alg, terms, cfg);
}

}  // namespace holo
