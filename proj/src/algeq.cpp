#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "holo/convert.hpp"
#include "holo/error.hpp"
#include "holo/eval.hpp"
#include "holo/linalg.hpp"
#include "holo/modular.hpp"

namespace holo {

namespace {

// ---------------------------------------------------------------------------
// Dense polynomials over F_p, lowest degree first, no trailing zeros.

using Vp = std::vector<u64>;

void trim(Vp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vp pmul(const Vp& a, const Vp& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Vp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Vp psub(Vp a, const Vp& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub_mod(a[i], b[i], p);
  trim(a);
  return a;
}

Vp pscale(Vp a, u64 s, u64 p) {
  for (auto& v : a) v = mul_mod(v, s, p);
  trim(a);
  return a;
}

std::pair<Vp, Vp> pdivmod(Vp a, const Vp& b, u64 p) {
  Vp q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  const u64 inv = inv_mod(b.back(), p);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    u64 c = mul_mod(a[k], inv, p);
    q[k - (b.size() - 1)] = c;
    if (c != 0)
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::size_t idx = k - (b.size() - 1) + i;
        a[idx] = sub_mod(a[idx], mul_mod(c, b[i], p), p);
      }
    if (k == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

Vp pderiv(const Vp& a, u64 p) {
  Vp r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mul_mod(a[i], i % p, p));
  trim(r);
  return r;
}

std::size_t pgcd_degree(Vp a, Vp b, u64 p) {
  while (!b.empty()) {
    auto r = pdivmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Inverse of a modulo m, or nullopt when they share a factor.
std::optional<Vp> pinv(const Vp& a, const Vp& m, u64 p) {
  Vp r0 = m, r1 = pdivmod(a, m, p).second, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = pdivmod(r0, r1, p);
    Vp t = psub(t0, pmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.size() != 1) return std::nullopt;
  return pscale(t0, inv_mod(r0[0], p), p);
}

u64 peval(const Vp& a, u64 x, u64 p) {
  u64 acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = (acc * x + a[i]) % p;
  return acc;
}

// ---------------------------------------------------------------------------
// The ring F_p[z]/(m) with m monic of degree d; elements have exactly d slots.

struct Ring {
  Vp m;  // monic, size d + 1
  std::size_t d;
  u64 p;

  Vp mul(const Vp& a, const Vp& b) const {
    std::vector<u64> r(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    for (std::size_t k = 2 * d - 1; k-- > d;) {
      u64 c = r[k];
      if (c == 0) continue;
      for (std::size_t i = 0; i < d; ++i) r[k - d + i] = sub_mod(r[k - d + i], mul_mod(c, m[i], p), p);
    }
    r.resize(d);
    return r;
  }
  void addmul(Vp& acc, const Vp& a, u64 s) const {
    if (s == 0) return;
    for (std::size_t i = 0; i < d; ++i) acc[i] = (acc[i] + a[i] * s) % p;
  }
  Vp embed(Vp a) const {
    a = pdivmod(std::move(a), m, p).second;
    a.resize(d, 0);
    return a;
  }
};

struct ModularP {
  std::vector<std::vector<u64>> coeffs;  // coeffs[i] = P_i(x) mod p
  u64 p;
};

std::optional<ModularP> reduce_p(const std::vector<ZPoly>& P, u64 p) {
  ModularP out{{}, p};
  for (const auto& c : P) {
    Vp v;
    for (const auto& a : c.coeffs()) v.push_back(reduce(a, p));
    trim(v);
    out.coeffs.push_back(std::move(v));
  }
  if (out.coeffs.back().empty()) return std::nullopt;
  return out;
}

// P(x0 + t, y) as coefficient lists in t for every power of y.
std::vector<Vp> shifted(const ModularP& P, u64 x0) {
  std::vector<Vp> out;
  const u64 p = P.p;
  for (const auto& c : P.coeffs) {
    Vp a = c;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) a[j - 1] = (a[j - 1] + x0 * a[j]) % p;
    out.push_back(std::move(a));
  }
  return out;
}

// Values at x = x0 of 1, y, y', ..., y^(order) as elements of
// F_p[z]/(P(x0, z)); nullopt when x0 is a bad point.
std::optional<std::vector<Vp>> jets(const ModularP& P, u64 x0, std::size_t order) {
  const u64 p = P.p;
  const std::size_t d = P.coeffs.size() - 1;
  auto Q = shifted(P, x0);
  Vp m;
  for (const auto& q : Q) m.push_back(q.empty() ? 0 : q[0]);
  if (m.back() == 0) return std::nullopt;
  m = pscale(m, inv_mod(m.back(), p), p);
  Vp py = pderiv(m, p);
  if (pgcd_degree(m, py, p) != 0) return std::nullopt;
  Ring A{m, d, p};
  auto ipy = pinv(py, m, p);
  if (!ipy) return std::nullopt;
  // P_y(x0, z) is lc * m'(z); fold the lc into the inverse.
  const u64 lc = Q.back().empty() ? 0 : Q.back()[0];
  Vp inv_py = A.embed(pscale(*ipy, inv_mod(lc, p), p));

  const std::size_t M = order + 1;
  std::vector<Vp> Y(M, Vp(d, 0));
  Y[0] = A.embed(Vp{0, 1});
  std::vector<std::vector<Vp>> pows(d + 1, std::vector<Vp>(M, Vp(d, 0)));
  pows[0][0] = A.embed(Vp{1});
  for (std::size_t i = 1; i <= d; ++i) pows[i][0] = A.mul(pows[i - 1][0], Y[0]);
  std::vector<Vp> dpow(d + 1, Vp(d, 0));
  for (std::size_t i = 1; i <= d; ++i) {
    dpow[i] = pows[i - 1][0];
    for (auto& v : dpow[i]) v = mul_mod(v, i % p, p);
  }
  for (std::size_t mm = 1; mm < M; ++mm) {
    for (std::size_t i = 1; i <= d; ++i) {
      Vp acc = A.mul(pows[i - 1][mm], Y[0]);
      for (std::size_t l = 1; l < mm; ++l) {
        Vp t = A.mul(pows[i - 1][l], Y[mm - l]);
        for (std::size_t k = 0; k < d; ++k) acc[k] = add_mod(acc[k], t[k], p);
      }
      pows[i][mm] = std::move(acc);
    }
    Vp c(d, 0);
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t k = 0; k < Q[i].size() && k <= mm; ++k) A.addmul(c, pows[i][mm - k], Q[i][k]);
    Vp ym = A.mul(c, inv_py);
    for (auto& v : ym) v = v == 0 ? 0 : p - v;
    Y[mm] = ym;
    for (std::size_t i = 1; i <= d; ++i) {
      Vp t = A.mul(dpow[i], ym);
      for (std::size_t k = 0; k < d; ++k) pows[i][mm][k] = add_mod(pows[i][mm][k], t[k], p);
    }
  }
  std::vector<Vp> out;
  out.push_back(A.embed(Vp{1}));
  u64 fact = 1;
  for (std::size_t j = 0; j < M; ++j) {
    if (j > 0) fact = mul_mod(fact, j % p, p);
    Vp v = Y[j];
    for (auto& e : v) e = mul_mod(e, fact, p);
    out.push_back(std::move(v));
  }
  return out;
}

// Kernel of the columns v_0..v_k; returns the vector normalized at column k
// when the kernel is exactly one-dimensional with free column k.
std::optional<std::vector<u64>> point_kernel(const std::vector<Vp>& v, std::size_t k, u64 p) {
  const std::size_t d = v[0].size();
  Matrix<u64> mat(d, std::vector<u64>(k + 1));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c <= k; ++c) mat[r][c] = v[c][r];
  Echelon e = rref_mod(mat, p);
  auto fr = e.free_columns();
  if (fr.size() != 1 || fr[0] != k) return std::nullopt;
  return kernel_from_rref_mod(mat, e, p)[0];
}

// Rational function N/D through the first k points, checked on the rest.
std::optional<std::pair<Vp, Vp>> rational_interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys,
                                                      std::size_t k, u64 p) {
  // Newton form, then expanded.
  std::vector<u64> dd(ys.begin(), ys.begin() + static_cast<long>(k));
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = k - 1; i >= j; --i) {
      u64 num = sub_mod(dd[i], dd[i - 1], p);
      u64 den = sub_mod(xs[i], xs[i - j], p);
      dd[i] = mul_mod(num, inv_mod(den, p), p);
      if (i == j) break;
    }
  Vp f, basis{1}, mod{1};
  for (std::size_t i = 0; i < k; ++i) {
    f = psub(f, pscale(basis, dd[i] == 0 ? 0 : p - dd[i], p), p);
    basis = pmul(basis, Vp{xs[i] == 0 ? 0 : p - xs[i], 1}, p);
  }
  mod = basis;
  trim(f);
  // Extended Euclid on (mod, f); keep the step with the largest quotient.
  Vp r0 = mod, r1 = f, t0, t1{1};
  std::optional<std::pair<Vp, Vp>> best;
  long best_q = -1;
  while (!r1.empty()) {
    long qdeg = static_cast<long>(r0.size()) - static_cast<long>(r1.size());
    // candidate (r1, t1) is valid; its quality is the degree of the quotient that produced it
    if (qdeg > best_q || !best) {
      best_q = qdeg;
      best = std::make_pair(r1, t1);
    }
    auto [q, r] = pdivmod(r0, r1, p);
    Vp t = psub(t0, pmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  // Validate every Euclid candidate by size, smallest first, on the extra points.
  auto check = [&](const Vp& n, const Vp& dn) {
    for (std::size_t i = k; i < xs.size(); ++i) {
      u64 dv = peval(dn, xs[i], p);
      if (dv == 0) return false;
      if (mul_mod(peval(n, xs[i], p), inv_mod(dv, p), p) != ys[i]) return false;
    }
    for (std::size_t i = 0; i < k; ++i)
      if (peval(dn, xs[i], p) == 0) return false;
    return true;
  };
  if (f.empty()) {
    if (check(Vp{}, Vp{1})) return std::make_pair(Vp{}, Vp{1});
    return std::nullopt;
  }
  if (best && check(best->first, best->second)) {
    u64 s = inv_mod(best->second.back(), p);
    return std::make_pair(pscale(best->first, s, p), pscale(best->second, s, p));
  }
  return std::nullopt;
}

struct PrimeResult {
  std::vector<Vp> c;  // polynomial coefficients c_0..c_s, c_s monic
  std::vector<long> signature;
};

Vp plcm(const Vp& a, const Vp& b, u64 p) {
  Vp g = a, h = b;
  while (!h.empty()) {
    auto r = pdivmod(g, h, p).second;
    g = std::move(h);
    h = std::move(r);
  }
  Vp l = pdivmod(pmul(a, b, p), g, p).first;
  return pscale(l, inv_mod(l.back(), p), p);
}

std::optional<PrimeResult> solve_prime(const ModularP& P, std::size_t s, std::size_t& npoints, std::mt19937_64& rng) {
  const u64 p = P.p;
  while (npoints <= 4096) {
    const std::size_t extra = 6;
    std::vector<u64> xs;
    std::vector<std::vector<u64>> vals(s + 1);
    std::size_t attempts = 0;
    while (xs.size() < npoints + extra && attempts < 4 * (npoints + extra) + 100) {
      ++attempts;
      u64 x0 = rng() % p;
      if (std::find(xs.begin(), xs.end(), x0) != xs.end()) continue;
      auto j = jets(P, x0, s - 1);
      if (!j) continue;
      auto ker = point_kernel(*j, s, p);
      if (!ker) continue;
      xs.push_back(x0);
      for (std::size_t i = 0; i <= s; ++i) vals[i].push_back((*ker)[i]);
    }
    if (xs.size() < npoints + extra) return std::nullopt;
    std::vector<std::pair<Vp, Vp>> fr;
    bool ok = true;
    for (std::size_t i = 0; i < s && ok; ++i) {
      auto r = rational_interpolate(xs, vals[i], npoints, p);
      if (!r) ok = false;
      else fr.push_back(*r);
    }
    if (!ok) {
      npoints *= 2;
      continue;
    }
    Vp L{1};
    for (const auto& [n, d] : fr) L = plcm(L, d, p);
    PrimeResult out;
    for (const auto& [n, d] : fr) out.c.push_back(pmul(n, pdivmod(L, d, p).first, p));
    out.c.push_back(L);
    for (const auto& c : out.c) out.signature.push_back(static_cast<long>(c.size()) - 1);
    return out;
  }
  throw Error(ErrorKind::ReconstructionFailed, "rational function degrees exceed the interpolation budget");
}

// ---------------------------------------------------------------------------
// Exact elimination over Q(x)[y]/(P).

using Elt = std::vector<RatFun>;

std::vector<RatFun> rtrim(std::vector<RatFun> a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

std::pair<std::vector<RatFun>, std::vector<RatFun>> rdivmod(std::vector<RatFun> a, const std::vector<RatFun>& b) {
  a = rtrim(std::move(a));
  std::vector<RatFun> q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, RatFun());
  for (std::size_t k = a.size(); k-- >= b.size();) {
    RatFun c = a[k] / b.back();
    q[k - (b.size() - 1)] = c;
    if (!c.is_zero())
      for (std::size_t i = 0; i < b.size(); ++i) a[k - (b.size() - 1) + i] -= c * b[i];
    if (k == b.size() - 1) break;
  }
  return {rtrim(q), rtrim(a)};
}

std::vector<RatFun> rmul(const std::vector<RatFun>& a, const std::vector<RatFun>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<RatFun> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return rtrim(r);
}

std::vector<RatFun> rsub(std::vector<RatFun> a, const std::vector<RatFun>& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return rtrim(a);
}

std::vector<RatFun> rgcd(std::vector<RatFun> a, std::vector<RatFun> b) {
  a = rtrim(a);
  b = rtrim(b);
  while (!b.empty()) {
    auto r = rdivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::optional<std::vector<RatFun>> rinv(const std::vector<RatFun>& a, const std::vector<RatFun>& m) {
  std::vector<RatFun> r0 = m, r1 = rdivmod(a, m).second, t0, t1{RatFun(1)};
  while (!r1.empty()) {
    auto [q, r] = rdivmod(r0, r1);
    auto t = rsub(t0, rmul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.size() != 1) return std::nullopt;
  RatFun s = RatFun(1) / r0[0];
  for (auto& c : t0) c *= s;
  return t0;
}

DiffEquation exact_path(const std::vector<Poly>& P) {
  const std::size_t d = P.size() - 1;
  std::vector<RatFun> m;
  for (const auto& c : P) m.push_back(RatFun(c) / RatFun(P.back()));
  auto reduce_m = [&](std::vector<RatFun> a) {
    a = rdivmod(std::move(a), m).second;
    a.resize(d);
    return a;
  };
  std::vector<RatFun> py, px;
  for (std::size_t i = 1; i <= d; ++i) py.push_back(RatFun(P[i] * Rational(static_cast<long>(i))));
  for (const auto& c : P) px.push_back(RatFun(c.derivative()));
  auto ipy = rinv(rtrim(py), m);
  if (!ipy) throw Error(ErrorKind::NotSquarefree, "dP/dy is not invertible modulo P");
  Elt yprime = reduce_m(rmul(rtrim(px), *ipy));
  for (auto& c : yprime) c = -c;
  auto deriv = [&](const Elt& a) {
    Elt out(d);
    for (std::size_t i = 0; i < d; ++i) out[i] = a[i].derivative();
    std::vector<RatFun> da;
    for (std::size_t i = 1; i < d; ++i) da.push_back(a[i] * RatFun(static_cast<long>(i)));
    auto t = reduce_m(rmul(rtrim(da), rtrim(yprime)));
    for (std::size_t i = 0; i < d; ++i) out[i] += t[i];
    return out;
  };
  PolyDependency dep(d);
  std::vector<Poly> scale;
  Elt cur(d);
  cur[0] = RatFun(1);
  std::vector<Elt> seq{cur};
  Elt y(d);
  y[1] = RatFun(1);
  seq.push_back(y);
  for (std::size_t k = 0;; ++k) {
    if (k >= seq.size()) seq.push_back(deriv(seq.back()));
    const Elt& v = seq[k];
    Poly L{1};
    for (const auto& c : v)
      if (!c.is_polynomial()) L = divexact(L * c.den(), gcd(L, c.den()));
    std::vector<Poly> w;
    for (const auto& c : v) w.push_back(divexact(L, c.den()) * c.num());
    scale.push_back(L);
    auto res = dep.add(w);
    if (!res) {
      if (k > d + 1) throw Error(ErrorKind::Internal, "no dependency found in the quotient ring");
      continue;
    }
    if (k < 2) throw Error(ErrorKind::Internal, "P has a rational root branch");
    DiffEquation deq;
    for (std::size_t j = 1; j <= k; ++j) deq.coeffs.push_back((*res)[j] * scale[j]);
    deq.inhomogeneous = -((*res)[0] * scale[0]);
    return canonical(deq);
  }
}

// ---------------------------------------------------------------------------

std::vector<ZPoly> integral_poly(const std::vector<Poly>& P) {
  Integer den = 1;
  for (const auto& q : P)
    for (const auto& c : q.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<ZPoly> out;
  for (const auto& q : P) out.push_back(to_zpoly(q * Rational(den)));
  return out;
}

bool modular_squarefree(const std::vector<ZPoly>& P) {
  std::mt19937_64 rng(0x5eed);
  PrimeSet primes;
  for (int attempt = 0; attempt < 6; ++attempt) {
    u64 p = primes.grow();
    auto Pm = reduce_p(P, p);
    if (!Pm) continue;
    u64 x0 = rng() % p;
    Vp f;
    for (const auto& c : Pm->coeffs) f.push_back(peval(c, x0, p));
    if (f.back() == 0) continue;
    if (pgcd_degree(f, pderiv(f, p), p) == 0) return true;
  }
  return false;
}

std::vector<Poly> squarefree_part(const std::vector<Poly>& P) {
  std::vector<RatFun> a, da;
  for (const auto& c : P) a.push_back(RatFun(c));
  for (std::size_t i = 1; i < P.size(); ++i) da.push_back(RatFun(P[i] * Rational(static_cast<long>(i))));
  auto g = rgcd(a, rtrim(da));
  if (g.size() <= 1) return P;
  auto q = rdivmod(a, g).first;
  Poly L{1};
  for (const auto& c : q)
    if (!c.is_polynomial()) L = divexact(L * c.den(), gcd(L, c.den()));
  std::vector<Poly> out;
  for (const auto& c : q) out.push_back(divexact(L, c.den()) * c.num());
  return out;
}

bool annihilates(const DiffEquation& deq, const std::vector<Rational>& series) {
  OreOperator op = deq.op();
  auto res = apply_operator(op, series);
  // apply_operator clears denominators; coefficients here are polynomials already.
  for (std::size_t i = 0; i < res.size(); ++i)
    if (res[i] != deq.inhomogeneous[i]) return false;
  return true;
}

DiffEquation modular_path(const std::vector<ZPoly>& Pz, const std::vector<Rational>& series) {
  std::mt19937_64 rng(20240601);
  PrimeSet primes;
  const std::size_t d = Pz.size() - 1;
  std::size_t s = 0;
  std::size_t npoints = 16;
  std::vector<long> signature;
  std::vector<std::vector<Integer>> acc;
  Integer modulus = 1;
  std::optional<std::vector<std::vector<Rational>>> last;
  for (int round = 0; round < 400; ++round) {
    u64 p = primes.grow();
    auto Pm = reduce_p(Pz, p);
    if (!Pm) {
      primes.skip(p);
      continue;
    }
    if (s == 0) {
      // First dependency order among 1, y, y', ... at two random points.
      for (int t = 0; t < 2; ++t) {
        std::optional<std::vector<Vp>> j;
        for (int tries = 0; tries < 20 && !j; ++tries) j = jets(*Pm, rng() % p, d);
        if (!j) break;
        std::size_t k = 2;
        for (; k < j->size(); ++k) {
          Matrix<u64> sub(d, std::vector<u64>(k + 1));
          for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c <= k; ++c) sub[r][c] = (*j)[c][r];
          if (rank_mod(sub, p) < k + 1) break;
        }
        s = std::max(s, k);
      }
      if (s == 0) continue;
    }
    auto res = solve_prime(*Pm, s, npoints, rng);
    if (!res) {
      primes.skip(p);
      continue;
    }
    long tot_new = 0, tot_old = 0;
    for (long v : res->signature) tot_new += v;
    for (long v : signature) tot_old += v;
    if (signature.empty() || (res->signature != signature && tot_new > tot_old)) {
      signature = res->signature;
      acc.assign(res->c.size(), {});
      for (std::size_t i = 0; i < res->c.size(); ++i) acc[i].assign(res->c[i].size(), Integer(0));
      modulus = 1;
      last.reset();
    } else if (res->signature != signature) {
      primes.skip(p);
      continue;
    }
    for (std::size_t i = 0; i < res->c.size(); ++i)
      for (std::size_t k = 0; k < res->c[i].size(); ++k) {
        Integer x = acc[i][k], m = modulus;
        crt_accumulate(x, m, res->c[i][k], p);
        acc[i][k] = x;
      }
    modulus *= p;
    std::vector<std::vector<Rational>> rec(acc.size());
    bool ok = true;
    for (std::size_t i = 0; i < acc.size() && ok; ++i)
      for (const auto& v : acc[i]) {
        auto q = rational_reconstruct(v, modulus);
        if (!q) {
          ok = false;
          break;
        }
        rec[i].push_back(*q);
      }
    if (!ok) continue;
    if (last && *last == rec) {
      DiffEquation deq;
      for (std::size_t j = 1; j < rec.size(); ++j) deq.coeffs.emplace_back(rec[j]);
      deq.inhomogeneous = -Poly(rec[0]);
      deq = canonical(deq);
      if (annihilates(deq, series)) return deq;
    }
    last = rec;
  }
  throw Error(ErrorKind::UnluckyPrimeExhaustion, "modular elimination did not stabilize");
}

}  // namespace

DiffEquation algeq_to_diffeq(const AlgebraicEquation& input, const AlgeqOptions& opt) {
  AlgebraicEquation alg = input;
  while (!alg.coeffs_y.empty() && alg.coeffs_y.back().is_zero()) alg.coeffs_y.pop_back();
  if (alg.coeffs_y.empty()) throw Error(ErrorKind::ZeroPolynomial, "P is zero");
  if (alg.degree_y() < 1) throw Error(ErrorKind::InvalidInput, "P must involve y");
  algebraic_series(alg, 1);  // seed checks

  if (alg.degree_y() >= 2 && !modular_squarefree(integral_poly(alg.coeffs_y))) {
    alg.coeffs_y = squarefree_part(alg.coeffs_y);
    if (alg.degree_y() >= 2 && !modular_squarefree(integral_poly(alg.coeffs_y)))
      throw Error(ErrorKind::NotSquarefree, "P keeps a repeated factor in y");
    algebraic_series(alg, 1);
  }

  DiffEquation deq;
  deq.var = alg.var;
  if (alg.degree_y() == 1) {
    // y = -p0 / p1: p0 p1 y' - (p0' p1 - p0 p1') y = 0.
    const Poly& p0 = alg.coeffs_y[0];
    const Poly& p1 = alg.coeffs_y[1];
    if (p0.is_zero()) {
      deq.coeffs = {Poly(), Poly{1}};
    } else {
      deq.coeffs = {-(p0.derivative() * p1 - p0 * p1.derivative()), p0 * p1};
    }
    deq = canonical(deq);
  } else {
    const bool exact = opt.path == 1 || (opt.path == 0 && alg.degree_y() <= opt.exact_max_degree);
    auto series = algebraic_series(alg, opt.check_terms);
    deq = exact ? exact_path(alg.coeffs_y) : modular_path(integral_poly(alg.coeffs_y), series);
    if (!annihilates(deq, series)) throw Error(ErrorKind::Internal, "differential equation fails the series check");
  }
  deq.var = alg.var;
  std::size_t want = std::max<std::size_t>(required_initial_count(deq), static_cast<std::size_t>(deq.order()));
  deq.initial = algebraic_series(alg, std::max<std::size_t>(want, 1));
  return deq;
}

}  // namespace holo
