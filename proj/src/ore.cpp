#include "holo/ore.hpp"

#include <algorithm>
#include <optional>

#include "holo/error.hpp"
#include "holo/linalg.hpp"

namespace holo {

std::string to_string(OreKind kind) { return kind == OreKind::Differential ? "diff" : "shift"; }

OreOperator::OreOperator(OreKind kind, std::string var, std::vector<RatFun> coeffs)
    : kind_(kind), var_(std::move(var)), c_(std::move(coeffs)) {
  trim();
}

OreOperator OreOperator::from_polys(OreKind kind, std::string var, const std::vector<Poly>& coeffs) {
  std::vector<RatFun> c(coeffs.begin(), coeffs.end());
  return OreOperator(kind, std::move(var), std::move(c));
}

OreOperator OreOperator::generator(OreKind kind, std::string var) {
  return OreOperator(kind, std::move(var), {RatFun(), RatFun(1)});
}

void OreOperator::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool OreOperator::has_polynomial_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const RatFun& f) { return f.is_polynomial(); });
}

std::vector<Poly> OreOperator::poly_coeffs() const {
  std::vector<Poly> out;
  out.reserve(c_.size());
  for (const auto& f : c_) {
    if (!f.is_polynomial()) throw Error(ErrorKind::Internal, "operator has non-polynomial coefficients");
    out.push_back(f.num());
  }
  return out;
}

namespace {

void check_compatible(const OreOperator& a, const OreOperator& b) {
  if (a.kind() != b.kind() || a.var() != b.var())
    throw Error(ErrorKind::KindMismatch, "operators over different algebras: " + to_string(a.kind()) + "/" +
                                             a.var() + " vs " + to_string(b.kind()) + "/" + b.var());
}

using PolyOp = std::vector<Poly>;

void trim(PolyOp& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Content removal and sign normalization on a polynomial-coefficient operator.
PolyOp canonical_polys(PolyOp p) {
  trim(p);
  if (p.empty()) return p;
  Integer den = 1;
  for (const auto& q : p)
    for (const auto& c : q.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<ZPoly> z;
  z.reserve(p.size());
  for (const auto& q : p) {
    std::vector<Integer> zc;
    for (const auto& c : q.coeffs()) zc.push_back(c.get_num() * (den / c.get_den()));
    z.emplace_back(std::move(zc));
  }
  std::vector<ZPoly> none;
  remove_common_content(z, none);
  const bool flip = z.back().leading() < 0;
  PolyOp out;
  out.reserve(z.size());
  for (auto& q : z) out.push_back(to_poly(flip ? -q : q));
  return out;
}

// D * p for a polynomial-coefficient operator.
PolyOp left_mul_generator(OreKind kind, const PolyOp& p) {
  PolyOp out(p.size() + 1);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j].is_zero()) continue;
    out[j + 1] += ore_sigma(kind, p[j]);
    if (kind == OreKind::Differential) out[j] += p[j].derivative();
  }
  trim(out);
  return out;
}

PolyOp scale(const Poly& s, PolyOp p) {
  for (auto& q : p) q = s * q;
  trim(p);
  return p;
}

PolyOp add(PolyOp a, const PolyOp& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

// Right pseudo-remainder of p by q, each step content-reduced.
PolyOp pseudo_right_rem(OreKind kind, PolyOp p, const PolyOp& q) {
  const std::size_t b = q.size() - 1;
  std::vector<PolyOp> dq{q};
  while (!p.empty() && p.size() - 1 >= b) {
    const std::size_t k = p.size() - 1 - b;
    while (dq.size() <= k) dq.push_back(left_mul_generator(kind, dq.back()));
    const Poly& lead = dq[k].back();
    const Poly a = p.back();
    Poly g = gcd(lead, a);
    Poly ml = divexact(lead, g), ma = divexact(a, g);
    PolyOp next = add(scale(ml, p), scale(-ma, dq[k]));
    next.resize(std::min(next.size(), p.size() - 1));
    trim(next);
    p = canonical_polys(std::move(next));
  }
  return p;
}

PolyOp to_polys(const OreOperator& op) {
  OreOperator c = op.canonical();
  return c.poly_coeffs();
}

}  // namespace

OreOperator OreOperator::canonical() const {
  if (c_.empty()) return *this;
  Poly den = 1;
  for (const auto& f : c_)
    if (!f.is_polynomial()) den = divexact(den * f.den(), gcd(den, f.den()));
  PolyOp p;
  p.reserve(c_.size());
  for (const auto& f : c_) p.push_back(f.is_polynomial() ? den * f.num() : divexact(den, f.den()) * f.num());
  return from_polys(kind_, var_, canonical_polys(std::move(p)));
}

OreOperator OreOperator::monic() const {
  if (c_.empty()) return *this;
  RatFun inv = RatFun(1) / c_.back();
  return inv * *this;
}

OreOperator OreOperator::operator-() const {
  OreOperator r = *this;
  for (auto& f : r.c_) f = -f;
  return r;
}

OreOperator operator+(const OreOperator& a, const OreOperator& b) {
  check_compatible(a, b);
  std::vector<RatFun> c = a.c_;
  if (b.c_.size() > c.size()) c.resize(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return OreOperator(a.kind_, a.var_, std::move(c));
}

OreOperator operator-(const OreOperator& a, const OreOperator& b) { return a + (-b); }

OreOperator operator*(const RatFun& s, const OreOperator& a) {
  std::vector<RatFun> c = a.c_;
  for (auto& f : c) f = s * f;
  return OreOperator(a.kind_, a.var_, std::move(c));
}

Poly ore_sigma(OreKind kind, const Poly& a, long times) {
  if (kind == OreKind::Differential || times == 0) return a;
  return a.shift(Rational(times));
}

Poly ore_delta(OreKind kind, const Poly& a) {
  return kind == OreKind::Differential ? a.derivative() : Poly();
}

RatFun ore_sigma(OreKind kind, const RatFun& a) {
  return kind == OreKind::Differential ? a : a.shift(1);
}

RatFun ore_delta(OreKind kind, const RatFun& a) {
  return kind == OreKind::Differential ? a.derivative() : RatFun();
}

namespace {

std::vector<RatFun> left_mul_generator(OreKind kind, const std::vector<RatFun>& p) {
  std::vector<RatFun> out(p.size() + 1);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j].is_zero()) continue;
    out[j + 1] += ore_sigma(kind, p[j]);
    if (kind == OreKind::Differential) out[j] += p[j].derivative();
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

}  // namespace

OreOperator ore_mul(const OreOperator& a, const OreOperator& b) {
  check_compatible(a, b);
  if (a.is_zero() || b.is_zero()) return OreOperator(a.kind(), a.var(), {});
  std::vector<RatFun> acc;
  std::vector<RatFun> dib = b.coeffs();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i > 0) dib = left_mul_generator(a.kind(), dib);
    const RatFun& ai = a.coeffs()[i];
    if (ai.is_zero()) continue;
    if (dib.size() > acc.size()) acc.resize(dib.size());
    for (std::size_t j = 0; j < dib.size(); ++j) acc[j] += ai * dib[j];
  }
  return OreOperator(a.kind(), a.var(), std::move(acc));
}

DivMod right_divmod(const OreOperator& a, const OreOperator& b) {
  check_compatible(a, b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroOperator, "right division by the zero operator");
  const std::size_t ob = static_cast<std::size_t>(b.order());
  std::vector<RatFun> q;
  std::vector<RatFun> r = a.coeffs();
  std::vector<std::vector<RatFun>> db{b.coeffs()};
  while (!r.empty() && r.size() - 1 >= ob) {
    const std::size_t k = r.size() - 1 - ob;
    while (db.size() <= k) db.push_back(left_mul_generator(a.kind(), db.back()));
    RatFun c = r.back() / db[k].back();
    if (q.size() <= k) q.resize(k + 1);
    q[k] += c;
    for (std::size_t j = 0; j < db[k].size(); ++j) r[j] -= c * db[k][j];
    r.pop_back();
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return {OreOperator(a.kind(), a.var(), std::move(q)), OreOperator(a.kind(), a.var(), std::move(r))};
}

OreOperator gcrd(const OreOperator& a, const OreOperator& b) {
  check_compatible(a, b);
  PolyOp p = to_polys(a), q = to_polys(b);
  if (p.size() < q.size()) std::swap(p, q);
  while (!q.empty()) {
    PolyOp r = pseudo_right_rem(a.kind(), std::move(p), q);
    p = std::move(q);
    q = std::move(r);
  }
  return OreOperator::from_polys(a.kind(), a.var(), canonical_polys(std::move(p)));
}

namespace {

// D * r reduced modulo the operator m (order o), fraction-free: returns
// (g, r') with r' = g * (D r rem m).
std::pair<Poly, PolyOp> next_remainder(OreKind kind, const PolyOp& r, const PolyOp& m) {
  const std::size_t o = m.size() - 1;
  PolyOp d = left_mul_generator(kind, r);
  d.resize(o + 1);
  const Poly t = d[o];
  d.pop_back();
  if (t.is_zero()) return {Poly(1), d};
  const Poly& lc = m.back();
  Poly g = gcd(lc, t);
  Poly gl = divexact(lc, g), gt = divexact(t, g);
  for (std::size_t j = 0; j < o; ++j) d[j] = gl * d[j] - gt * m[j];
  return {gl, d};
}

}  // namespace

OreOperator lclm(const OreOperator& a, const OreOperator& b) {
  check_compatible(a, b);
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::DivisionByZeroOperator, "lclm with the zero operator");
  const PolyOp pa = to_polys(a), pb = to_polys(b);
  const std::size_t oa = pa.size() - 1, ob = pb.size() - 1;
  PolyDependency dep(oa + ob);
  PolyOp ra(oa), rb(ob);
  if (oa > 0) ra[0] = 1;
  if (ob > 0) rb[0] = 1;
  std::vector<PolyOp> tracked{PolyOp{Poly(1)}};
  for (std::size_t i = 0;; ++i) {
    std::vector<Poly> row(ra.begin(), ra.end());
    row.insert(row.end(), rb.begin(), rb.end());
    row.resize(oa + ob);
    if (auto c = dep.add(row)) {
      PolyOp l;
      for (std::size_t j = 0; j < c->size(); ++j) l = add(l, scale((*c)[j], tracked[j]));
      return OreOperator::from_polys(a.kind(), a.var(), canonical_polys(std::move(l)));
    }
    if (i > oa + ob) throw Error(ErrorKind::Internal, "lclm: no dependency within the order bound");
    Poly ga = 1, gb = 1;
    if (oa > 0) {
      auto [g, r] = next_remainder(a.kind(), ra, pa);
      ga = g;
      ra = std::move(r);
    }
    if (ob > 0) {
      auto [g, r] = next_remainder(a.kind(), rb, pb);
      gb = g;
      rb = std::move(r);
    }
    Poly h = gcd(ga, gb);
    Poly fa = divexact(gb, h), fb = divexact(ga, h);
    Poly g = ga * fa;
    for (auto& v : ra) v = fa * v;
    for (auto& v : rb) v = fb * v;
    tracked.push_back(scale(g, left_mul_generator(a.kind(), tracked.back())));
  }
}

OreOperator lclm(const std::vector<OreOperator>& ops) {
  if (ops.empty()) throw Error(ErrorKind::InvalidInput, "lclm of an empty list");
  OreOperator acc = ops.front().canonical();
  for (std::size_t i = 1; i < ops.size(); ++i) acc = lclm(acc, ops[i]);
  return acc;
}

std::vector<Rational> apply_operator(const OreOperator& op, const std::vector<Rational>& data) {
  const std::size_t n = data.size();
  if (op.is_zero()) return std::vector<Rational>(n, Rational(0));
  OreOperator cleared = op;
  if (!op.has_polynomial_coeffs()) {
    Poly den = 1;
    for (const auto& f : op.coeffs()) den = divexact(den * f.den(), gcd(den, f.den()));
    cleared = RatFun(den) * op;
  }
  const PolyOp p = cleared.poly_coeffs();
  const std::size_t s = p.size() - 1;
  if (n <= s) throw Error(ErrorKind::NotEnoughData, "need more than " + std::to_string(s) + " terms");
  const std::size_t len = n - s;
  std::vector<Rational> out(len, Rational(0));
  if (op.kind() == OreKind::Shift) {
    for (std::size_t j = 0; j < len; ++j) {
      Rational acc = 0;
      for (std::size_t i = 0; i <= s; ++i)
        if (!p[i].is_zero() && data[j + i] != 0) acc += p[i].eval(Rational(static_cast<long>(j))) * data[j + i];
      out[j] = acc;
    }
    return out;
  }
  std::vector<Rational> deriv = data;
  for (std::size_t i = 0; i <= s; ++i) {
    if (i > 0) {
      for (std::size_t m = 0; m + 1 < deriv.size(); ++m) deriv[m] = deriv[m + 1] * static_cast<long>(m + 1);
      deriv.pop_back();
    }
    const auto& pc = p[i].coeffs();
    for (std::size_t k = 0; k < pc.size(); ++k) {
      if (pc[k] == 0) continue;
      for (std::size_t m = k; m < len; ++m) out[m] += pc[k] * deriv[m - k];
    }
  }
  return out;
}

namespace {

std::string coeff_array(const Poly& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ", ";
    s += to_string(p.coeffs()[i]);
  }
  return s + "]";
}

}  // namespace

std::string to_string(const OreOperator& op) {
  std::string s = "kind=" + to_string(op.kind()) + " var=" + op.var() + "; [";
  for (std::size_t i = 0; i < op.coeffs().size(); ++i) {
    if (i) s += "; ";
    const RatFun& f = op.coeffs()[i];
    s += coeff_array(f.num());
    if (!f.is_polynomial()) s += "/" + coeff_array(f.den());
  }
  return s + "]";
}

std::string to_pretty(const OreOperator& op) {
  if (op.is_zero()) return "0";
  const std::string gen = (op.kind() == OreKind::Differential ? "D" : "S") + op.var();
  std::string s;
  for (std::size_t i = op.coeffs().size(); i-- > 0;) {
    const RatFun& f = op.coeffs()[i];
    if (f.is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string c = to_string(f, op.var());
    const bool simple = f.is_polynomial() && f.num().leading() > 0 &&
                        std::count_if(f.num().coeffs().begin(), f.num().coeffs().end(),
                                      [](const Rational& v) { return v != 0; }) == 1;
    if (i == 0) {
      s += simple ? c : "(" + c + ")";
      continue;
    }
    if (!(simple && f.num().size() == 1 && f.num().leading() == 1)) s += (simple ? c : "(" + c + ")") + "*";
    s += gen;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace holo
