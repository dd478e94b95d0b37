#include "holo/poly.hpp"

#include <algorithm>

#include "holo/error.hpp"
#include "holo/modular.hpp"

namespace holo {

template <>
Poly Poly::multiply(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

template <>
ZPoly ZPoly::multiply(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.c_[i] == 0) continue;
    mpz_srcptr ai = a.c_[i].get_mpz_t();
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), ai, b.c_[j].get_mpz_t());
  }
  return ZPoly(std::move(r));
}

// ---------------------------------------------------------------------------

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> r = a.coeffs();
  const std::size_t db = b.size() - 1;
  std::vector<Rational> q(r.size() - db, Rational(0));
  Rational inv_lc = 1 / b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = r[k + db] * inv_lc;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= c * b.coeffs()[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly divexact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::Internal, "inexact polynomial division");
  return q;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  return monic(to_poly(gcd(primitive_split(a).second, primitive_split(b).second)));
}

std::pair<Rational, ZPoly> primitive_split(const Poly& p) {
  if (p.is_zero()) return {Rational(0), ZPoly()};
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> z;
  z.reserve(p.size());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(std::move(v));
  }
  if (z.back() < 0) g = -g;
  for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return {make_rational(g, den_lcm), ZPoly(std::move(z))};
}

Poly canonical(const Poly& p) { return to_poly(primitive_split(p).second); }

Poly to_poly(const ZPoly& z) {
  std::vector<Rational> c;
  c.reserve(z.size());
  for (const auto& v : z.coeffs()) c.emplace_back(v);
  return Poly(std::move(c));
}

ZPoly to_zpoly(const Poly& p) {
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) {
    if (!is_integer(v)) throw Error(ErrorKind::Internal, "non-integer coefficient");
    c.push_back(v.get_num());
  }
  return ZPoly(std::move(c));
}

namespace {

u64 eval_mod(const std::vector<u64>& c, u64 x, u64 p) {
  u64 acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add_mod(mul_mod(acc, x, p), *it, p);
  return acc;
}

Integer eval_int(const ZPoly& z, const Integer& x) {
  Integer acc = 0;
  for (auto it = z.coeffs().rbegin(); it != z.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

// Roots mod a small prime are lifted p-adically past twice the Cauchy bound
// and then confirmed by exact evaluation.
std::vector<Integer> integer_roots(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "integer_roots of zero");
  std::vector<Integer> roots;
  ZPoly z = primitive_split(p).second;
  std::size_t low = 0;
  while (z.coeffs()[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(0);
    z = ZPoly(std::vector<Integer>(z.coeffs().begin() + static_cast<long>(low), z.coeffs().end()));
  }
  if (z.degree() >= 1) {
    ZPoly sq = z;
    ZPoly g = gcd(z, ZPoly(z.derivative()));
    if (g.degree() > 0) sq = divexact(z, g);
    sq = primitive_part(sq);
    const ZPoly dsq = sq.derivative();

    Integer maxc = 0;
    for (const auto& c : sq.coeffs()) maxc = std::max(maxc, Integer(abs(c)));
    Integer bound = maxc / abs(sq.leading()) + 2;

    for (u64 prime = 3;; prime += 2) {
      if (!is_prime(prime) || reduce(sq.leading(), prime) == 0) continue;
      std::vector<u64> cm, dm;
      for (const auto& c : sq.coeffs()) cm.push_back(reduce(c, prime));
      for (const auto& c : dsq.coeffs()) dm.push_back(reduce(c, prime));
      std::vector<u64> local;
      bool ok = true;
      for (u64 r = 0; r < prime && ok; ++r) {
        if (eval_mod(cm, r, prime) != 0) continue;
        if (eval_mod(dm, r, prime) == 0) ok = false;
        local.push_back(r);
      }
      if (!ok) continue;
      for (u64 r0 : local) {
        Integer r = r0, mod = prime;
        while (mod <= 2 * bound) {
          mod *= mod;
          Integer fv = eval_int(sq, r) % mod, dv = eval_int(dsq, r) % mod, inv;
          if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), mod.get_mpz_t()) == 0) break;
          r = (r - fv * inv) % mod;
          if (r < 0) r += mod;
        }
        if (r > mod / 2) r -= mod;
        if (r != 0 && eval_int(sq, r) == 0) roots.push_back(r);
      }
      break;
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

long largest_nonnegative_integer_root(const Poly& p) {
  auto roots = integer_roots(p);
  if (roots.empty() || roots.back() < 0) return -1;
  return roots.back().get_si();
}

Poly falling_factorial_poly(long k) {
  Poly r = 1;
  for (long i = 0; i < k; ++i) r *= Poly{Rational(-i), Rational(1)};
  return r;
}

Poly rising_factorial_poly(const Rational& a, long k) {
  Poly r = 1;
  for (long i = 0; i < k; ++i) r *= Poly{Rational(a + i), Rational(1)};
  return r;
}

namespace {

template <class T>
std::string format_poly(const std::vector<T>& c, std::string_view var) {
  std::string out;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    T mag = abs(c[k]);
    if (first) {
      if (c[k] < 0) out += "-";
    } else {
      out += c[k] < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return first ? "0" : out;
}

}  // namespace

std::string to_string(const Poly& p, std::string_view var) { return format_poly(p.coeffs(), var); }
std::string to_string(const ZPoly& p, std::string_view var) { return format_poly(p.coeffs(), var); }

// ---------------------------------------------------------------------------

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  return divexact(p, g);
}

ZPoly divexact(const ZPoly& p, const Integer& d) {
  if (d == 1) return p;
  std::vector<Integer> c = p.coeffs();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return ZPoly(std::move(c));
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(ErrorKind::Internal, "inexact polynomial division");
  std::vector<Integer> r = a.coeffs();
  const std::size_t db = b.size() - 1;
  std::vector<Integer> q(r.size() - db);
  const Integer& lc = b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    if (!mpz_divisible_p(r[k + db].get_mpz_t(), lc.get_mpz_t()))
      throw Error(ErrorKind::Internal, "inexact polynomial division");
    mpz_divexact(q[k].get_mpz_t(), r[k + db].get_mpz_t(), lc.get_mpz_t());
    if (q[k] == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b.coeffs()[j].get_mpz_t());
  }
  for (std::size_t j = 0; j < db; ++j)
    if (r[j] != 0) throw Error(ErrorKind::Internal, "inexact polynomial division");
  return ZPoly(std::move(q));
}

std::pair<ZPoly, ZPoly> pseudo_divmod(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "polynomial division by zero");
  if (a.degree() < b.degree()) return {ZPoly(), a};
  const std::size_t db = b.size() - 1;
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(r.size() - db, Integer(0));
  const Integer& lc = b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer c = r[k + db];
    for (auto& v : q) v *= lc;
    q[k] = c;
    for (std::size_t j = 0; j < k + db; ++j) r[j] *= lc;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), b.coeffs()[j].get_mpz_t());
  }
  r.resize(db);
  return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  ZPoly x = primitive_part(a), y = primitive_part(b);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    ZPoly r = primitive_part(pseudo_divmod(x, y).second);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace holo
