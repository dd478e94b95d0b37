#include "holo/relations.hpp"

#include <algorithm>

#include "holo/error.hpp"
#include "holo/linalg.hpp"

namespace holo {

void Recurrence::validate() const {
  if (coeffs.empty() || coeffs.back().is_zero())
    throw Error(ErrorKind::InvalidInput, "recurrence needs a nonzero leading coefficient");
}

void DiffEquation::validate() const {
  if (coeffs.empty() || coeffs.back().is_zero())
    throw Error(ErrorKind::InvalidInput, "differential equation needs a nonzero leading coefficient");
}

long AlgebraicEquation::degree_x() const {
  long d = -1;
  for (const auto& c : coeffs_y) d = std::max(d, c.degree());
  return d;
}

std::vector<Rational> AlgebraicEquation::substitute(const std::vector<Rational>& series, std::size_t terms) const {
  std::vector<Rational> acc(terms, Rational(0));
  for (std::size_t i = coeffs_y.size(); i-- > 0;) {
    acc = series_mul(acc, series, terms);
    const auto& c = coeffs_y[i].coeffs();
    for (std::size_t k = 0; k < c.size() && k < terms; ++k) acc[k] += c[k];
  }
  return acc;
}

namespace {

// Removes the content shared by coeffs and rhs; the leading polynomial gets a
// positive leading coefficient. With keep_nonnegative_roots, linear factors
// n - k (k = 0, 1, ...) stay: dividing a recurrence by them would drop the
// equation at n = k.
void normalize(std::vector<Poly>& coeffs, Poly& rhs, bool keep_nonnegative_roots) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) return;
  Integer den = 1;
  auto lcm_in = [&](const Poly& q) {
    for (const auto& c : q.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  };
  for (const auto& q : coeffs) lcm_in(q);
  lcm_in(rhs);
  auto to_z = [&](const Poly& q) {
    std::vector<Integer> zc;
    for (const auto& c : q.coeffs()) zc.push_back(c.get_num() * (den / c.get_den()));
    return ZPoly(std::move(zc));
  };
  std::vector<ZPoly> z, zr{to_z(rhs)};
  for (const auto& q : coeffs) z.push_back(to_z(q));
  if (keep_nonnegative_roots) {
    ZPoly g;
    for (const auto* vec : {&z, &zr})
      for (const auto& q : *vec)
        if (!q.is_zero()) g = g.is_zero() ? primitive_part(q) : gcd(g, q);
    ZPoly keep{Integer(1)};
    if (g.degree() > 0) {
      for (const auto& root : integer_roots(to_poly(g))) {
        if (root < 0) continue;
        ZPoly lin{Integer(-root), Integer(1)};
        ZPoly rest = g;
        while (true) {
          auto [q, r] = pseudo_divmod(rest, lin);
          if (!r.is_zero()) break;
          rest = q;
          keep *= lin;
        }
      }
    }
    for (auto* vec : {&z, &zr})
      for (auto& q : *vec)
        if (!q.is_zero()) q = divexact(q, keep);
    remove_common_content(z, zr);
    for (auto* vec : {&z, &zr})
      for (auto& q : *vec) q *= keep;
  } else {
    remove_common_content(z, zr);
  }
  const bool flip = z.back().leading() < 0;
  for (std::size_t i = 0; i < z.size(); ++i) coeffs[i] = to_poly(flip ? -z[i] : z[i]);
  rhs = to_poly(flip ? -zr[0] : zr[0]);
}

}  // namespace

Recurrence canonical(const Recurrence& r) {
  Recurrence out = r;
  normalize(out.coeffs, out.inhomogeneous, true);
  return out;
}

DiffEquation canonical(const DiffEquation& d) {
  DiffEquation out = d;
  normalize(out.coeffs, out.inhomogeneous, false);
  return out;
}

Recurrence recurrence_from_op(const OreOperator& op, std::vector<Rational> initial) {
  if (op.kind() != OreKind::Shift) throw Error(ErrorKind::KindMismatch, "recurrence needs a shift operator");
  Recurrence r;
  Poly den = 1;
  for (const auto& f : op.coeffs())
    if (!f.is_polynomial()) den = divexact(den * f.den(), gcd(den, f.den()));
  for (const auto& f : op.coeffs()) r.coeffs.push_back(divexact(den, f.den()) * f.num());
  r.initial = std::move(initial);
  r.var = op.var();
  return canonical(r);
}

DiffEquation diffeq_from_op(const OreOperator& op, std::vector<Rational> initial) {
  if (op.kind() != OreKind::Differential)
    throw Error(ErrorKind::KindMismatch, "differential equation needs a differential operator");
  DiffEquation d;
  d.coeffs = op.canonical().poly_coeffs();
  d.initial = std::move(initial);
  d.var = op.var();
  return d;
}

std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t n) {
  std::vector<Rational> r(n, Rational(0));
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace holo
