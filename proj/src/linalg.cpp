#include "holo/linalg.hpp"

#include <algorithm>

namespace holo {

std::vector<std::size_t> Echelon::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Echelon rref(Matrix<Rational>& m) {
  Echelon e;
  e.cols = m.empty() ? 0 : m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < e.cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    Rational inv = 1 / m[row][c];
    for (std::size_t j = c; j < e.cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < e.cols; ++j)
        if (m[row][j] != 0) m[i][j] -= f * m[row][j];
    }
    e.pivots.push_back(c);
    ++row;
  }
  return e;
}

Echelon rref_mod(Matrix<u64>& m, u64 p) {
  Echelon e;
  e.cols = m.empty() ? 0 : m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < e.cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    u64 inv = inv_mod(m[row][c], p);
    auto& pr = m[row];
    for (std::size_t j = c; j < e.cols; ++j) pr[j] = mul_mod(pr[j], inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      u64 f = p - m[i][c];
      auto& ri = m[i];
      for (std::size_t j = c; j < e.cols; ++j)
        if (pr[j]) ri[j] = (ri[j] + f * pr[j]) % p;
    }
    e.pivots.push_back(c);
    ++row;
  }
  return e;
}

std::vector<std::vector<Rational>> kernel_from_rref(const Matrix<Rational>& r, const Echelon& e) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t f : e.free_columns()) {
    std::vector<Rational> v(e.cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -r[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<u64>> kernel_from_rref_mod(const Matrix<u64>& r, const Echelon& e, u64 p) {
  std::vector<std::vector<u64>> out;
  for (std::size_t f : e.free_columns()) {
    std::vector<u64> v(e.cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = (p - r[i][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank_mod(Matrix<u64> m, u64 p) { return rref_mod(m, p).pivots.size(); }

void remove_common_content(std::vector<ZPoly>& a, std::vector<ZPoly>& b) {
  ZPoly g;
  bool constant = false;
  Integer ig = 0;
  auto visit = [&](const ZPoly& q) {
    if (q.is_zero()) return;
    if (!constant) {
      g = g.is_zero() ? primitive_part(q) : gcd(g, q);
      if (g.degree() == 0) constant = true;
    }
    Integer c = content(q);
    mpz_gcd(ig.get_mpz_t(), ig.get_mpz_t(), c.get_mpz_t());
  };
  for (const auto& q : a) visit(q);
  for (const auto& q : b) visit(q);
  if (g.is_zero()) return;
  const bool poly = !constant && g.degree() > 0;
  if (!poly && ig == 1) return;
  for (auto* vec : {&a, &b})
    for (auto& q : *vec) {
      if (q.is_zero()) continue;
      if (poly) q = divexact(q, g);
    }
  if (poly) {
    ig = 0;
    for (auto* vec : {&a, &b})
      for (auto& q : *vec) {
        Integer c = content(q);
        mpz_gcd(ig.get_mpz_t(), ig.get_mpz_t(), c.get_mpz_t());
      }
  }
  if (ig > 1)
    for (auto* vec : {&a, &b})
      for (auto& q : *vec) q = divexact(q, ig);
}

std::optional<std::vector<Poly>> PolyDependency::add(const std::vector<Poly>& v) {
  Integer den = 1;
  for (const auto& q : v)
    for (const auto& c : q.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Row cur;
  cur.main.resize(dim_);
  for (std::size_t i = 0; i < dim_ && i < v.size(); ++i) {
    std::vector<Integer> zc;
    for (const auto& c : v[i].coeffs()) zc.push_back(c.get_num() * (den / c.get_den()));
    cur.main[i] = ZPoly(std::move(zc));
  }
  cur.aug.resize(count_ + 1);
  cur.aug[count_] = ZPoly(den);
  for (auto& a : rows_) a.aug.resize(count_ + 1);
  ++count_;

  for (const auto& row : rows_) {
    const ZPoly& f = cur.main[row.pivot];
    if (f.is_zero()) continue;
    const ZPoly& e = row.main[row.pivot];
    ZPoly g = gcd(e, f);
    ZPoly ce = divexact(e, g), cf = divexact(f, g);
    for (std::size_t j = 0; j < dim_; ++j) cur.main[j] = ce * cur.main[j] - cf * row.main[j];
    for (std::size_t j = 0; j < cur.aug.size(); ++j) cur.aug[j] = ce * cur.aug[j] - cf * row.aug[j];
    remove_common_content(cur.main, cur.aug);
  }
  std::size_t piv = dim_;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!cur.main[j].is_zero() && (piv == dim_ || cur.main[j].degree() < cur.main[piv].degree())) piv = j;
  }
  if (piv == dim_) {
    std::vector<Poly> out;
    for (const auto& a : cur.aug) out.push_back(to_poly(a));
    --count_;
    for (auto& a : rows_) a.aug.resize(count_);
    return out;
  }
  cur.pivot = piv;
  rows_.push_back(std::move(cur));
  return std::nullopt;
}

}  // namespace holo
