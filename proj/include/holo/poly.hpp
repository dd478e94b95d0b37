#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "holo/rational.hpp"

namespace holo {

/// Dense univariate polynomial, index = degree. The zero polynomial is the
/// empty coefficient list; no trailing zeros are ever stored.
template <class T>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  // NOLINTNEXTLINE(google-explicit-constructor)
  DensePoly(const T& constant) {
    if (constant != 0) c_.push_back(constant);
  }
  DensePoly(long constant) : DensePoly(T(constant)) {}  // NOLINT
  DensePoly(int constant) : DensePoly(T(constant)) {}   // NOLINT

  static DensePoly monomial(std::size_t degree, const T& coeff = T(1)) {
    if (coeff == 0) return {};
    std::vector<T> c(degree + 1, T(0));
    c[degree] = coeff;
    return DensePoly(std::move(c));
  }
  /// The polynomial x.
  static DensePoly x() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }
  std::vector<T>& mutable_coeffs() { return c_; }
  const T& leading() const { return c_.back(); }
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  /// Coefficient i, growing the storage as needed. Call trim() afterwards.
  T& at_grow(std::size_t i) {
    if (i >= c_.size()) c_.resize(i + 1, T(0));
    return c_[i];
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  T eval(const T& point) const {
    T acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * point + *it;
    return acc;
  }

  DensePoly derivative() const {
    std::vector<T> d;
    if (c_.size() > 1) d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return DensePoly(std::move(d));
  }

  /// p(x + k).
  DensePoly shift(const T& k) const {
    std::vector<T> a = c_;
    const std::size_t n = a.size();
    if (k == 0 || n < 2) return DensePoly(std::move(a));
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) a[j - 1] += k * a[j];
    return DensePoly(std::move(a));
  }

  /// p(s * x).
  DensePoly scale_variable(const T& s) const {
    std::vector<T> a = c_;
    T pw = 1;
    for (auto& coef : a) {
      coef *= pw;
      pw *= s;
    }
    return DensePoly(std::move(a));
  }

  /// p(x) * x^k.
  DensePoly shift_up(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> a(k, T(0));
    a.insert(a.end(), c_.begin(), c_.end());
    return DensePoly(std::move(a));
  }

  DensePoly operator-() const {
    std::vector<T> a = c_;
    for (auto& coef : a) coef = -coef;
    return DensePoly(std::move(a));
  }
  DensePoly& operator+=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator*=(const T& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& coef : c_) coef *= s;
    return *this;
  }
  DensePoly& operator*=(const DensePoly& o) {
    *this = *this * o;
    return *this;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, const T& s) { return a *= s; }
  friend DensePoly operator*(const T& s, DensePoly a) { return a *= s; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) { return multiply(a, b); }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

 private:
  static DensePoly multiply(const DensePoly& a, const DensePoly& b);
  std::vector<T> c_;
};

using Poly = DensePoly<Rational>;
using ZPoly = DensePoly<Integer>;

template <>
Poly Poly::multiply(const Poly& a, const Poly& b);
template <>
ZPoly ZPoly::multiply(const ZPoly& a, const ZPoly& b);

// ---------------------------------------------------------------------------
// Polynomials over Q.

/// Euclidean division; throws Error{ZeroPolynomial} when b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// a / b, which must be exact.
Poly divexact(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly monic(const Poly& p);

/// Splits p into (c, z) with p = c * z, z primitive with positive leading
/// coefficient. Zero maps to (0, 0).
std::pair<Rational, ZPoly> primitive_split(const Poly& p);
/// Canonical normalization: primitive integer part with positive leading
/// coefficient.
Poly canonical(const Poly& p);

Poly to_poly(const ZPoly& z);
/// Requires integer coefficients.
ZPoly to_zpoly(const Poly& p);

/// Exactly the integer roots of p in ascending order (repeated roots once).
/// Throws Error{ZeroPolynomial} on p = 0.
std::vector<Integer> integer_roots(const Poly& p);
/// Largest root r >= 0 of p among integers, or -1 when there is none.
long largest_nonnegative_integer_root(const Poly& p);

/// Falling factorial n(n-1)...(n-k+1) as a polynomial in n.
Poly falling_factorial_poly(long k);
/// (n+a)(n+a+1)...(n+a+k-1) as a polynomial in n.
Poly rising_factorial_poly(const Rational& a, long k);

/// Human form, highest degree first, e.g. "16*x^2 - x".
std::string to_string(const Poly& p, std::string_view var);

// ---------------------------------------------------------------------------
// Polynomials over Z.

Integer content(const ZPoly& p);
/// Content removed, positive leading coefficient.
ZPoly primitive_part(const ZPoly& p);
/// Exact division of every coefficient by d.
ZPoly divexact(const ZPoly& p, const Integer& d);
/// Exact division a / b over Z[x]; throws Error{Internal} when inexact.
ZPoly divexact(const ZPoly& a, const ZPoly& b);
/// lc(b)^(deg a - deg b + 1) * a = q * b + r.
std::pair<ZPoly, ZPoly> pseudo_divmod(const ZPoly& a, const ZPoly& b);
/// Primitive gcd with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);
std::string to_string(const ZPoly& p, std::string_view var);

}  // namespace holo
