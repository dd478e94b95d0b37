#pragma once

#include <string>
#include <string_view>

#include "holo/poly.hpp"

namespace holo {

/// Element of Q(x): reduced fraction with monic denominator.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RatFun(Poly num, Poly den);
  RatFun(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFun(long c) : num_(Rational(c)), den_(1) {}   // NOLINT

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFun derivative() const;
  /// f(x + k).
  RatFun shift(const Rational& k) const;
  Rational eval(const Rational& x) const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  /// Throws Error{ZeroPolynomial} on division by zero.
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

 private:
  Poly num_;
  Poly den_;
};

std::string to_string(const RatFun& f, std::string_view var);

}  // namespace holo
