#include "holo/ratfun.hpp"

#include "holo/error.hpp"

namespace holo {

RatFun::RatFun(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero denominator in rational function");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den.degree() > 0) {
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
      num = divexact(num, g);
      den = divexact(den, g);
    }
  }
  Rational lc = den.leading();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFun RatFun::derivative() const {
  if (is_polynomial()) return RatFun(num_.derivative());
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::shift(const Rational& k) const {
  RatFun r;
  r.num_ = num_.shift(k);
  r.den_ = den_.shift(k);
  return r;
}

Rational RatFun::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw Error(ErrorKind::ZeroPolynomial, "pole of rational function");
  return num_.eval(x) / d;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFun(a.num_ * b.num_);
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero rational function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RatFun& f, std::string_view var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace holo
