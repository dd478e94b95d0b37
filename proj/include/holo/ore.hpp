#pragma once

#include <string>
#include <vector>

#include "holo/poly.hpp"
#include "holo/ratfun.hpp"

namespace holo {

/// differential: D x = x D + 1.  shift: S n = (n + 1) S.
enum class OreKind { Differential, Shift };

std::string to_string(OreKind kind);

/// Sum of coeffs[i] * D^i with coefficients in Q(x). Trailing zero
/// coefficients are dropped, so a nonzero operator has a nonzero leading
/// coefficient.
class OreOperator {
 public:
  OreOperator() = default;
  OreOperator(OreKind kind, std::string var, std::vector<RatFun> coeffs);
  static OreOperator from_polys(OreKind kind, std::string var, const std::vector<Poly>& coeffs);
  /// D itself.
  static OreOperator generator(OreKind kind, std::string var);

  OreKind kind() const { return kind_; }
  const std::string& var() const { return var_; }
  const std::vector<RatFun>& coeffs() const { return c_; }
  /// -1 for the zero operator.
  long order() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RatFun& leading() const { return c_.back(); }
  bool has_polynomial_coeffs() const;
  /// Requires has_polynomial_coeffs().
  std::vector<Poly> poly_coeffs() const;

  /// Denominators cleared, common polynomial and integer content removed,
  /// positive leading coefficient of the leading polynomial.
  OreOperator canonical() const;
  /// Leading coefficient 1 over Q(x).
  OreOperator monic() const;

  OreOperator operator-() const;
  friend OreOperator operator+(const OreOperator& a, const OreOperator& b);
  friend OreOperator operator-(const OreOperator& a, const OreOperator& b);
  /// Left multiplication by a scalar of Q(x).
  friend OreOperator operator*(const RatFun& s, const OreOperator& a);
  friend bool operator==(const OreOperator& a, const OreOperator& b) {
    return a.kind_ == b.kind_ && a.c_ == b.c_;
  }
  friend bool operator!=(const OreOperator& a, const OreOperator& b) { return !(a == b); }

 private:
  void trim();
  OreKind kind_ = OreKind::Differential;
  std::string var_ = "x";
  std::vector<RatFun> c_;
};

/// sigma and delta of the commutation rule D a = sigma(a) D + delta(a).
Poly ore_sigma(OreKind kind, const Poly& a, long times = 1);
Poly ore_delta(OreKind kind, const Poly& a);
RatFun ore_sigma(OreKind kind, const RatFun& a);
RatFun ore_delta(OreKind kind, const RatFun& a);

/// Throws Error{KindMismatch} on different kind or variable.
OreOperator ore_mul(const OreOperator& a, const OreOperator& b);

struct DivMod {
  OreOperator quotient;
  OreOperator remainder;
};
/// a = quotient * b + remainder over Q(x). Throws Error{DivisionByZeroOperator}.
DivMod right_divmod(const OreOperator& a, const OreOperator& b);

/// Canonical greatest common right divisor.
OreOperator gcrd(const OreOperator& a, const OreOperator& b);
/// Canonical least common left multiple, found as the first Q(x)-linear
/// dependency among the right remainders of D^k by a and by b.
OreOperator lclm(const OreOperator& a, const OreOperator& b);
OreOperator lclm(const std::vector<OreOperator>& ops);

/// Differential kind: data is a truncated power series f; returns the
/// coefficients of sum p_i f^(i) that the truncation determines. Shift kind:
/// data is u_0..u_{N-1}; returns j -> sum c_i(j) u_{j+i} for every j with
/// j + order < N. Denominators are cleared first (operator left-multiplied by
/// the lcm of denominators). Throws Error{NotEnoughData} when nothing can be
/// produced.
std::vector<Rational> apply_operator(const OreOperator& op, const std::vector<Rational>& data);

/// "kind=diff var=x; [p_0; p_1; ...]" with each p_i a coefficient array.
std::string to_string(const OreOperator& op);
/// Equation-like rendering, e.g. "(x - 1)*D^2 + x*D + 1".
std::string to_pretty(const OreOperator& op);

}  // namespace holo
