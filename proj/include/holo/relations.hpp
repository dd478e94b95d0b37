#pragma once

#include <string>
#include <vector>

#include "holo/ore.hpp"
#include "holo/poly.hpp"

namespace holo {

/// sum_{i=0..r} c_i(n) u(n+i) = g(n) for n >= 0, with g = inhomogeneous
/// (zero polynomial when homogeneous).
struct Recurrence {
  std::vector<Poly> coeffs;
  std::vector<Rational> initial;
  Poly inhomogeneous;
  std::string var = "n";

  long order() const { return static_cast<long>(coeffs.size()) - 1; }
  bool homogeneous() const { return inhomogeneous.is_zero(); }
  OreOperator op() const { return OreOperator::from_polys(OreKind::Shift, var, coeffs); }
  /// Throws Error{InvalidInput} when the leading coefficient is zero.
  void validate() const;
};

/// sum_{i=0..s} p_i(x) y^(i)(x) = q(x); initial holds Taylor coefficients
/// y_0, y_1, ... (not derivatives).
struct DiffEquation {
  std::vector<Poly> coeffs;
  std::vector<Rational> initial;
  Poly inhomogeneous;
  std::string var = "x";

  long order() const { return static_cast<long>(coeffs.size()) - 1; }
  bool homogeneous() const { return inhomogeneous.is_zero(); }
  OreOperator op() const { return OreOperator::from_polys(OreKind::Differential, var, coeffs); }
  void validate() const;
};

/// P(x, y) = sum_i coeffs_y[i](x) y^i, together with the value f(0) that
/// selects a power series root.
struct AlgebraicEquation {
  std::vector<Poly> coeffs_y;
  Rational seed;
  std::string var = "x";

  long degree_y() const { return static_cast<long>(coeffs_y.size()) - 1; }
  long degree_x() const;
  /// P(x, y(x)) truncated to `terms` coefficients.
  std::vector<Rational> substitute(const std::vector<Rational>& series, std::size_t terms) const;
};

/// Canonical relation with its scalar content removed. For recurrences and
/// differential equations the inhomogeneous part is divided by the same
/// factor, so common factors are only removed when they divide it as well.
Recurrence canonical(const Recurrence& r);
DiffEquation canonical(const DiffEquation& d);

Recurrence recurrence_from_op(const OreOperator& op, std::vector<Rational> initial = {});
DiffEquation diffeq_from_op(const OreOperator& op, std::vector<Rational> initial = {});

/// Truncated power series arithmetic used across modules.
std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t n);

}  // namespace holo
