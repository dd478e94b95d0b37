#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "holo/linalg.hpp"
#include "holo/relations.hpp"

namespace holo {

/// Indices that unrolling cannot compute: 0..r-1 and k + r for every integer
/// root k >= 0 of the leading coefficient.
std::vector<long> required_initial_indices(const std::vector<Poly>& coeffs);
/// One past the largest required index.
std::size_t required_initial_count(const std::vector<Poly>& coeffs);
std::size_t required_initial_count(const Recurrence& rec);
std::size_t required_initial_count(const DiffEquation& deq);

/// u_0..u_{n-1}. Throws Error{MissingInitialTerms} naming the indices needed.
std::vector<Rational> unroll(const Recurrence& rec, std::size_t n);
/// Unrolls sum_k coeffs[k](j) u(j+k) = rhs(j), j >= 0, from the given prefix.
std::vector<Rational> unroll_raw(const std::vector<Poly>& coeffs, const std::function<Rational(long)>& rhs,
                                 const std::vector<Rational>& initial, std::size_t n);

/// Product of integer companion matrices for steps lo..hi-1 together with
/// the product of leading coefficients; state(k+1) = m * state(k) / den.
struct SplitMatrix {
  Matrix<Integer> m;
  Integer den;
  long lo = 0;
  long hi = 0;
};

/// Companion product for [lo, hi). Intervals shorter than `threshold` are
/// multiplied step by step, longer ones split in halves.
SplitMatrix split_product(const std::vector<ZPoly>& coeffs, long lo, long hi, long threshold = 32);
/// Combines [lo, mid) and [mid, hi).
SplitMatrix combine(const SplitMatrix& left, const SplitMatrix& right);

/// u_N by binary splitting; equals unroll(rec, N + 1)[N]. Homogeneous only.
Rational nth_term(const Recurrence& rec, std::size_t n, long threshold = 32);

/// First n Taylor coefficients of the solution fixed by deq.initial.
std::vector<Rational> series_from_diffeq(const DiffEquation& deq, std::size_t n);
/// First n coefficients of the root through the seed, via the differential
/// equation of P and checked by substitution into P.
std::vector<Rational> series_from_algeq(const AlgebraicEquation& alg, std::size_t n);

enum class NamedKind { TwoF1, Pow1p, Exp };

struct NamedSpec {
  NamedKind kind = NamedKind::Exp;
  Rational a, b, c;  // TwoF1: a, b; c. Pow1p: exponent in c.
};

struct NamedSeries {
  std::vector<Rational> terms;
  /// First-order recurrence of the coefficients with u_0 = 1.
  Recurrence rec;
  /// Differential equation of the series with y(0) = 1.
  DiffEquation deq;
};

/// Throws Error{InvalidParameter} for 2F1 with c a non-positive integer.
NamedSeries named_series(const NamedSpec& spec, std::size_t n);
NamedSpec two_f1(const Rational& a, const Rational& b, const Rational& c);
NamedSpec pow1p(const Rational& c);
NamedSpec exp_series();

}  // namespace holo
