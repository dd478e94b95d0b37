#pragma once

#include <map>
#include <vector>

#include "holo/relations.hpp"

namespace holo {

/// Coefficient recurrence of a differential equation before any clean-up:
/// sum_k coeffs[k](n) u(n+k) = rhs[n] for every n >= 0 (rhs missing = 0).
/// Equations with n < 0, present when `offset` is negative, only constrain
/// initial values and are dropped.
struct InducedRecurrence {
  std::vector<Poly> coeffs;
  long offset = 0;
  std::map<long, Rational> rhs;
};

InducedRecurrence induced_recurrence(const DiffEquation& deq);

/// Converts c(theta) with theta = x d/dx into sum_j b_j x^j D^j, returned as
/// operator coefficients (index j holds b_j x^j).
std::vector<Poly> theta_to_diff(const Poly& c);

DiffEquation rec_to_diffeq(const Recurrence& rec);
Recurrence diffeq_to_rec(const DiffEquation& deq);

template <class T>
struct Homogenized {
  T relation;
  /// Set when the input had no inhomogeneous part; relation is then the input.
  bool already_homogeneous = false;
};

/// Left-composes with q D - q' where q is the right-hand side.
Homogenized<DiffEquation> homogenize_diffeq(const DiffEquation& deq);
/// Left-composes with (S - 1)^(deg g + 1) where g is the right-hand side.
Homogenized<Recurrence> homogenize_rec(const Recurrence& rec);

struct AlgeqOptions {
  /// Verification depth for the result, in series coefficients.
  std::size_t check_terms = 60;
  /// Largest y-degree handled by exact elimination over Q(x); above it the
  /// multimodular evaluation path is used.
  long exact_max_degree = 6;
  /// Force one path: 0 automatic, 1 exact, 2 modular.
  int path = 0;
};

/// Linear differential equation (possibly inhomogeneous) satisfied by every
/// root of P, with initial coefficients of the root through the seed.
/// Throws Error{SingularSeed} when dP/dy(0, seed) = 0 and Error{NotSquarefree}
/// when P has a repeated factor in y that cannot be removed.
DiffEquation algeq_to_diffeq(const AlgebraicEquation& alg, const AlgeqOptions& opt = {});

/// Power series root of P through the seed, computed coefficient by
/// coefficient; requires dP/dy(0, seed) != 0.
std::vector<Rational> algebraic_series(const AlgebraicEquation& alg, std::size_t n);

}  // namespace holo
