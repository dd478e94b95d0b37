#pragma once

#include "holo/relations.hpp"

namespace holo {

/// Recurrence of u + v. Inputs are homogenized first; the result holds for
/// every n >= 0 and carries initial terms obtained by unrolling both inputs.
Recurrence rec_add(const Recurrence& a, const Recurrence& b);
/// Recurrence of the termwise product u * v.
Recurrence rec_mul(const Recurrence& a, const Recurrence& b);
/// Recurrence of u(n) * w^n. Throws Error{ZeroRatio} when w = 0.
Recurrence geometric_scale(const Recurrence& r, const Rational& w);

/// Differential equation of f + g.
DiffEquation diffeq_add(const DiffEquation& a, const DiffEquation& b);
/// Differential equation of the product f * g.
DiffEquation diffeq_mul(const DiffEquation& a, const DiffEquation& b);
/// Differential equation of f^k, from the monomials in f, f', ..., f^(s-1).
DiffEquation diffeq_pow(const DiffEquation& a, unsigned k);
/// Differential equation of M(f) for a differential operator M with
/// polynomial coefficients (given lowest order first).
DiffEquation diffeq_apply(const DiffEquation& a, const std::vector<Poly>& m);

}  // namespace holo
