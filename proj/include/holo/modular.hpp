#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "holo/rational.hpp"

namespace holo {

using u64 = std::uint64_t;

/// Word-size prime field helpers. Every modulus is below 2^31, so the product
/// of two reduced residues always fits in 64 bits.
inline u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mul_mod(u64 a, u64 b, u64 p) { return (a * b) % p; }
u64 pow_mod(u64 a, u64 e, u64 p);
/// Inverse of a nonzero residue.
u64 inv_mod(u64 a, u64 p);

u64 reduce(const Integer& z, u64 p);
/// Numerator times inverse denominator; nullopt when p divides the denominator.
std::optional<u64> reduce(const Rational& q, u64 p);

bool is_prime(u64 n);

/// Primes strictly decreasing from just below 2^31, with a log of the ones
/// rejected as unlucky by the algorithm using them.
class PrimeSet {
 public:
  static constexpr u64 kBound = u64{1} << 31;

  PrimeSet() = default;
  /// The first `count` primes below kBound.
  static PrimeSet make(std::size_t count);

  const std::vector<u64>& primes() const { return primes_; }
  const std::vector<u64>& skipped() const { return skipped_; }
  std::size_t size() const { return primes_.size(); }

  /// Appends the next prime below every prime seen so far and returns it.
  u64 grow();
  /// Moves p from the active list into the skip log.
  void skip(u64 p);

 private:
  u64 next_candidate() const;
  std::vector<u64> primes_;
  std::vector<u64> skipped_;
};

/// Unique x in [0, prod p) with x = r_i mod p_i. Throws Error{DuplicatePrime}.
Integer crt_combine(const std::vector<std::pair<Integer, u64>>& residues);

/// Folds one more residue into (x mod m); m grows to m * p.
void crt_accumulate(Integer& x, Integer& m, u64 r, u64 p);

/// Smallest fraction a/b with |a|, b <= sqrt(m/2) and a = b v (mod m), or
/// nullopt. Requires 0 <= v < m.
std::optional<Rational> rational_reconstruct(const Integer& v, const Integer& m);

/// Like rational_reconstruct but throws Error{NoReconstruction}.
Rational rational_reconstruct_or_throw(const Integer& v, const Integer& m);

}  // namespace holo
