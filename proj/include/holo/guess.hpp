#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holo/linalg.hpp"
#include "holo/modular.hpp"
#include "holo/relations.hpp"

namespace holo {

enum class ArithPath { Modular, Rational };
enum class SeriesType { Ordinary, Exponential, Auto };

std::string to_string(ArithPath p);
std::string to_string(SeriesType s);

struct GuessConfig {
  /// Largest order (y-degree for algebraic guessing) tried.
  long max_order = 24;
  /// Largest coefficient degree tried; -1 lets the data decide.
  long max_degree = -1;
  /// Equations required beyond the number of unknowns.
  long margin = 3;
  /// Trailing terms kept out of the linear system and used as a check.
  long validation = 5;
  ArithPath path = ArithPath::Modular;
  SeriesType series = SeriesType::Ordinary;
  /// When the first sweep finds nothing, sweep again using every term with
  /// the minimal margin (1 for recurrences, 0 otherwise).
  bool short_data = true;

  /// Throws Error{InvalidInput} when margin < 1, validation < 0 or max_order < 1.
  void validate() const;
};

struct SweepEntry {
  long order = 0;
  long degree = 0;
  int phase = 1;
  /// "no-kernel", "rejected", "found" or "missing-initial".
  std::string outcome;
};

struct GuessReport {
  std::optional<Recurrence> rec;
  std::optional<DiffEquation> ode;
  std::optional<AlgebraicEquation> alg;
  SeriesType series_used = SeriesType::Ordinary;
  std::vector<SweepEntry> trace;
  /// Held-out terms the reported relation was checked on.
  std::size_t validated = 0;
  std::vector<u64> primes;
  std::vector<u64> skipped_primes;

  bool found() const { return rec || ode || alg; }
};

/// Row j (j + r < N) holds j^k u(j+i) in column i (d+1) + k.
/// Throws Error{NotEnoughData} when no row exists.
Matrix<Rational> build_guess_matrix(const std::vector<Rational>& terms, long r, long d);
/// Row m holds [x^m] x^k y^(i) in column i (d+1) + k, for m + s < N.
Matrix<Rational> build_ode_matrix(const std::vector<Rational>& series, long s, long d);
/// Row m holds [x^m] x^k y^i in column i (dx+1) + k, for m < N.
Matrix<Rational> build_alg_matrix(const std::vector<Rational>& series, long dy, long dx);

/// Kernel basis in reduced echelon normalization (entry 1 at each free
/// column), through elimination modulo the primes of `primes`, which grows as
/// needed, then CRT and rational reconstruction; verified over Q.
/// Throws Error{ReconstructionFailed} or Error{UnluckyPrimeExhaustion}.
std::vector<std::vector<Rational>> modular_kernel(const Matrix<Rational>& m, PrimeSet& primes);
/// Same basis through elimination over Q.
std::vector<std::vector<Rational>> rational_kernel(const Matrix<Rational>& m);

/// Throws Error{NotEnoughData} below 6 terms.
GuessReport guess_rec(const std::vector<Rational>& terms, const GuessConfig& cfg = {});
GuessReport guess_diffeq(const std::vector<Rational>& terms, const GuessConfig& cfg = {});
GuessReport guess_algeq(const std::vector<Rational>& terms, const GuessConfig& cfg = {});

}  // namespace holo
