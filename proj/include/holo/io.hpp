#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "holo/casestudy.hpp"
#include "holo/guess.hpp"
#include "holo/relations.hpp"

namespace holo {

enum class SequenceFormat { Plain, BFile };

struct SequenceEntry {
  std::optional<long> index;
  Rational value;
  bool operator==(const SequenceEntry&) const = default;
};

struct SequenceFile {
  std::vector<SequenceEntry> entries;
  SequenceFormat format = SequenceFormat::Plain;

  std::vector<Rational> values() const;
};

/// One value per line, or OEIS b-file lines "index value". Lines starting
/// with '#' and blank lines are skipped. Throws Error{ParseError} naming the
/// line, or Error{NonContiguousIndices} when b-file indices skip or repeat.
SequenceFile parse_sequence(std::string_view text);
std::string format_sequence(const SequenceFile& seq);

/// Polynomial expression with integers, one variable, + - * / ^ and
/// parentheses; a number followed by a variable or '(' multiplies. When `var`
/// is empty it is set to the first identifier met. Throws Error{ParseError}.
Poly parse_poly(std::string_view text, std::string& var);

using Relation = std::variant<Recurrence, DiffEquation, AlgebraicEquation>;

enum class FormatMode { Json, Pretty };

/// Pretty mode: the equation on the first line, for example
/// "(n + 2)*u(n+1) + (-4*n - 2)*u(n) = 0", then one line per initial value
/// ("u(0) = 1", "[x^0]y(x) = 1" or "y(0) = 1"). Json mode: an object with
/// kind "rec", "ode" or "alg", variable, coefficients (lowest order first,
/// as polynomial strings), initial and inhomogeneous when nonzero; "alg"
/// objects hold coefficients_y and seed instead.
std::string format_relation(const Relation& rel, FormatMode mode);
Relation parse_relation_json(std::string_view text);
Relation parse_relation_pretty(std::string_view text);
/// JSON when the first non-blank character is '{', pretty text otherwise.
Relation parse_relation(std::string_view text);

std::string report_json(const GuessReport& report);
std::string report_text(const GuessReport& report);
std::string report_json(const CaseReport& report);

}  // namespace holo
