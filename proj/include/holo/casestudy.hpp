#pragma once

#include <string>
#include <vector>

#include "holo/rational.hpp"

namespace holo {

struct Checkpoint {
  std::string label;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct CaseReport {
  std::string name;
  std::vector<Checkpoint> checkpoints;
  /// Remarks that are not checked, such as the scope of the evidence.
  std::vector<std::string> notes;
  double seconds = 0;

  /// True when every checkpoint passes and there is at least one.
  bool passed() const;
  /// Adds a checkpoint that passes when both texts agree.
  void check(const std::string& label, const std::string& expected, const std::string& computed);
  void check(const std::string& label, const std::string& expected, const std::string& computed, bool pass);
};

/// Human readable report, one line per checkpoint.
std::string to_text(const CaseReport& report);

/// Order 3 recurrence of a_n by closure, order 2 recurrence and order 2
/// differential equation by guessing, and the LCLM and GCRD proof steps.
CaseReport run_yang_zagier();

/// Minimal polynomials of the twelfth powers of the two hypergeometric
/// series, each certified against the differential equation of the power.
CaseReport run_yang_zagier_algebraicity(std::size_t terms = 120);

/// Identity between the derivative of w_a and 2F1(a, a+1; 2; x) at a fixed
/// value of a. Throws Error{InvalidParameter} for a = 0 or a = 1.
CaseReport run_iso(const Rational& a);

}  // namespace holo
