#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "plumb_hf/rational.hpp"

namespace plumb {

/// Negative (Hirzebruch-Jung) continued fraction
///   [t1; t2; ...; tp] = t1 - 1/(t2 - 1/(... - 1/tp)).
/// Canonical form has every coefficient <= -2.
class NegContinuedFraction {
 public:
  /// Throws OutOfRange if coeffs is empty or some coefficient is > -2.
  explicit NegContinuedFraction(std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::size_t length() const { return coeffs_.size(); }

  friend bool operator==(const NegContinuedFraction&, const NegContinuedFraction&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Literal nested evaluation of arbitrary integer coefficients. Throws
/// DegenerateFraction when an inner value is zero.
Rat eval_coeffs(const std::vector<std::int64_t>& coeffs);

Rat eval_cf(const NegContinuedFraction& cf);

/// Unique all-(<= -2) expansion of x < -1. Throws OutOfRange otherwise.
NegContinuedFraction expand_cf(const Rat& x);

/// Tail values A_i/B_i = [t_i; ...; t_p], normalized A_i > 0 > B_i, with the
/// sentinel (A_{p+1}, B_{p+1}) = (1, 0) kept as the last entry.
struct ConvergentTable {
  std::vector<std::int64_t> a;  // size p + 1
  std::vector<std::int64_t> b;  // size p + 1

  std::size_t length() const { return a.size() - 1; }
  std::pair<std::int64_t, std::int64_t> operator[](std::size_t i) const { return {a[i], b[i]}; }
};

ConvergentTable convergents(const NegContinuedFraction& cf);

struct Lemma1Result {
  bool bumped_first = false;   // 1/[t1..tp+1] + 1/[s1..sq] <= -1
  bool bumped_second = false;  // 1/[t1..tp] + 1/[s1..sq+1] <= -1
};

/// Both inequalities for a pair of ray expansions, evaluated exactly. The
/// bumped fractions are evaluated literally, never re-canonicalized.
Lemma1Result lemma1_check(const NegContinuedFraction& t, const NegContinuedFraction& s);

}  // namespace plumb
