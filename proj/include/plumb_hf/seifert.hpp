#pragma once

#include <cstdint>
#include <vector>

#include "plumb_hf/contfrac.hpp"
#include "plumb_hf/graph.hpp"

namespace plumb {

struct Ray {
  std::int64_t a = 0;  // > 0
  std::int64_t b = 0;  // -a < b < 0

  Rat ratio() const { return Rat(a, b); }
  friend bool operator==(const Ray&, const Ray&) = default;
};

/// Star data: center weight m and one (a_i, b_i) per ray, satisfying
///   a_1...a_k (-m + sum b_i/a_i) = 1.
struct SeifertInvariants {
  std::int64_t m = 0;
  std::vector<Ray> rays;

  /// Exact evaluation of the plumbing condition (checked arithmetic).
  bool satisfies_plumbing_condition() const;
  friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;
};

/// Center vertex 0 with weight m, then each ray's expansion laid out outward.
/// Rays with a_i/b_i >= -1 are rejected (OutOfRange).
PlumbingGraph star_graph(const SeifertInvariants& inv);

/// Two-ray star with center -1 for (a1, b1, a2, b2).
struct SphereQuadruple;
PlumbingGraph star_graph(const SphereQuadruple& q);

/// Solves the plumbing condition for pairwise coprime multiplicities,
/// normalizing -a_i < b_i < 0. Rays keep the order of the input. Throws
/// NotCoprime, OutOfRange (some a_i < 2 or empty), NonNegDefinite.
SeifertInvariants brieskorn(const std::vector<std::int64_t>& multiplicities);

/// (a1, b1, a2, b2) with 1 + b1/a1 + b2/a2 = 1/(a1 a2).
struct SphereQuadruple {
  std::int64_t a1 = 0, b1 = 0, a2 = 0, b2 = 0;

  Ray first() const { return {a1, b1}; }
  Ray second() const { return {a2, b2}; }
  SphereQuadruple swapped() const { return {a2, b2, a1, b1}; }
  /// Display order: a1/b1 >= -2 > a2/b2.
  SphereQuadruple canonical() const;

  friend bool operator==(const SphereQuadruple&, const SphereQuadruple&) = default;
  friend auto operator<=>(const SphereQuadruple&, const SphereQuadruple&) = default;
};

/// a1 a2 + a2 b1 + a1 b2 == 1 with a_i > 0, b_i < 0.
bool check_quadruple(const SphereQuadruple& q);

/// One reduction step (a1,b1,a2,b2) -> (-b1, 2 b1 + a1, a2 + b2, b2), applied
/// after placing the ray with ratio > -2 first. Throws BaseCase when that ray
/// is exactly -2, OutOfRange when q is not a valid quadruple.
SphereQuadruple reduce_quadruple(const SphereQuadruple& q);

/// Closure of the family (2, -1, 2k+1, -k) under the two inverse reduction
/// moves, restricted to a1 + a2 <= bound. Canonical order, sorted, unique.
std::vector<SphereQuadruple> enumerate_quadruples(std::int64_t bound);

}  // namespace plumb
