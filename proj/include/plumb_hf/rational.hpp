#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "plumb_hf/error.hpp"

namespace plumb {

namespace detail {

template <std::signed_integral Int>
Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication");
  return r;
}

template <std::signed_integral Int>
Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition");
  return r;
}

template <std::signed_integral Int>
Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer subtraction");
  return r;
}

}  // namespace detail

/// Exact rational number, always stored reduced with a positive denominator.
/// Arithmetic is overflow-checked and throws ErrorCode::Overflow.
template <std::signed_integral Int = std::int64_t>
class Rational {
 public:
  using Integer = Int;

  constexpr Rational() = default;
  constexpr Rational(Int value) : num_(value) {}  // NOLINT(google-explicit-constructor)

  Rational(Int num, Int den) : num_(num), den_(den) {
    if (den_ == 0) throw Error(ErrorCode::DegenerateFraction, "zero denominator");
    normalize();
  }

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  /// Largest integer not exceeding the value.
  Int floor() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  Rational reciprocal() const {
    if (num_ == 0) throw Error(ErrorCode::DegenerateFraction, "reciprocal of zero");
    return Rational(den_, num_);
  }

  Rational operator-() const { return from_reduced(detail::checked_sub(Int{0}, num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const Int g = std::gcd(a.den_, b.den_);
    const Int da = a.den_ / g;
    const Int db = b.den_ / g;
    const Int n = detail::checked_add(detail::checked_mul(a.num_, db), detail::checked_mul(b.num_, da));
    return Rational(n, detail::checked_mul(a.den_, db));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const Int g1 = std::gcd(a.num_, b.den_);
    const Int g2 = std::gcd(b.num_, a.den_);
    // Both gcds are >= 1 since denominators are positive.
    const Int n = detail::checked_mul(a.num_ / g1, b.num_ / g2);
    const Int d = detail::checked_mul(a.den_ / g2, b.den_ / g1);
    return Rational(n, d);
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Cross-multiplication is exact because denominators are positive.
    return detail::checked_mul(a.num_, b.den_) <=> detail::checked_mul(b.num_, a.den_);
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational from_reduced(Int n, Int d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = detail::checked_sub(Int{0}, num_);
      den_ = detail::checked_sub(Int{0}, den_);
    }
    const Int g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_ = 0;
  Int den_ = 1;
};

using Rat = Rational<std::int64_t>;

}  // namespace plumb
