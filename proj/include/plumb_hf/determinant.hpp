#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "plumb_hf/rational.hpp"

namespace plumb {

namespace detail {

template <typename Scalar>
Scalar mul(Scalar a, Scalar b) {
  if constexpr (std::is_integral_v<Scalar>) return checked_mul(a, b);
  else return a * b;
}

template <typename Scalar>
Scalar sub(Scalar a, Scalar b) {
  if constexpr (std::is_integral_v<Scalar>) return checked_sub(a, b);
  else return a - b;
}

}  // namespace detail

/*
 * Fraction-free (Bareiss) elimination over an integral scalar.
 *
 * Every intermediate entry is a minor of the input, so all divisions are
 * exact. With integral scalars each product is overflow checked and an
 * ErrorCode::Overflow is raised rather than wrapping.
 */
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  eigen_assert(input.rows() == input.cols());
  const Index n = input.rows();
  if (n == 0) return Scalar(1);

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  Scalar prev(1);
  Scalar sign(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Index swap = k + 1;
      while (swap < n && a(swap, k) == Scalar(0)) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = detail::sub(detail::mul(a(i, j), a(k, k)), detail::mul(a(i, k), a(k, j))) / prev;
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Leading principal minors det(M[0..k, 0..k]) for k = 1..n, computed as the
/// unpivoted Bareiss pivots. Stops early (shorter result) at the first zero
/// minor, after which later minors are not needed by any caller.
template <typename Derived>
std::vector<typename Derived::Scalar> leading_principal_minors(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  const Index n = input.rows();
  std::vector<Scalar> minors;
  minors.reserve(static_cast<std::size_t>(n));
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  Scalar prev(1);
  for (Index k = 0; k < n; ++k) {
    minors.push_back(a(k, k));
    if (a(k, k) == Scalar(0)) break;
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = detail::sub(detail::mul(a(i, j), a(k, k)), detail::mul(a(i, k), a(k, j))) / prev;
      }
    }
    prev = a(k, k);
  }
  return minors;
}

}  // namespace plumb
