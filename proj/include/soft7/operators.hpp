#pragma once

// Left and right octonionic multiplication as 8x8 matrices.
//
// left_op(i) is the matrix of phi -> e_i phi and right_op(i) the matrix of
// phi -> phi e_i, both acting on the coordinate column (phi_0, ..., phi_7)^t:
//
//   (E_i)_{mu nu}   = -d_{0 mu} d_{i nu} + d_{0 nu} d_{i mu} - f_{i mu nu}
//   (1|E_i)_{mu nu} = -d_{0 mu} d_{i nu} + d_{0 nu} d_{i mu} + f_{i mu nu}
//
// f with a 0 index is 0. The point dependent versions replace f by the
// structure functions f(+)(phi) (left) and -f(-)(phi) (right), so both reduce
// to the constant matrices at the north pole.

#include <array>

#include "soft7/linalg.hpp"
#include "soft7/octonion.hpp"

namespace soft7 {

enum class Side { Left, Right };

template <Scalar T>
const Mat8<T>& left_op(int i);

template <Scalar T>
const Mat8<T>& right_op(int i);

template <Scalar T>
const Mat8<T>& side_op(Side side, int i) {
  return side == Side::Left ? left_op<T>(i) : right_op<T>(i);
}

/// E_i(phi). Throws ZeroPointError for phi = 0.
template <Scalar T>
Mat8<T> left_op_at(int i, const Octonion<T>& phi);

/// 1|E_i(phi). Throws ZeroPointError for phi = 0.
template <Scalar T>
Mat8<T> right_op_at(int i, const Octonion<T>& phi);

/// All seven point dependent operators of one side, built from a single
/// structure function table.
template <Scalar T>
std::array<Mat8<T>, 7> soft_ops(Side side, const Octonion<T>& phi);

/// The formal combination sum_i a_i E_i + sum_i b_i 1|E_i.
template <Scalar T>
struct LRCombo {
  std::array<T, 7> left{};
  std::array<T, 7> right{};

  static LRCombo single(int i, T a, T b) {
    LRCombo c;
    c.left[static_cast<std::size_t>(i - 1)] = std::move(a);
    c.right[static_cast<std::size_t>(i - 1)] = std::move(b);
    return c;
  }

  Mat8<T> evaluate() const {
    Mat8<T> m;
    for (int i = 1; i <= 7; ++i) {
      const auto n = static_cast<std::size_t>(i - 1);
      if (!is_zero(left[n])) m += left[n] * left_op<T>(i);
      if (!is_zero(right[n])) m += right[n] * right_op<T>(i);
    }
    return m;
  }

  /// Octonionic conjugation: conj(E) = -1|E and conj(1|E) = -E, i.e.
  /// (a, b) -> (-b, -a). Not matrix conjugation.
  LRCombo conjugate() const {
    LRCombo c;
    for (std::size_t n = 0; n < 7; ++n) {
      c.left[n] = -right[n];
      c.right[n] = -left[n];
    }
    return c;
  }

  friend bool operator==(const LRCombo&, const LRCombo&) = default;
};

}  // namespace soft7
