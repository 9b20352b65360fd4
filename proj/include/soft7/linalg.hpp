#pragma once

// Fixed 8x8 matrices acting on octonion coordinate columns, plus the small
// amount of dense linear algebra the rest of the library needs (rank, span
// membership, square solves).

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "soft7/octonion.hpp"
#include "soft7/scalar.hpp"

namespace soft7 {

template <typename E>
class Matrix8 {
 public:
  Matrix8() = default;

  static Matrix8 identity() {
    Matrix8 m;
    for (int d = 0; d < 8; ++d) m(d, d) = E(1);
    return m;
  }

  E& operator()(int r, int c) { return a_[static_cast<std::size_t>(8 * r + c)]; }
  const E& operator()(int r, int c) const { return a_[static_cast<std::size_t>(8 * r + c)]; }
  std::span<const E, 64> entries() const { return a_; }

  Matrix8& operator+=(const Matrix8& o) {
    for (std::size_t n = 0; n < 64; ++n) a_[n] += o.a_[n];
    return *this;
  }
  Matrix8& operator-=(const Matrix8& o) {
    for (std::size_t n = 0; n < 64; ++n) a_[n] -= o.a_[n];
    return *this;
  }
  Matrix8& operator*=(const E& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }
  friend Matrix8 operator+(Matrix8 a, const Matrix8& b) { return a += b; }
  friend Matrix8 operator-(Matrix8 a, const Matrix8& b) { return a -= b; }
  friend Matrix8 operator-(Matrix8 a) {
    for (auto& x : a.a_) x = -x;
    return a;
  }
  friend Matrix8 operator*(const E& s, Matrix8 a) { return a *= s; }

  friend Matrix8 operator*(const Matrix8& a, const Matrix8& b) {
    Matrix8 c;
    for (int r = 0; r < 8; ++r)
      for (int k = 0; k < 8; ++k) {
        const E& x = a(r, k);
        if (soft7::is_zero(x)) continue;
        for (int col = 0; col < 8; ++col) {
          if (soft7::is_zero(b(k, col))) continue;
          c(r, col) += x * b(k, col);
        }
      }
    return c;
  }

  friend bool operator==(const Matrix8&, const Matrix8&) = default;

  Matrix8 transpose() const {
    Matrix8 t;
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!soft7::is_zero(x)) return false;
    return true;
  }

  /// Largest entry magnitude, as a double.
  double max_abs() const {
    double m = 0;
    for (const auto& x : a_) m = std::max(m, magnitude(x));
    return m;
  }

 private:
  std::array<E, 64> a_{};
};

template <Scalar T>
using Mat8 = Matrix8<T>;

template <Scalar T>
using Mat8C = Matrix8<Complex<T>>;

template <typename E>
Matrix8<E> mat_mul(const Matrix8<E>& a, const Matrix8<E>& b) {
  return a * b;
}
template <typename E>
Matrix8<E> mat_add(const Matrix8<E>& a, const Matrix8<E>& b) {
  return a + b;
}
template <typename E>
Matrix8<E> mat_scale(const E& s, const Matrix8<E>& a) {
  return s * a;
}
template <typename E>
Matrix8<E> mat_commutator(const Matrix8<E>& a, const Matrix8<E>& b) {
  return a * b - b * a;
}
template <typename E>
Matrix8<E> mat_anticommutator(const Matrix8<E>& a, const Matrix8<E>& b) {
  return a * b + b * a;
}

/// M times the coordinate column of phi.
template <Scalar T>
Octonion<T> apply(const Mat8<T>& m, const Octonion<T>& phi) {
  Octonion<T> out;
  for (int r = 0; r < 8; ++r) {
    T s(0);
    for (int c = 0; c < 8; ++c)
      if (!is_zero(m(r, c))) s += m(r, c) * phi[c];
    out[r] = s;
  }
  return out;
}

/// phi^t M phi
template <Scalar T>
T quadratic_form(const Mat8<T>& m, const Octonion<T>& phi) {
  return dot(phi, apply(m, phi));
}

/// Complexification of a real matrix, scaled by re + i im.
template <Scalar T>
Mat8C<T> complexify(const Mat8<T>& m, const Complex<T>& factor = Complex<T>(T(1))) {
  Mat8C<T> out;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) out(r, c) = factor * Complex<T>(m(r, c));
  return out;
}

template <Scalar T>
std::vector<T> flatten(const Mat8<T>& m) {
  return {m.entries().begin(), m.entries().end()};
}

/// Real and imaginary parts laid side by side (128 entries).
template <Scalar T>
std::vector<T> flatten(const Mat8C<T>& m) {
  std::vector<T> v;
  v.reserve(128);
  for (const auto& z : m.entries()) v.push_back(z.re);
  for (const auto& z : m.entries()) v.push_back(z.im);
  return v;
}

/// Singular value / pivot threshold used when the float model reports rank.
inline constexpr double kRankThreshold = 1e-9;

/// Incremental row echelon basis. Exact in the rational model; the float
/// model treats residual entries below kRankThreshold as zero.
template <Scalar T>
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}

  /// Reduces v against the basis and returns what is left.
  std::vector<T> residual(std::vector<T> v) const;

  /// Adds v when independent. Returns whether it was.
  bool insert(std::vector<T> v);

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<T> v;  // v[pivot] == 1
  };
  std::size_t dim_;
  std::vector<Row> rows_;
};

template <Scalar T>
bool is_zero_vector(const std::vector<T>& v, double threshold = kRankThreshold) {
  for (const auto& x : v) {
    if constexpr (is_exact_v<T>) {
      if (!is_zero(x)) return false;
    } else {
      if (magnitude(x) > threshold) return false;
    }
  }
  return true;
}

/// Dimension of the span of the flattened matrices. Exact elimination in the
/// rational model; singular values above kRankThreshold in the float model.
template <Scalar T>
std::size_t mat_rank(const std::vector<Mat8<T>>& mats);

template <Scalar T>
std::size_t mat_rank(const std::vector<Mat8C<T>>& mats);

/// Solves the square system a x = b. nullopt when a is singular.
template <Scalar T>
std::optional<std::vector<T>> solve_square(std::vector<std::vector<T>> a, std::vector<T> b);

}  // namespace soft7
