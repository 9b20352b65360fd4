#pragma once

#include <array>
#include <optional>
#include <span>

#include "soft7/scalar.hpp"

namespace soft7 {

/// An ordered index triple of imaginary units.
struct Triple {
  int i = 0;
  int j = 0;
  int k = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// The 35 triples 1 <= i < j < k <= 7 in lexicographic order.
const std::array<Triple, 35>& canonical_triples();

/// Position of a sorted triple in canonical_triples() plus the parity of the
/// permutation that sorts the query.
struct CanonicalTriple {
  int index = 0;
  int sign = 1;
};

/// Resolves (i,j,k) to its sorted position. Returns nullopt when any index is 0
/// or two indices coincide (every totally antisymmetric tensor vanishes there).
/// Throws IndexError for indices outside 0..7.
std::optional<CanonicalTriple> canonicalize(int i, int j, int k);

/// Totally antisymmetric f_ijk: +1 on the seven cycles
/// (123) (145) (246) (347) (176) (257) (365) and their even permutations.
class StructureConstants {
 public:
  StructureConstants();

  /// f_ijk for arbitrary order, 0 for repeated or real (0) indices.
  int operator()(int i, int j, int k) const;

  /// Values on the 35 sorted triples.
  const std::array<int, 35>& canonical() const { return canonical_; }

  /// The seven associative cycles, in the conventional order.
  static const std::array<Triple, 7>& cycles();

 private:
  std::array<int, 35> canonical_{};
};

const StructureConstants& structure_constants();

inline int fconst(int i, int j, int k) { return structure_constants()(i, j, k); }

/// phi = phi_0 e_0 + phi_i e_i.
template <Scalar T>
class Octonion {
 public:
  Octonion() = default;
  explicit Octonion(std::array<T, 8> coords) : c_(std::move(coords)) {}

  static Octonion basis(int mu) {
    if (mu < 0 || mu > 7) throw IndexError("octonion index out of range");
    Octonion o;
    o.c_[mu] = T(1);
    return o;
  }

  T& operator[](int mu) { return c_[static_cast<std::size_t>(mu)]; }
  const T& operator[](int mu) const { return c_[static_cast<std::size_t>(mu)]; }
  std::span<const T, 8> coords() const { return c_; }

  Octonion& operator+=(const Octonion& o) {
    for (int m = 0; m < 8; ++m) (*this)[m] += o[m];
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    for (int m = 0; m < 8; ++m) (*this)[m] -= o[m];
    return *this;
  }
  Octonion& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator-(Octonion a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Octonion operator*(const T& s, Octonion a) { return a *= s; }
  friend bool operator==(const Octonion&, const Octonion&) = default;

  bool is_zero() const {
    for (const auto& x : c_)
      if (!soft7::is_zero(x)) return false;
    return true;
  }

 private:
  std::array<T, 8> c_{};
};

template <Scalar T>
Octonion<T> oct_mul(const Octonion<T>& a, const Octonion<T>& b) {
  const auto& f = structure_constants();
  Octonion<T> c;
  for (int x = 0; x < 8; ++x) {
    if (soft7::is_zero(a[x])) continue;
    for (int y = 0; y < 8; ++y) {
      if (soft7::is_zero(b[y])) continue;
      T v = a[x] * b[y];
      if (x == 0) {
        c[y] += v;
      } else if (y == 0) {
        c[x] += v;
      } else if (x == y) {
        c[0] -= v;
      } else {
        // e_x e_y = f_xyk e_k, exactly one k is non-zero.
        for (int k = 1; k < 8; ++k) {
          const int s = f(x, y, k);
          if (s > 0) c[k] += v;
          if (s < 0) c[k] -= v;
        }
      }
    }
  }
  return c;
}

/// (ab)c - a(bc)
template <Scalar T>
Octonion<T> associator(const Octonion<T>& a, const Octonion<T>& b, const Octonion<T>& c) {
  return oct_mul(oct_mul(a, b), c) - oct_mul(a, oct_mul(b, c));
}

template <Scalar T>
Octonion<T> commutator(const Octonion<T>& a, const Octonion<T>& b) {
  return oct_mul(a, b) - oct_mul(b, a);
}

template <Scalar T>
Octonion<T> conjugate(Octonion<T> a) {
  for (int m = 1; m < 8; ++m) a[m] = -a[m];
  return a;
}

template <Scalar T>
T norm_sq(const Octonion<T>& a) {
  T s(0);
  for (int m = 0; m < 8; ++m) s += a[m] * a[m];
  return s;
}

template <Scalar T>
T dot(const Octonion<T>& a, const Octonion<T>& b) {
  T s(0);
  for (int m = 0; m < 8; ++m) s += a[m] * b[m];
  return s;
}

/// Builds an octonion from eight integer coordinates.
template <Scalar T>
Octonion<T> from_ints(std::array<long, 8> v) {
  Octonion<T> o;
  for (int m = 0; m < 8; ++m) o[m] = T(v[static_cast<std::size_t>(m)]);
  return o;
}

/// North pole e_0.
template <Scalar T>
Octonion<T> north_pole() {
  return Octonion<T>::basis(0);
}

}  // namespace soft7
