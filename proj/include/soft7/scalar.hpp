#pragma once

// Scalar models. Every algebraic routine is a template over one of:
//   Rational - exact arbitrary precision fractions (GMP mpq_class)
//   double   - IEEE binary64, identity checks at absolute tolerance 1e-12

#include <gmpxx.h>

#include <charconv>
#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string>

namespace soft7 {

using Rational = mpq_class;

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* model = "exact";

  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
  static std::string to_string(const Rational& x) { return x.get_str(); }
  static Rational ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* model = "float";
  static constexpr double tolerance = 1e-12;

  static bool is_zero(double x) { return std::abs(x) <= tolerance; }
  static double magnitude(double x) { return std::abs(x); }
  // Locale independent, 17 significant digits.
  static std::string to_string(double x) {
    if (x == 0.0) return "0";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
  }
  static double ratio(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

template <typename T>
concept Scalar = requires(const T& x) {
  { ScalarTraits<T>::exact } -> std::convertible_to<bool>;
  { ScalarTraits<T>::is_zero(x) } -> std::convertible_to<bool>;
};

template <Scalar T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

template <Scalar T>
bool is_zero(const T& x) {
  return ScalarTraits<T>::is_zero(x);
}

template <Scalar T>
double magnitude(const T& x) {
  return ScalarTraits<T>::magnitude(x);
}

template <Scalar T>
std::string to_string(const T& x) {
  return ScalarTraits<T>::to_string(x);
}

template <Scalar T>
T ratio(long num, long den) {
  return ScalarTraits<T>::ratio(num, den);
}

// Raised when a structure function is requested at the origin, where r^2 = 0.
class ZeroPointError : public std::domain_error {
 public:
  ZeroPointError() : std::domain_error("zero point") {}
};

// Imaginary-unit indices run over 1..7; real direction is 0.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Minimal complex numbers over a Scalar model. std::complex is only
// specified for the built-in floating point types.
template <Scalar T>
struct Complex {
  T re{};
  T im{};

  Complex() = default;
  Complex(T r) : re(std::move(r)) {}  // NOLINT: implicit real embedding
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator-(const Complex& a) { return Complex(T(-a.re), T(-a.im)); }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(T(a.re * b.re - a.im * b.im), T(a.re * b.im + a.im * b.re));
  }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
  Complex conj() const { return Complex(re, T(-im)); }
};

template <Scalar T>
bool is_zero(const Complex<T>& z) {
  return is_zero(z.re) && is_zero(z.im);
}

template <Scalar T>
double magnitude(const Complex<T>& z) {
  return std::hypot(magnitude(z.re), magnitude(z.im));
}

}  // namespace soft7
