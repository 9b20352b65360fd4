#include "soft7/operators.hpp"

#include <string>

#include "soft7/torsion.hpp"

namespace soft7 {

namespace {

void check_index(int i) {
  if (i < 1 || i > 7) throw IndexError("operator index " + std::to_string(i) + " out of range 1..7");
}

// -d_{0 mu} d_{i nu} + d_{0 nu} d_{i mu}: e_i e_0 = e_i and e_i e_i = -e_0
template <Scalar T>
Mat8<T> unit_part(int i) {
  Mat8<T> m;
  m(0, i) = T(-1);
  m(i, 0) = T(1);
  return m;
}

// unit_part(i) + s * g(i, mu, nu) on the imaginary block
template <Scalar T, typename G>
Mat8<T> assemble(int i, int s, G&& g) {
  Mat8<T> m = unit_part<T>(i);
  for (int mu = 1; mu < 8; ++mu)
    for (int nu = 1; nu < 8; ++nu) {
      T v = g(i, mu, nu);
      m(mu, nu) = s > 0 ? v : T(-v);
    }
  return m;
}

template <Scalar T>
std::array<Mat8<T>, 7> build_constant(Side side) {
  std::array<Mat8<T>, 7> ops;
  const int s = side == Side::Left ? -1 : 1;
  for (int i = 1; i <= 7; ++i)
    ops[static_cast<std::size_t>(i - 1)] =
        assemble<T>(i, s, [](int a, int b, int c) { return T(fconst(a, b, c)); });
  return ops;
}

}  // namespace

template <Scalar T>
const Mat8<T>& left_op(int i) {
  check_index(i);
  static const auto ops = build_constant<T>(Side::Left);
  return ops[static_cast<std::size_t>(i - 1)];
}

template <Scalar T>
const Mat8<T>& right_op(int i) {
  check_index(i);
  static const auto ops = build_constant<T>(Side::Right);
  return ops[static_cast<std::size_t>(i - 1)];
}

template <Scalar T>
std::array<Mat8<T>, 7> soft_ops(Side side, const Octonion<T>& phi) {
  const Sign sign = side == Side::Left ? Sign::Plus : Sign::Minus;
  const auto table = torsion_table(sign, phi, Route::ClosedForm);
  // left: -f(+)(phi); right: -f(-)(phi), which is +f at the north pole
  std::array<Mat8<T>, 7> ops;
  for (int i = 1; i <= 7; ++i)
    ops[static_cast<std::size_t>(i - 1)] =
        assemble<T>(i, -1, [&](int a, int b, int c) { return table(a, b, c); });
  return ops;
}

template <Scalar T>
Mat8<T> left_op_at(int i, const Octonion<T>& phi) {
  check_index(i);
  return soft_ops(Side::Left, phi)[static_cast<std::size_t>(i - 1)];
}

template <Scalar T>
Mat8<T> right_op_at(int i, const Octonion<T>& phi) {
  check_index(i);
  return soft_ops(Side::Right, phi)[static_cast<std::size_t>(i - 1)];
}

#define SOFT7_INSTANTIATE(T)                                              \
  template const Mat8<T>& left_op<T>(int);                                \
  template const Mat8<T>& right_op<T>(int);                               \
  template std::array<Mat8<T>, 7> soft_ops(Side, const Octonion<T>&);     \
  template Mat8<T> left_op_at(int, const Octonion<T>&);                   \
  template Mat8<T> right_op_at(int, const Octonion<T>&);

SOFT7_INSTANTIATE(Rational)
SOFT7_INSTANTIATE(double)

#undef SOFT7_INSTANTIATE

}  // namespace soft7
