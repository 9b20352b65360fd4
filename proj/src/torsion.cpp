#include "soft7/torsion.hpp"

#include <string>

namespace soft7 {

std::string to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

std::string to_string(Route r) {
  switch (r) {
    case Route::ClosedForm:
      return "closed";
    case Route::Solve:
      return "solve";
    case Route::Appendix:
      return "appendix";
  }
  return "?";
}

std::string to_string(SignPair p) { return p == SignPair::PlusPlus ? "++" : "--"; }

namespace {

void check_index(int i) {
  if (i < 1 || i > 7) throw IndexError("imaginary index " + std::to_string(i) + " out of range 1..7");
}

template <Scalar T>
T checked_r2(const Octonion<T>& phi) {
  T r2 = norm_sq(phi);
  // exact zero only; tiny float points are still points
  if (r2 == T(0)) throw ZeroPointError();
  return r2;
}

// -x^t A_k A_i A_j x / |x|^2
template <Scalar T>
T triple_form(const Mat8<T>& ak, const Mat8<T>& ai, const Mat8<T>& aj, const Octonion<T>& x,
              const T& r2) {
  Octonion<T> v = apply(aj, x);
  v = apply(ai, v);
  v = apply(ak, v);
  return T(-dot(x, v) / r2);
}

}  // namespace

template <Scalar T>
TorsionTable<T>::TorsionTable(Sign sign, Octonion<T> point, Route route, std::array<T, 35> values)
    : sign_(sign),
      route_(route),
      point_(std::move(point)),
      r2_(norm_sq(point_)),
      values_(std::move(values)) {}

template <Scalar T>
T TorsionTable<T>::operator()(int i, int j, int k) const {
  auto ct = canonicalize(i, j, k);
  if (!ct) return T(0);
  const T& v = values_[static_cast<std::size_t>(ct->index)];
  return ct->sign > 0 ? v : T(-v);
}

template <Scalar T>
T torsion_closed_form(Sign sign, int i, int j, int k, const Octonion<T>& phi) {
  check_index(i);
  check_index(j);
  check_index(k);
  const T r2 = checked_r2(phi);
  const Side side = side_of(sign);
  return triple_form(side_op<T>(side, k), side_op<T>(side, i), side_op<T>(side, j), phi, r2);
}

template <Scalar T>
std::array<T, 7> torsion_solve(Sign sign, int i, int j, const Octonion<T>& phi) {
  check_index(i);
  check_index(j);
  const T r2 = checked_r2(phi);
  std::array<T, 7> out{};
  if (i == j) return out;

  const Side side = side_of(sign);
  // Columns A_k phi, right hand side 1/2 [A_i, A_j] phi.
  std::array<Octonion<T>, 7> cols;
  for (int k = 1; k <= 7; ++k) cols[static_cast<std::size_t>(k - 1)] = apply(side_op<T>(side, k), phi);
  const Octonion<T> rhs =
      T(ratio<T>(1, 2)) *
      (apply(side_op<T>(side, i), apply(side_op<T>(side, j), phi)) -
       apply(side_op<T>(side, j), apply(side_op<T>(side, i), phi)));

  // Normal equations (C^t C) x = C^t rhs.
  std::vector<std::vector<T>> normal(7, std::vector<T>(7));
  std::vector<T> b(7);
  for (std::size_t r = 0; r < 7; ++r) {
    for (std::size_t c = 0; c < 7; ++c) normal[r][c] = dot(cols[r], cols[c]);
    b[r] = dot(cols[r], rhs);
  }
  auto x = solve_square(std::move(normal), std::move(b));
  if (!x) throw InconsistentSystemError("singular normal equations");

  Octonion<T> residual = rhs;
  for (std::size_t k = 0; k < 7; ++k) residual -= (*x)[k] * cols[k];
  for (int m = 0; m < 8; ++m) {
    if constexpr (is_exact_v<T>) {
      if (!is_zero(residual[m])) throw InconsistentSystemError("non-zero residual");
    } else {
      if (magnitude(residual[m]) > 1e-10 * std::max(1.0, magnitude(r2)))
        throw InconsistentSystemError("residual above 1e-10");
    }
  }
  for (std::size_t k = 0; k < 7; ++k) out[k] = (*x)[k];
  return out;
}

template <Scalar T>
T torsion_appendix(Sign sign, int i, int j, int k, const Octonion<T>& phi) {
  check_index(i);
  check_index(j);
  check_index(k);
  const T r2 = checked_r2(phi);
  auto query = canonicalize(i, j, k);
  if (!query) return T(0);

  for (const auto& e : appendix_entries()) {
    if (e.sign != sign) continue;
    auto printed = canonicalize(e.printed.i, e.printed.j, e.printed.k);
    if (printed->index != query->index) continue;
    T poly(0);
    for (const auto& t : e.terms) {
      if (t.coefficient > 0)
        poly += phi[t.a] * phi[t.b];
      else
        poly -= phi[t.a] * phi[t.b];
    }
    T value = T(e.factor) * poly / r2;
    // the printed order relates to the query through the sorted triple
    if (printed->sign * query->sign < 0) value = -value;
    return value;
  }
  throw std::logic_error("appendix table has no entry for the requested triple");
}

template <Scalar T>
TorsionTable<T> torsion_table(Sign sign, const Octonion<T>& phi, Route route) {
  checked_r2(phi);
  std::array<T, 35> values{};
  const auto& triples = canonical_triples();
  switch (route) {
    case Route::ClosedForm:
      for (std::size_t n = 0; n < 35; ++n)
        values[n] = torsion_closed_form(sign, triples[n].i, triples[n].j, triples[n].k, phi);
      break;
    case Route::Appendix:
      for (std::size_t n = 0; n < 35; ++n)
        values[n] = torsion_appendix(sign, triples[n].i, triples[n].j, triples[n].k, phi);
      break;
    case Route::Solve:
      for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) {
          const auto row = torsion_solve(sign, i, j, phi);
          for (int k = j + 1; k <= 7; ++k)
            values[static_cast<std::size_t>(canonicalize(i, j, k)->index)] =
                row[static_cast<std::size_t>(k - 1)];
        }
      break;
  }
  return TorsionTable<T>(sign, phi, route, std::move(values));
}

template <Scalar T>
T generalized_torsion(SignPair pair, int i, int j, int k, const Octonion<T>& phi,
                      const Octonion<T>& lambda) {
  check_index(i);
  check_index(j);
  check_index(k);
  const T l2 = checked_r2(lambda);
  const auto ops = soft_ops(side_of(sign_of(pair)), phi);
  auto at = [&](int n) -> const Mat8<T>& { return ops[static_cast<std::size_t>(n - 1)]; };
  return triple_form(at(k), at(i), at(j), lambda, l2);
}

template <Scalar T>
std::array<T, 35> generalized_table(SignPair pair, const Octonion<T>& phi, const Octonion<T>& lambda) {
  const T l2 = checked_r2(lambda);
  const auto ops = soft_ops(side_of(sign_of(pair)), phi);
  auto at = [&](int n) -> const Mat8<T>& { return ops[static_cast<std::size_t>(n - 1)]; };
  std::array<T, 35> out{};
  const auto& triples = canonical_triples();
  for (std::size_t n = 0; n < 35; ++n)
    out[n] = triple_form(at(triples[n].k), at(triples[n].i), at(triples[n].j), lambda, l2);
  return out;
}

template <Scalar T>
T jacobi_residual(const TorsionTable<T>& f, int i, int j, int k, int t) {
  T s(0);
  for (int m = 1; m <= 7; ++m) {
    s += f(i, j, m) * f(m, k, t);
    s += f(j, k, m) * f(m, i, t);
    s += f(k, i, m) * f(m, j, t);
  }
  return s;
}

template <Scalar T>
T jacobi_residual(Sign sign, int i, int j, int k, int t, const Octonion<T>& phi) {
  for (int x : {i, j, k, t}) check_index(x);
  return jacobi_residual(torsion_table(sign, phi, Route::ClosedForm), i, j, k, t);
}

template <Scalar T>
Octonion<T> contracted_jacobi(Sign sign, int i, int j, int k, const Octonion<T>& phi) {
  for (int x : {i, j, k}) check_index(x);
  const auto table = torsion_table(sign, phi, Route::ClosedForm);
  Octonion<T> out;
  for (int t = 1; t <= 7; ++t) {
    const T r = jacobi_residual(table, i, j, k, t);
    if (is_zero(r)) continue;
    out += r * apply(side_op<T>(side_of(sign), t), phi);
  }
  return out;
}

#define SOFT7_INSTANTIATE(T)                                                                      \
  template class TorsionTable<T>;                                                                 \
  template T torsion_closed_form(Sign, int, int, int, const Octonion<T>&);                        \
  template std::array<T, 7> torsion_solve(Sign, int, int, const Octonion<T>&);                    \
  template T torsion_appendix(Sign, int, int, int, const Octonion<T>&);                           \
  template TorsionTable<T> torsion_table(Sign, const Octonion<T>&, Route);                        \
  template T generalized_torsion(SignPair, int, int, int, const Octonion<T>&, const Octonion<T>&); \
  template std::array<T, 35> generalized_table(SignPair, const Octonion<T>&, const Octonion<T>&); \
  template T jacobi_residual(const TorsionTable<T>&, int, int, int, int);                         \
  template T jacobi_residual(Sign, int, int, int, int, const Octonion<T>&);                       \
  template Octonion<T> contracted_jacobi(Sign, int, int, int, const Octonion<T>&);

SOFT7_INSTANTIATE(Rational)
SOFT7_INSTANTIATE(double)

#undef SOFT7_INSTANTIATE

}  // namespace soft7
