#pragma once

// Structure functions of the soft seven sphere.
//
// f(+)_{ijk}(phi) is defined by [E_i, E_j] phi = 2 f(+)_{ijk}(phi) E_k phi and
// f(-)_{ijk}(phi) by the same relation with right operators. Three
// independent evaluations are provided:
//
//   closed form  phi^t (-A_k A_i A_j) phi / r^2, A = E or 1|E
//   solve        least squares solution of the 8x7 linear system above
//   appendix     the hand transcribed quadratic polynomials
//
// Points need not be normalized; every value is homogeneous of degree 0.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "soft7/linalg.hpp"
#include "soft7/octonion.hpp"
#include "soft7/operators.hpp"

namespace soft7 {

enum class Sign { Plus, Minus };
enum class Route { ClosedForm, Solve, Appendix };
enum class SignPair { PlusPlus, MinusMinus };

inline Side side_of(Sign s) { return s == Sign::Plus ? Side::Left : Side::Right; }
inline Sign sign_of(SignPair p) { return p == SignPair::PlusPlus ? Sign::Plus : Sign::Minus; }

std::string to_string(Sign s);
std::string to_string(Route r);
std::string to_string(SignPair p);

/// The solve route found a residual; only an implementation fault can cause it.
class InconsistentSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The 35 values f(+/-)_{ijk}(phi), i < j < k, at one point.
template <Scalar T>
class TorsionTable {
 public:
  TorsionTable(Sign sign, Octonion<T> point, Route route, std::array<T, 35> values);

  Sign sign() const { return sign_; }
  Route route() const { return route_; }
  const Octonion<T>& point() const { return point_; }
  const T& r2() const { return r2_; }
  const std::array<T, 35>& values() const { return values_; }

  /// Any index order; zero for repeated or real indices.
  T operator()(int i, int j, int k) const;

  /// Same sign, point and values. The route tag is provenance only.
  bool same_values(const TorsionTable& o) const {
    return sign_ == o.sign_ && point_ == o.point_ && values_ == o.values_;
  }

 private:
  Sign sign_;
  Route route_;
  Octonion<T> point_;
  T r2_;
  std::array<T, 35> values_;
};

template <Scalar T>
T torsion_closed_form(Sign sign, int i, int j, int k, const Octonion<T>& phi);

/// f_{ij1} .. f_{ij7} from the linear system; all zero when i == j.
template <Scalar T>
std::array<T, 7> torsion_solve(Sign sign, int i, int j, const Octonion<T>& phi);

template <Scalar T>
T torsion_appendix(Sign sign, int i, int j, int k, const Octonion<T>& phi);

template <Scalar T>
TorsionTable<T> torsion_table(Sign sign, const Octonion<T>& phi, Route route);

/// f(++)(phi, lambda) or f(--)(phi, lambda): the structure functions of the
/// point dependent operators A_i(phi) acting on lambda, normalized by |lambda|^2.
template <Scalar T>
T generalized_torsion(SignPair pair, int i, int j, int k, const Octonion<T>& phi,
                      const Octonion<T>& lambda);

/// All 35 generalized values, sharing one set of operators.
template <Scalar T>
std::array<T, 35> generalized_table(SignPair pair, const Octonion<T>& phi, const Octonion<T>& lambda);

/// f_ijm f_mkt + f_jkm f_mit + f_kim f_mjt with every f taken from the table.
template <Scalar T>
T jacobi_residual(const TorsionTable<T>& table, int i, int j, int k, int t);

template <Scalar T>
T jacobi_residual(Sign sign, int i, int j, int k, int t, const Octonion<T>& phi);

/// sum_t jacobi_residual(i,j,k,t) A_t phi.
template <Scalar T>
Octonion<T> contracted_jacobi(Sign sign, int i, int j, int k, const Octonion<T>& phi);

// Transcribed polynomial table backing the appendix route.

struct AppendixTerm {
  int coefficient = 1;  // +1 or -1
  int a = 0;            // phi_a phi_b
  int b = 0;
};

struct AppendixEntry {
  Sign sign = Sign::Plus;
  Triple printed;  // index order as transcribed
  int factor = 1;  // overall integer factor
  std::vector<AppendixTerm> terms;
};

/// Parsed entries, 35 per sign.
const std::vector<AppendixEntry>& appendix_entries();

/// Parses the transcription format; throws std::invalid_argument on malformed input.
std::vector<AppendixEntry> parse_appendix(const std::string& text);

}  // namespace soft7
