#pragma once

// Transcribed closed forms of f(+/-)_12k, k = 3..7, as quadratic forms over r^2.

#include <array>
#include <functional>

#include "soft7/octonion.hpp"

namespace printed {

using soft7::Octonion;
using Q = soft7::Rational;

using Formula = std::function<Q(const Octonion<Q>&)>;

inline std::array<Formula, 5> f12k_plus() {
  auto r2 = [](const Octonion<Q>& p) { return norm_sq(p); };
  return {
      [=](const Octonion<Q>& p) {
        return Q((p[0] * p[0] - p[6] * p[6] - p[5] * p[5] + p[2] * p[2] - p[4] * p[4] + p[1] * p[1] + p[3] * p[3] -
                  p[7] * p[7]) / r2(p));
      },
      [=](const Octonion<Q>& p) { return Q(2 * (p[0] * p[7] - p[5] * p[2] + p[6] * p[1] + p[3] * p[4]) / r2(p)); },
      [=](const Octonion<Q>& p) { return Q(-2 * (p[0] * p[6] - p[3] * p[5] - p[1] * p[7] - p[2] * p[4]) / r2(p)); },
      [=](const Octonion<Q>& p) { return Q(2 * (p[0] * p[5] - p[1] * p[4] + p[7] * p[2] + p[3] * p[6]) / r2(p)); },
      [=](const Octonion<Q>& p) { return Q(-2 * (p[0] * p[4] + p[6] * p[2] + p[1] * p[5] - p[3] * p[7]) / r2(p)); },
  };
}

inline std::array<Formula, 5> f12k_minus() {
  auto r2 = [](const Octonion<Q>& p) { return norm_sq(p); };
  return {
      [=](const Octonion<Q>& p) {
        return Q(-(p[0] * p[0] - p[6] * p[6] - p[4] * p[4] + p[2] * p[2] + p[1] * p[1] - p[7] * p[7] - p[5] * p[5] +
                   p[3] * p[3]) / r2(p));
      },
      [=](const Octonion<Q>& p) { return Q(2 * (p[0] * p[7] + p[5] * p[2] - p[6] * p[1] - p[3] * p[4]) / r2(p)); },
      [=](const Octonion<Q>& p) { return Q(-2 * (p[0] * p[6] + p[3] * p[5] + p[1] * p[7] + p[2] * p[4]) / r2(p)); },
      [=](const Octonion<Q>& p) { return Q(2 * (p[0] * p[5] + p[1] * p[4] - p[7] * p[2] - p[3] * p[6]) / r2(p)); },
      [=](const Octonion<Q>& p) { return Q(-2 * (p[0] * p[4] - p[6] * p[2] - p[1] * p[5] + p[3] * p[7]) / r2(p)); },
  };
}

}  // namespace printed
