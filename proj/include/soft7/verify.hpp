#pragma once

// Named identity suite. Every check records how many cases it covered, the
// largest deviation seen and, when it fails, one concrete witness.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "soft7/octonion.hpp"
#include "soft7/report.hpp"
#include "soft7/torsion.hpp"

namespace soft7 {

/// Deterministic sample number `index` of the stream `seed`. Exact model:
/// integer coordinates in [-9, 9], never all zero. Float model: a unit vector.
template <Scalar T>
Octonion<T> random_point(std::uint64_t seed, std::uint64_t index);

/// The integer representative (1, 2, ..., 8) of the point (mu + 1) / sqrt(204).
template <Scalar T>
Octonion<T> phi_w() {
  return from_ints<T>({1, 2, 3, 4, 5, 6, 7, 8});
}

/// A reference value (i,j,k)^(+) at phi_w as num/den.
struct PrintedTorsion {
  int i, j, k;
  long num, den;
};

/// All 35 printed values at phi_w, in printed index order. Entry (2,7,3) is
/// a known misprint; see phi_w_erratum().
const std::array<PrintedTorsion, 35>& phi_w_printed_table();

/// The misprinted entry with its corrected value.
PrintedTorsion phi_w_erratum();

/// [E_1, E_2] applied to the integer phi_w, as printed: 102 * (-4, -3, 2, 1, 8, -7, 6, -5) / 51.
std::array<long, 8> phi_w_commutator_column();

/// Runs every check. Throws std::invalid_argument for points == 0 or an
/// unknown model.
Report run_suite(const SuiteConfig& config);

/// Names of all checks in report order.
const std::vector<std::string>& suite_check_names();

}  // namespace soft7
