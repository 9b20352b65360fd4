#pragma once

// Clifford gammas, so(8) and G2 generators and the coset families, all built
// from the constant left/right operators E_i and 1|E_i.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soft7/linalg.hpp"
#include "soft7/operators.hpp"
#include "soft7/report.hpp"
#include "soft7/torsion.hpp"

namespace soft7 {

enum class Chirality { Left, Right };

std::string to_string(Chirality c);

inline Side side_of(Chirality c) { return c == Chirality::Left ? Side::Left : Side::Right; }

/// gamma^i = i E_i (left) or i 1|E_i (right).
template <Scalar T>
Mat8C<T> gamma(int i, Chirality chirality);

/// gamma^{ij} = (gamma^i gamma^j - gamma^j gamma^i) / 2. The zero matrix for i == j.
template <Scalar T>
Mat8C<T> gamma2(int i, int j, Chirality chirality);

/// Sign of the permutation of 1..7 given by the indices; 0 when any repeats.
int levi_civita7(const std::array<int, 7>& idx);

/// (1/4!) eps^{ijklmnp} gamma^l gamma^m gamma^n gamma^p, summed over l,m,n,p.
template <Scalar T>
Mat8C<T> dual_four_product(int i, int j, int k, Chirality chirality);

template <Scalar T, typename E = T>
struct GeneratorSet {
  std::string label;  // so8 | g2 | coset_v | coset_s | coset_s_bar | gamma
  std::map<std::string, std::string> tags;
  std::vector<std::string> names;
  std::vector<Matrix8<E>> matrices;
  std::vector<LRCombo<T>> combos;  // coset families only
  std::size_t advertised_dimension = 0;
};

/// First violated relation of so(8), if any:
///   [J^i, J^j] = 2 J^{ij}
///   [J^i, J^{mn}] = 2 d^{im} J^n - 2 d^{in} J^m
///   [J^{ij}, J^{kl}] = 2 d^{jk} J^{il} + 2 d^{il} J^{jk} - 2 d^{ik} J^{jl} - 2 d^{jl} J^{ik}
/// j_vec holds J^1..J^7, j_bi(i, j) returns J^{ij} for all 1 <= i, j <= 7.
template <Scalar T>
std::optional<std::string> so8_relation_defect(const std::array<Mat8C<T>, 7>& j_vec,
                                               const std::array<std::array<Mat8C<T>, 7>, 7>& j_bi,
                                               double* max_deviation = nullptr);

/// 28 generators {J^{ij}}_{i<j} and {J^i}. J^{ij} = gamma^{ij} of the given
/// chirality; J^i is picked from +-gamma^i of either chirality, trying the
/// requested chirality and sign first. The pick is recorded in tags["J^i"].
/// Throws std::runtime_error when no choice satisfies the relations.
template <Scalar T>
GeneratorSet<T, Complex<T>> so8_generators(Chirality chirality, Sign sign_choice = Sign::Plus);

/// H_ij = f_ijk (E_k - 1|E_k) - (3/2) [E_i, 1|E_j], any i, j.
template <Scalar T>
Mat8<T> g2_generator(int i, int j);

/// The 21 H_ij with i < j; they span 14 dimensions.
template <Scalar T>
GeneratorSet<T> g2_generators();

enum class CosetKind { Vector, Spinor, SpinorBar };

std::string to_string(CosetKind k);

/// K_v^{+-i} = +-(E_i - 1|E_i)/2, K_s^{+-i} = +-(E_i/2 + 1|E_i),
/// Kbar_s^{+-i} = -+(E_i + 1|E_i/2).
template <Scalar T>
GeneratorSet<T> coset_generators(CosetKind kind, Sign sign);

/// The three commutator decompositions into H, E and 1|E, and the
/// recombination of H from commutators, each over all (i, j).
template <Scalar T>
Report commutator_decompositions();

}  // namespace soft7
