#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "soft7/lie.hpp"

using namespace soft7;
using Q = Rational;
using C = Complex<Q>;

namespace {

// sign from the cycle decomposition, (-1)^(n - cycles)
int parity_by_cycles(const std::array<int, 7>& p) {
  std::array<bool, 7> seen{};
  int cycles = 0;
  for (int s = 0; s < 7; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int x = s; !seen[x]; x = p[x] - 1) seen[x] = true;
  }
  return (7 - cycles) % 2 == 0 ? 1 : -1;
}

Mat8C<Q> identity_c() { return Mat8C<Q>::identity(); }

}  // namespace

TEST_CASE("gamma matrices") {
  for (Chirality c : {Chirality::Left, Chirality::Right})
    for (int i = 1; i <= 7; ++i) {
      const auto g = gamma<Q>(i, c);
      CHECK(mat_anticommutator(g, g) == C(Q(2)) * identity_c());
      for (int r = 0; r < 8; ++r)
        for (int q = 0; q < 8; ++q) {
          CHECK(g(r, q) == g(q, r).conj());
          CHECK(g(r, q).re == 0);
        }
      for (int j = i + 1; j <= 7; ++j) CHECK(mat_anticommutator(g, gamma<Q>(j, c)).is_zero());
    }
  CHECK_THROWS_AS(gamma<Q>(0, Chirality::Left), IndexError);
}

TEST_CASE("two index gammas") {
  std::vector<Mat8C<Q>> all;
  for (int i = 1; i <= 7; ++i) {
    CHECK(gamma2<Q>(i, i, Chirality::Left).is_zero());
    for (int j = 1; j <= 7; ++j) {
      CHECK(gamma2<Q>(i, j, Chirality::Left) == -gamma2<Q>(j, i, Chirality::Left));
      if (i < j) all.push_back(gamma2<Q>(i, j, Chirality::Left));
    }
  }
  CHECK(mat_rank(all) == 21);
}

TEST_CASE("Levi-Civita symbol") {
  std::array<int, 7> p;
  std::iota(p.begin(), p.end(), 1);
  CHECK(levi_civita7(p) == 1);
  int count = 0;
  do {
    CHECK(levi_civita7(p) == parity_by_cycles(p));
    ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(count == 5040);
  CHECK(levi_civita7({1, 1, 2, 3, 4, 5, 6}) == 0);
  CHECK(levi_civita7({2, 1, 3, 4, 5, 6, 7}) == -1);
}

TEST_CASE("three gamma products against the dual four products") {
  // gamma^i gamma^j gamma^k is imaginary while the four product is real, so
  // they only agree up to the phase +i (left) or -i (right)
  for (int c = 0; c < 2; ++c) {
    const Chirality ch = c == 0 ? Chirality::Left : Chirality::Right;
    const C phase(Q(0), Q(c == 0 ? 1 : -1));
    for (auto [i, j, k] : std::array<std::array<int, 3>, 4>{{{1, 2, 3}, {1, 2, 4}, {7, 3, 5}, {2, 6, 4}}}) {
      const auto lhs = gamma<Q>(i, ch) * gamma<Q>(j, ch) * gamma<Q>(k, ch);
      const auto dual = dual_four_product<Q>(i, j, k, ch);
      CHECK_FALSE(dual.is_zero());
      CHECK_FALSE(lhs == dual);
      CHECK(lhs == phase * dual);
    }
  }
  // repeated indices: epsilon vanishes but the product does not
  const auto g1 = gamma<Q>(1, Chirality::Left), g2 = gamma<Q>(2, Chirality::Left);
  CHECK(g1 * g1 * g2 == g2);
  CHECK(dual_four_product<Q>(1, 1, 2, Chirality::Left).is_zero());
}

TEST_CASE("so(8) generators") {
  for (Chirality c : {Chirality::Left, Chirality::Right}) {
    const auto set = so8_generators<Q>(c);
    CHECK(set.matrices.size() == 28);
    CHECK(mat_rank(set.matrices) == 28);
    CHECK(set.tags.at("J^i") == (c == Chirality::Left ? "+iE_i" : "+i1|E_i"));
    const auto& j1 = set.matrices[21];
    const auto& j2 = set.matrices[22];
    CHECK(mat_commutator(j1, j2) == C(Q(2)) * set.matrices[0]);
  }
  const auto minus = so8_generators<Q>(Chirality::Left, Sign::Minus);
  CHECK(minus.tags.at("J^i") == "-iE_i");
}

TEST_CASE("so(8) relation self check rejects real generators") {
  std::array<Mat8C<Q>, 7> jv;
  std::array<std::array<Mat8C<Q>, 7>, 7> jb;
  for (int i = 1; i <= 7; ++i) {
    jv[i - 1] = complexify(left_op<Q>(i));
    for (int j = 1; j <= 7; ++j) jb[i - 1][j - 1] = gamma2<Q>(i, j, Chirality::Left);
  }
  CHECK(so8_relation_defect(jv, jb).has_value());
  // opposite chirality vectors with left bivectors also fail
  for (int i = 1; i <= 7; ++i) jv[i - 1] = gamma<Q>(i, Chirality::Right);
  CHECK(so8_relation_defect(jv, jb).has_value());
  for (int i = 1; i <= 7; ++i) jv[i - 1] = gamma<Q>(i, Chirality::Left);
  double dev = -1;
  CHECK_FALSE(so8_relation_defect(jv, jb, &dev).has_value());
  CHECK(dev == 0);
}

TEST_CASE("G2 basis") {
  const auto g2 = g2_generators<Q>();
  CHECK(g2.matrices.size() == 21);
  CHECK(mat_rank(g2.matrices) == 14);
  for (int i = 1; i <= 7; ++i) {
    Mat8<Q> sum;
    for (int j = 1; j <= 7; ++j)
      for (int k = 1; k <= 7; ++k) sum += Q(fconst(i, j, k)) * g2_generator<Q>(j, k);
    CHECK(sum.is_zero());
  }
  for (const auto& h : g2.matrices) {
    CHECK(apply(h, north_pole<Q>()).is_zero());
    CHECK(h.transpose() == -h);
  }
  // G2 acts as derivations: H(xy) = (Hx)y + x(Hy) on basis units
  for (const auto& h : g2.matrices)
    for (int a = 1; a <= 7; ++a)
      for (int b = 1; b <= 7; ++b) {
        const auto ea = Octonion<Q>::basis(a), eb = Octonion<Q>::basis(b);
        CHECK(apply(h, oct_mul(ea, eb)) == oct_mul(apply(h, ea), eb) + oct_mul(ea, apply(h, eb)));
      }
  CHECK(mat_rank(g2_generators<double>().matrices) == 14);
}

TEST_CASE("coset generators") {
  const auto kv = coset_generators<Q>(CosetKind::Vector, Sign::Plus);
  const auto ks = coset_generators<Q>(CosetKind::Spinor, Sign::Plus);
  const auto kb = coset_generators<Q>(CosetKind::SpinorBar, Sign::Plus);
  const auto km = coset_generators<Q>(CosetKind::Vector, Sign::Minus);
  for (std::size_t n = 0; n < 7; ++n) {
    const int i = static_cast<int>(n) + 1;
    CHECK(kv.matrices[n] == Q(1, 2) * (left_op<Q>(i) - right_op<Q>(i)));
    CHECK(ks.matrices[n] == Q(1, 2) * left_op<Q>(i) + right_op<Q>(i));
    CHECK(kb.matrices[n] == -(left_op<Q>(i) + Q(1, 2) * right_op<Q>(i)));
    CHECK(km.matrices[n] == -kv.matrices[n]);
    CHECK(apply(kv.matrices[n], north_pole<Q>()).is_zero());
    CHECK_FALSE(apply(ks.matrices[n], north_pole<Q>()).is_zero());
    CHECK(kv.combos[n].conjugate() == kv.combos[n]);
    CHECK(ks.combos[n].conjugate() == kb.combos[n]);
  }
  auto with_h = g2_generators<Q>().matrices;
  with_h.insert(with_h.end(), ks.matrices.begin(), ks.matrices.end());
  CHECK(mat_rank(with_h) == 21);
}

TEST_CASE("commutator decompositions") {
  const auto h12 = g2_generator<Q>(1, 2);
  const auto c12 = mat_commutator(left_op<Q>(1), left_op<Q>(2));
  CHECK(c12 == Q(1, 3) * (Q(4) * h12 + Q(2) * left_op<Q>(3) + Q(4) * right_op<Q>(3)));
  CHECK(h12 == Q(1, 2) * (c12 + mat_commutator(right_op<Q>(1), right_op<Q>(2)) +
                          mat_commutator(left_op<Q>(1), right_op<Q>(2))));
  CHECK(g2_generator<Q>(3, 3).is_zero());
  for (const auto& r : {commutator_decompositions<Q>(), commutator_decompositions<double>()}) {
    CHECK(r.checks.size() == 4);
    CHECK(r.passed());
  }
}
