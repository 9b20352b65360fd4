#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracle.hpp"
#include "soft7/verify.hpp"

using namespace soft7;
using Q = Rational;

namespace {

Mat8<Q> from_rows(const std::array<std::array<int, 8>, 8>& rows) {
  Mat8<Q> m;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) m(r, c) = rows[r][c];
  return m;
}

// [E_1, E_2] and 2 E_3 as displayed for the north pole example
const std::array<std::array<int, 8>, 8> kCommutator12 = {{{0, 0, 0, -2, 0, 0, 0, 0},
                                                          {0, 0, -2, 0, 0, 0, 0, 0},
                                                          {0, 2, 0, 0, 0, 0, 0, 0},
                                                          {2, 0, 0, 0, 0, 0, 0, 0},
                                                          {0, 0, 0, 0, 0, 0, 0, 2},
                                                          {0, 0, 0, 0, 0, 0, -2, 0},
                                                          {0, 0, 0, 0, 0, 2, 0, 0},
                                                          {0, 0, 0, 0, -2, 0, 0, 0}}};
const std::array<std::array<int, 8>, 8> kTwoE3 = {{{0, 0, 0, -2, 0, 0, 0, 0},
                                                   {0, 0, -2, 0, 0, 0, 0, 0},
                                                   {0, 2, 0, 0, 0, 0, 0, 0},
                                                   {2, 0, 0, 0, 0, 0, 0, 0},
                                                   {0, 0, 0, 0, 0, 0, 0, -2},
                                                   {0, 0, 0, 0, 0, 0, 2, 0},
                                                   {0, 0, 0, 0, 0, -2, 0, 0},
                                                   {0, 0, 0, 0, 2, 0, 0, 0}}};

}  // namespace

TEST_CASE("left and right operators multiply by units") {
  for (std::uint64_t n = 0; n < 30; ++n) {
    const auto p = random_point<Q>(41, n);
    const auto pv = oracle::coords(p);
    for (int i = 1; i <= 7; ++i) {
      CHECK(oracle::coords(apply(left_op<Q>(i), p)) == oracle::mul(oracle::unit(i), pv));
      CHECK(oracle::coords(apply(right_op<Q>(i), p)) == oracle::mul(pv, oracle::unit(i)));
      CHECK(apply(left_op<Q>(i), p) == oct_mul(Octonion<Q>::basis(i), p));
    }
  }
}

TEST_CASE("unit column and entry signs") {
  for (int i = 1; i <= 7; ++i) {
    CHECK(apply(left_op<Q>(i), north_pole<Q>()) == Octonion<Q>::basis(i));
    CHECK(apply(right_op<Q>(i), north_pole<Q>()) == Octonion<Q>::basis(i));
  }
  CHECK(left_op<Q>(3)(0, 3) == -1);
  CHECK(left_op<Q>(3)(3, 0) == 1);
  CHECK(left_op<Q>(3)(1, 2) == -1);
  CHECK(right_op<Q>(3)(1, 2) == 1);
}

TEST_CASE("displayed north pole matrices") {
  const Mat8<Q> c12 = mat_commutator(left_op<Q>(1), left_op<Q>(2));
  CHECK(c12 == from_rows(kCommutator12));
  CHECK(Q(2) * left_op<Q>(3) == from_rows(kTwoE3));
  CHECK(apply(c12, north_pole<Q>()) == Q(2) * Octonion<Q>::basis(3));
  CHECK(c12 == Q(2) * left_op<Q>(3) - Q(2) * mat_commutator(left_op<Q>(1), right_op<Q>(2)));
}

TEST_CASE("antisymmetric and square to minus one") {
  for (int i = 1; i <= 7; ++i)
    for (const auto* m : {&left_op<Q>(i), &right_op<Q>(i)}) {
      CHECK(m->transpose() == -*m);
      CHECK(*m * *m == -Mat8<Q>::identity());
    }
}

TEST_CASE("anticommutators") {
  CHECK(mat_anticommutator(left_op<Q>(1), left_op<Q>(2)).is_zero());
  CHECK(mat_anticommutator(left_op<Q>(1), left_op<Q>(1)) == Q(-2) * Mat8<Q>::identity());
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      const Mat8<Q> expect = i == j ? Q(-2) * Mat8<Q>::identity() : Mat8<Q>();
      CHECK(mat_anticommutator(left_op<Q>(i), left_op<Q>(j)) == expect);
      CHECK(mat_anticommutator(right_op<Q>(i), right_op<Q>(j)) == expect);
    }
}

TEST_CASE("mixed commutators vanish on the diagonal and at the north pole") {
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      const auto c = mat_commutator(left_op<Q>(i), right_op<Q>(j));
      CHECK(c.is_zero() == (i == j));
      CHECK(apply(c, north_pole<Q>()).is_zero());
    }
}

TEST_CASE("point dependent operators") {
  const auto np = north_pole<Q>();
  for (int i = 1; i <= 7; ++i) {
    CHECK(left_op_at(i, np) == left_op<Q>(i));
    CHECK(right_op_at(i, np) == right_op<Q>(i));
  }
  // entry (1,2) of E_3(phi) is -f(+)_312(phi)
  CHECK(left_op_at(3, phi_w<Q>())(1, 2) == Q(12, 17));
  for (std::uint64_t n = 0; n < 5; ++n) {
    const auto p = random_point<Q>(43, n);
    const auto ops = soft_ops(Side::Left, p);
    for (int i = 1; i <= 7; ++i) {
      CHECK(ops[i - 1] * ops[i - 1] == -Mat8<Q>::identity());
      CHECK(right_op_at(i, p) * right_op_at(i, p) == -Mat8<Q>::identity());
    }
  }
  CHECK_THROWS_AS(left_op_at(1, Octonion<Q>()), ZeroPointError);
  CHECK_THROWS_AS(left_op<Q>(0), IndexError);
  CHECK_THROWS_AS(right_op<Q>(8), IndexError);
}

TEST_CASE("float operators agree with exact ones") {
  for (int i = 1; i <= 7; ++i)
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) CHECK(left_op<double>(i)(r, c) == left_op<Q>(i)(r, c).get_d());
}

TEST_CASE("LRCombo") {
  auto c = LRCombo<Q>::single(2, Q(1, 2), Q(-3));
  CHECK(c.conjugate().conjugate() == c);
  CHECK(c.conjugate().left[1] == 3);
  CHECK(c.conjugate().right[1] == Q(-1, 2));
  CHECK(c.evaluate() == Q(1, 2) * left_op<Q>(2) - Q(3) * right_op<Q>(2));
  auto d = LRCombo<Q>::single(5, Q(2), Q(0));
  LRCombo<Q> sum;
  for (std::size_t n = 0; n < 7; ++n) {
    sum.left[n] = c.left[n] + d.left[n];
    sum.right[n] = c.right[n] + d.right[n];
  }
  CHECK(sum.evaluate() == c.evaluate() + d.evaluate());
}

TEST_CASE("rank and linear solve") {
  std::vector<Mat8<Q>> m = {left_op<Q>(1), left_op<Q>(2), left_op<Q>(1) + left_op<Q>(2)};
  CHECK(mat_rank(m) == 2);
  std::vector<Mat8<double>> md = {left_op<double>(1), left_op<double>(2), left_op<double>(1) + left_op<double>(2)};
  CHECK(mat_rank(md) == 2);
  std::vector<Mat8<Q>> all;
  for (int i = 1; i <= 7; ++i) {
    all.push_back(left_op<Q>(i));
    all.push_back(right_op<Q>(i));
  }
  CHECK(mat_rank(all) == 14);

  const auto x = solve_square<Q>({{2, 1}, {1, 3}}, {3, 5});
  REQUIRE(x);
  CHECK((*x)[0] == Q(4, 5));
  CHECK((*x)[1] == Q(7, 5));
  CHECK_FALSE(solve_square<Q>({{1, 2}, {2, 4}}, {1, 1}));
}
