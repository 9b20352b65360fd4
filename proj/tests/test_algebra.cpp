#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracle.hpp"
#include "soft7/verify.hpp"

using namespace soft7;
using Q = Rational;

namespace {

Octonion<Q> e(int a) { return Octonion<Q>::basis(a); }

}  // namespace

TEST_CASE("basis products follow the cycle list") {
  CHECK(oct_mul(e(1), e(2)) == e(3));
  CHECK(oct_mul(e(2), e(1)) == -e(3));
  CHECK(oct_mul(e(5), e(5)) == -e(0));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto u = oracle::unit_table()[a][b];
      CHECK(oct_mul(e(a), e(b)) == Q(u.sign) * e(u.index));
    }
}

TEST_CASE("identity element") {
  for (std::uint64_t n = 0; n < 20; ++n) {
    const auto p = random_point<Q>(3, n);
    CHECK(oct_mul(e(0), p) == p);
    CHECK(oct_mul(p, e(0)) == p);
  }
}

TEST_CASE("multiplication agrees with the reference on random pairs") {
  for (std::uint64_t n = 0; n < 50; ++n) {
    const auto a = random_point<Q>(11, n), b = random_point<Q>(12, n);
    CHECK(oracle::coords(oct_mul(a, b)) == oracle::mul(oracle::coords(a), oracle::coords(b)));
  }
}

TEST_CASE("non-associativity on (e1, e5, e7)") {
  CHECK(oct_mul(oct_mul(e(1), e(5)), e(7)) == -e(3));
  CHECK(oct_mul(e(1), oct_mul(e(5), e(7))) == e(3));
  CHECK(associator(e(1), e(5), e(7)) == Q(-2) * e(3));
  CHECK(associator(e(1), e(2), e(3)).is_zero());
}

TEST_CASE("associator vanishes exactly on the seven cycles") {
  for (const auto& t : canonical_triples()) {
    const bool cycle = fconst(t.i, t.j, t.k) != 0;
    CHECK(associator(e(t.i), e(t.j), e(t.k)).is_zero() == cycle);
  }
}

TEST_CASE("associator is alternating on basis units") {
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) CHECK(associator(e(i), e(i), e(j)).is_zero());
  for (const auto& t : canonical_triples()) {
    const auto a = associator(e(t.i), e(t.j), e(t.k));
    CHECK(associator(e(t.j), e(t.i), e(t.k)) == -a);
    CHECK(associator(e(t.i), e(t.k), e(t.j)) == -a);
    CHECK(associator(e(t.k), e(t.j), e(t.i)) == -a);
    CHECK(associator(e(t.j), e(t.k), e(t.i)) == a);
    CHECK(associator(e(t.k), e(t.i), e(t.j)) == a);
  }
}

TEST_CASE("commutator, conjugate and norm") {
  CHECK(commutator(e(1), e(2)) == Q(2) * e(3));
  CHECK(conjugate(e(0)) == e(0));
  CHECK(conjugate(e(4)) == -e(4));
  CHECK(norm_sq(phi_w<Q>()) == 204);
}

TEST_CASE("norm composition and a times its conjugate") {
  for (std::uint64_t n = 0; n < 50; ++n) {
    const auto a = random_point<Q>(21, n), b = random_point<Q>(22, n);
    CHECK(norm_sq(oct_mul(a, b)) == norm_sq(a) * norm_sq(b));
    CHECK(oct_mul(a, conjugate(a)) == norm_sq(a) * e(0));
  }
}

TEST_CASE("structure constants") {
  const auto& f = structure_constants();
  CHECK(f(1, 2, 3) == 1);
  CHECK(f(2, 1, 3) == -1);
  CHECK(f(1, 7, 6) == 1);
  CHECK(f(1, 6, 7) == -1);
  CHECK(f(5, 6, 7) == 0);
  CHECK(f(0, 1, 2) == 0);
  CHECK(f(1, 1, 2) == 0);
  int nonzero = 0;
  for (int v : f.canonical()) nonzero += v != 0;
  CHECK(nonzero == 7);
  CHECK_THROWS_AS(f(8, 1, 2), IndexError);
}

TEST_CASE("commutator of units gives 2 f e_k") {
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      Octonion<Q> expect;
      for (int k = 1; k <= 7; ++k) expect += Q(2 * fconst(i, j, k)) * e(k);
      CHECK(commutator(e(i), e(j)) == expect);
    }
}

TEST_CASE("canonicalize") {
  const auto ct = canonicalize(3, 1, 2);
  REQUIRE(ct);
  CHECK(ct->index == 0);
  CHECK(ct->sign == 1);
  CHECK(canonicalize(2, 1, 3)->sign == -1);
  CHECK_FALSE(canonicalize(1, 1, 2));
  CHECK_FALSE(canonicalize(0, 1, 2));
  CHECK_THROWS_AS(canonicalize(1, 2, 9), IndexError);
  CHECK(canonical_triples().size() == 35);
}

TEST_CASE("float model matches the exact model") {
  for (std::uint64_t n = 0; n < 20; ++n) {
    const auto a = random_point<Q>(31, n), b = random_point<Q>(32, n);
    std::array<double, 8> ad{}, bd{};
    for (int m = 0; m < 8; ++m) {
      ad[m] = a[m].get_d();
      bd[m] = b[m].get_d();
    }
    const auto exact = oct_mul(a, b);
    const auto approx = oct_mul(Octonion<double>(ad), Octonion<double>(bd));
    for (int m = 0; m < 8; ++m) CHECK(approx[m] == doctest::Approx(exact[m].get_d()).epsilon(1e-12));
  }
}
