#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "soft7/serialize.hpp"
#include "soft7/verify.hpp"

using namespace soft7;
using Q = Rational;

TEST_CASE("sample points are deterministic and never zero") {
  CHECK(random_point<Q>(7, 3) == random_point<Q>(7, 3));
  CHECK_FALSE(random_point<Q>(7, 3) == random_point<Q>(8, 3));
  CHECK(random_point<double>(7, 3) == random_point<double>(7, 3));
  int generic = 0;
  for (std::uint64_t n = 0; n < 1000; ++n) {
    const auto p = random_point<Q>(99, n);
    CHECK_FALSE(p.is_zero());
    bool all = true;
    for (int m = 0; m < 8; ++m) {
      CHECK(abs(p[m]) <= 9);
      all = all && sgn(p[m]) != 0;
    }
    generic += all;
  }
  CHECK(generic >= 400);
  for (std::uint64_t n = 0; n < 100; ++n)
    CHECK(norm_sq(random_point<double>(5, n)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("printed phi_w data") {
  CHECK(phi_w_printed_table().size() == 35);
  std::set<std::array<int, 3>> seen;
  for (const auto& e : phi_w_printed_table()) {
    CHECK(canonicalize(e.i, e.j, e.k).has_value());
    seen.insert({e.i, e.j, e.k});
  }
  CHECK(seen.size() == 35);
  const auto col = phi_w_commutator_column();
  const auto expect = mat_commutator(left_op<Q>(1), left_op<Q>(2));
  const auto v = apply(expect, phi_w<Q>());
  for (int m = 0; m < 8; ++m) CHECK(v[m] == col[m]);
}

TEST_CASE("invalid configurations") {
  CHECK_THROWS_AS(run_suite({1, "exact", 0}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite({1, "quad", 5}), std::invalid_argument);
}

TEST_CASE("exact suite") {
  const Report r = run_suite({1, "exact", 5});
  REQUIRE(r.checks.size() == suite_check_names().size());
  std::set<std::string> failed;
  for (std::size_t n = 0; n < r.checks.size(); ++n) {
    const auto& c = r.checks[n];
    CHECK(c.name == suite_check_names()[n]);
    CHECK(c.points_tested > 0);
    CHECK_FALSE(c.anchor.empty());
    if (!c.passed()) {
      CHECK(c.witness.has_value());
      if (!c.advisory) failed.insert(c.name);
    }
  }
  CHECK(failed == std::set<std::string>{"contracted-jacobi", "self-duality"});
  CHECK_FALSE(r.passed());
  CHECK(r.find("self-duality-phase")->passed());
  CHECK(r.find("soft-clifford")->passed());
  CHECK(r.find("raw-jacobi-witness")->passed());
  CHECK(r.find("raw-jacobi-witness")->witness.has_value());
  CHECK(r.find("left-right-asymmetry-witness")->passed());
  CHECK(r.find("nope") == nullptr);
}

TEST_CASE("float suite is reproducible") {
  const Report a = run_suite({17, "float", 4});
  const Report b = run_suite({17, "float", 4});
  CHECK(report_json(a) == report_json(b));
  for (const auto& c : a.checks) {
    if (c.name == "contracted-jacobi" || c.name == "self-duality" || c.advisory) continue;
    CHECK_MESSAGE(c.passed(), c.name);
    CHECK(c.max_deviation <= 1e-12);
  }
  CHECK_FALSE(report_json(run_suite({18, "float", 4})) == report_json(a));
}
