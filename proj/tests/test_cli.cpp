#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "cli.hpp"
#include "doctest.h"
#include "soft7/serialize.hpp"
#include "soft7/verify.hpp"

using namespace soft7;
using cli::run;
using Q = Rational;

TEST_CASE("torsion json at phi_w") {
  const auto o = run({"torsion", "--point", "1,2,3,4,5,6,7,8"});
  CHECK(o.exit_code == 0);
  CHECK(o.out.find("\"-12/17\"") != std::string::npos);
  const auto t = parse_torsion_json<Q>(o.out);
  CHECK(t(1, 2, 3) == Q(-12, 17));
  CHECK(t.r2() == 204);
  CHECK(t.same_values(torsion_table(Sign::Plus, phi_w<Q>(), Route::ClosedForm)));
}

TEST_CASE("torsion routes and signs round trip") {
  for (const char* route : {"closed", "solve", "appendix"})
    for (const char* sign : {"+", "-"}) {
      const auto o = run({"torsion", "--point", "3,-1,0,2/3,5,1,-4,7", "--route", route, "--sign", sign});
      REQUIRE(o.exit_code == 0);
      const auto t = parse_torsion_json<Q>(o.out);
      const auto p = from_ints<Q>({3, -1, 0, 0, 5, 1, -4, 7}) + Q(2, 3) * Octonion<Q>::basis(3);
      CHECK(t.same_values(torsion_table(parse_sign(sign), p, Route::ClosedForm)));
    }
}

TEST_CASE("float torsion round trips bit for bit") {
  const auto o = run({"torsion", "--point", "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8"});
  REQUIRE(o.exit_code == 0);
  const auto t = parse_torsion_json<double>(o.out);
  const auto p = parse_point("0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8").to_octonion<double>();
  CHECK(t.values() == torsion_table(Sign::Plus, p, Route::ClosedForm).values());
  CHECK(std::abs(t(1, 2, 3) + 12.0 / 17.0) <= 1e-12);
}

TEST_CASE("point literals are decimal") {
  const auto p = parse_point("010,08,0.8,-07/09,1e1,0.5e-1,.25,3");
  CHECK(p.coords[0] == 10);
  CHECK(p.coords[1] == 8);
  CHECK(p.coords[2] == Q(4, 5));
  CHECK(p.coords[3] == Q(-7, 9));
  CHECK(p.coords[4] == 10);
  CHECK(p.coords[5] == Q(1, 20));
  CHECK(p.coords[6] == Q(1, 4));
  CHECK(p.inferred_model() == "float");
  CHECK(parse_point("1,2,3,4,5,6,7,8").inferred_model() == "exact");
  CHECK_THROWS_AS(parse_point("1,2,3,4,5,6,7,1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point("0,0,0,0,0,0,0,0"), ZeroPointError);
}

TEST_CASE("torsion csv") {
  const auto o = run({"torsion", "--point", "1,2,3,4,5,6,7,8", "--format", "csv"});
  CHECK(o.exit_code == 0);
  CHECK(o.out.rfind("i,j,k,value\n", 0) == 0);
  CHECK(o.out.find("1,2,3,-12/17\n") != std::string::npos);
  CHECK(std::count(o.out.begin(), o.out.end(), '\n') == 36);
}

TEST_CASE("soft structure functions") {
  const auto o = run({"soft", "--point", "1,0,0,0,0,0,0,0", "--lambda", "1,2,3,4,5,6,7,8", "--format", "csv"});
  REQUIRE(o.exit_code == 0);
  CHECK(o.out.find("1,2,3,-12/17") != std::string::npos);
  const auto table = soft_table(SignPair::PlusPlus, north_pole<Q>(), phi_w<Q>());
  const auto direct = torsion_table(Sign::Plus, phi_w<Q>(), Route::ClosedForm);
  CHECK(table.values == direct.values());
  CHECK(table.residual == 0);
  CHECK(run({"soft", "--point", "1,2,3,4,5,6,7,8", "--sign-pair=--"}).exit_code == 0);
}

TEST_CASE("generators") {
  const auto g2 = run({"generators", "--family", "g2"});
  CHECK(g2.exit_code == 0);
  CHECK(g2.out.find("\"rank\": 14") != std::string::npos);
  CHECK(g2.out.find("\"advertised_dimension\": 14") != std::string::npos);
  const auto so8 = run({"generators", "--family", "so8", "--model", "float", "--format", "csv"});
  CHECK(so8.exit_code == 0);
  for (const char* f : {"coset-v", "coset-s", "coset-s-bar", "gamma-left", "gamma-right"})
    CHECK(run({"generators", "--family", f}).exit_code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"torsion", "--point", "0,0,0,0,0,0,0,0"}).exit_code == 2);
  CHECK(run({"torsion", "--point", "1,2,3"}).exit_code == 2);
  CHECK(run({"torsion", "--point", "1,2,3,4,5,6,7,x"}).exit_code == 2);
  CHECK(run({"torsion", "--point", "1,2,3,4,5,6,7,8", "--route", "fast"}).exit_code == 2);
  CHECK(run({"torsion"}).exit_code == 2);
  CHECK(run({"verify", "--points", "0"}).exit_code == 2);
  CHECK(run({"verify", "--model", "quad"}).exit_code == 2);
  CHECK(run({"generators", "--family", "e8"}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("verify reports failing identities with exit code 1") {
  const auto o = run({"verify", "--points", "2", "--format", "csv"});
  CHECK(o.exit_code == 1);
  CHECK(o.out.find("contracted-jacobi") != std::string::npos);
}
