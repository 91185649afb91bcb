#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <variant>
#include <vector>

#include "discrim/lp.hpp"
#include "discrim/oracle.hpp"
#include "test_support.hpp"

using namespace discrim;
using namespace discrim::lp;
using testsupport::Q;
using testsupport::rvec;

namespace {

FeasibilitySystem sys(std::vector<std::vector<Rational>> matrix, std::vector<Rational> rhs) {
  return FeasibilitySystem{std::move(matrix), std::move(rhs)};
}

// Checks the Farkas inequalities from outside the library: y'M >= 0 and y'b < 0.
void check_certificate(const FeasibilitySystem& system, const std::vector<Rational>& y) {
  REQUIRE(y.size() == system.rows());
  for (std::size_t j = 0; j < system.cols(); ++j) {
    Rational column = 0;
    for (std::size_t i = 0; i < system.rows(); ++i) column += y[i] * system.matrix[i][j];
    CHECK(column >= 0);
  }
  Rational value = 0;
  for (std::size_t i = 0; i < system.rows(); ++i) value += y[i] * system.rhs[i];
  CHECK(value < 0);
}

}  // namespace

TEST_CASE("single equation with a forced solution") {
  auto result = solve_feasibility(sys({{Q("1")}}, {Q("1")}));
  REQUIRE(is_feasible(result));
  CHECK(std::get<FeasiblePoint>(result).values == rvec({"1"}));
}

TEST_CASE("negative right-hand side with non-negative variables is infeasible") {
  FeasibilitySystem s = sys({{Q("1")}}, {Q("-1")});
  auto result = solve_feasibility(s);
  REQUIRE_FALSE(is_feasible(result));
  const auto& cert = std::get<FarkasCertificate>(result);
  check_certificate(s, cert.multipliers());
  CHECK(cert.multipliers()[0] > 0);
}

TEST_CASE("underdetermined systems return some exact solution") {
  FeasibilitySystem s = sys({{Q("1"), Q("1")}}, {Q("1")});
  auto result = solve_feasibility(s);
  REQUIRE(is_feasible(result));
  CHECK(satisfies(s, std::get<FeasiblePoint>(result).values));
}

TEST_CASE("zero row with nonzero rhs yields a certificate") {
  FeasibilitySystem s = sys({{Q("0"), Q("0")}}, {Q("5")});
  auto result = solve_feasibility(s);
  REQUIRE_FALSE(is_feasible(result));
  check_certificate(s, std::get<FarkasCertificate>(result).multipliers());
}

TEST_CASE("conflicting equations yield a certificate") {
  // x1 + x2 = 1 and x1 + x2 = 2 cannot both hold.
  FeasibilitySystem s = sys({{Q("1"), Q("1")}, {Q("1"), Q("1")}}, {Q("1"), Q("2")});
  auto result = solve_feasibility(s);
  REQUIRE_FALSE(is_feasible(result));
  check_certificate(s, std::get<FarkasCertificate>(result).multipliers());
}

TEST_CASE("a small transport-like system is solved exactly") {
  // Two sources of mass 1/3 and 2/3, two sinks of 1/2 each, variables x[i][j]
  // laid out row-major: row sums and column sums as equalities.
  FeasibilitySystem s = sys(
      {
          {Q("1"), Q("1"), Q("0"), Q("0")},
          {Q("0"), Q("0"), Q("1"), Q("1")},
          {Q("1"), Q("0"), Q("1"), Q("0")},
          {Q("0"), Q("1"), Q("0"), Q("1")},
      },
      {Q("1/3"), Q("2/3"), Q("1/2"), Q("1/2")});
  auto result = solve_feasibility(s);
  REQUIRE(is_feasible(result));
  CHECK(satisfies(s, std::get<FeasiblePoint>(result).values));
}

TEST_CASE("satisfies is an exact membership check") {
  FeasibilitySystem s = sys({{Q("2"), Q("-1")}}, {Q("1")});
  CHECK(satisfies(s, rvec({"1", "1"})));
  CHECK(satisfies(s, rvec({"1/2", "0"})));
  CHECK_FALSE(satisfies(s, rvec({"1", "0"})));       // wrong value
  CHECK_FALSE(satisfies(s, rvec({"0", "-1"})));      // negative coordinate
  CHECK_FALSE(satisfies(s, rvec({"1"})));            // wrong arity
}

TEST_CASE("validate_system rejects ragged input") {
  CHECK_THROWS_AS(validate_system(sys({{Q("1")}, {Q("1"), Q("2")}}, {Q("0"), Q("0")})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_system(sys({{Q("1")}}, {Q("0"), Q("0")})), std::invalid_argument);
  CHECK_THROWS_AS(solve_feasibility(sys({{Q("1")}}, {})), std::invalid_argument);
}

TEST_CASE("FarkasCertificate construction re-checks both inequalities") {
  FeasibilitySystem feasible = sys({{Q("1")}}, {Q("1")});
  // y = (1): y'M = 1 >= 0 but y'b = 1 is not < 0.
  CHECK_THROWS_AS(FarkasCertificate(feasible, rvec({"1"})), std::invalid_argument);
  FeasibilitySystem infeasible = sys({{Q("1")}}, {Q("-1")});
  // y = (-1): y'b = 1 is not < 0 (and y'M = -1 < 0 fails too).
  CHECK_THROWS_AS(FarkasCertificate(infeasible, rvec({"-1"})), std::invalid_argument);
  CHECK_THROWS_AS(FarkasCertificate(infeasible, rvec({"1", "0"})), std::invalid_argument);
  CHECK_NOTHROW(FarkasCertificate(infeasible, rvec({"1"})));
}

TEST_CASE("random systems always produce a verifiable answer") {
  oracle::Rng rng(20240817);
  int feasible_seen = 0;
  int infeasible_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t rows = 1 + rng.bounded(4);
    std::size_t cols = 1 + rng.bounded(5);
    FeasibilitySystem s;
    s.rhs.resize(rows);
    s.matrix.assign(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        s.matrix[i][j] = Rational(rng.int_in(-3, 3));
      }
      s.rhs[i] = Rational(rng.int_in(-3, 3));
    }
    auto result = solve_feasibility(s);
    if (is_feasible(result)) {
      ++feasible_seen;
      CHECK(satisfies(s, std::get<FeasiblePoint>(result).values));
    } else {
      ++infeasible_seen;
      check_certificate(s, std::get<FarkasCertificate>(result).multipliers());
    }
  }
  // The trial mix must exercise both outcomes for this test to mean anything.
  CHECK(feasible_seen > 10);
  CHECK(infeasible_seen > 10);
}

TEST_CASE("pinning variables to a returned feasible point stays feasible") {
  FeasibilitySystem s = sys(
      {
          {Q("1"), Q("2"), Q("1")},
          {Q("0"), Q("1"), Q("3")},
      },
      {Q("2"), Q("1")});
  auto result = solve_feasibility(s);
  REQUIRE(is_feasible(result));
  const auto& point = std::get<FeasiblePoint>(result).values;
  FeasibilitySystem pinned = s;
  for (std::size_t j = 0; j < s.cols(); ++j) {
    std::vector<Rational> row(s.cols(), Q("0"));
    row[j] = Q("1");
    pinned.matrix.push_back(row);
    pinned.rhs.push_back(point[j]);
  }
  auto pinned_result = solve_feasibility(pinned);
  REQUIRE(is_feasible(pinned_result));
  CHECK(std::get<FeasiblePoint>(pinned_result).values == point);
}
