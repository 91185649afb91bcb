#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "discrim/exante.hpp"
#include "test_support.hpp"

using namespace discrim;
using namespace testsupport;

TEST_CASE("interview_value clamps losses atom by atom") {
  ExAnteFirm bet(firm({{"1", "-1"}}), Q("1"));
  // The vertex (0,1) would contribute -1; clamping drops it.
  CHECK(interview_value(bet, full_split()) == Q("1/2"));
  CHECK(interview_value(bet, uniform_delta()) == Q("0"));
  ExAnteFirm half_share(firm({{"1", "-1"}}), Q("1/2"));
  CHECK(interview_value(half_share, full_split()) == Q("1/4"));
  // With several tasks the max is taken before the clamp.
  ExAnteFirm pair(firm({{"2", "-2"}, {"-1", "1"}}), Q("1"));
  CHECK(interview_value(pair, uniform_delta()) == Q("0"));
  CHECK(interview_value(pair, full_split()) == Q("3/2"));
}

TEST_CASE("excludes is a weak comparison against cost, so ties exclude") {
  ExAnteFirm match(firm({{"1", "0"}, {"0", "1"}}), Q("1"));
  CHECK_FALSE(excludes(match, Q("1/4"), uniform_delta()));  // 1/2 > 1/4: interviews
  CHECK(excludes(match, Q("1/2"), uniform_delta()));        // exact tie: excluded
  CHECK(excludes(match, Q("2"), full_split()));             // 1 <= 2
  CHECK_FALSE(excludes(match, Q("1/4"), full_split()));
  CHECK_THROWS_AS(excludes(match, Q("-1"), full_split()), std::invalid_argument);
}

TEST_CASE("normalize_firm folds alpha into the payoffs") {
  CHECK(normalize_firm(ExAnteFirm(firm({{"1", "-1"}}), Q("1/2"))) ==
        ExAnteFirm(firm({{"1/2", "-1/2"}}), Q("1")));
  CHECK(normalize_firm(ExAnteFirm(firm({{"4", "-2"}, {"0", "2"}}), Q("1/4"))) ==
        ExAnteFirm(firm({{"1", "-1/2"}, {"0", "1/2"}}), Q("1")));
  ExAnteFirm already(firm({{"1", "0"}}), Q("1"));
  CHECK(normalize_firm(already) == already);
}

TEST_CASE("normalization preserves every exclusion decision exactly") {
  ExAnteFirm original(firm({{"5/3", "-2"}, {"-1/3", "7/5"}}), Q("3/7"));
  ExAnteFirm normalized = normalize_firm(original);
  for (const Population& p : {uniform_delta(), full_split(), wide_trio(), narrow_pair()}) {
    CHECK(interview_value(original, p) == interview_value(normalized, p));
    for (const char* c : {"0", "1/8", "1/2", "1", "2"}) {
      CHECK(excludes(original, Q(c), p) == excludes(normalized, Q(c), p));
    }
  }
}

TEST_CASE("construct_excluding_firm: no shift needed when payoffs stay non-negative") {
  // Matching firm on (full split, point mass): surpluses 1 vs 1/2, so the
  // shift is zero and gamma = 2*(1/4) / (1 + 1/2) = 1/3.
  Firm base = firm({{"1", "0"}, {"0", "1"}});
  ExAnteFirm built = construct_excluding_firm(base, full_split(), uniform_delta(), Q("1/4"));
  CHECK(built == ExAnteFirm(firm({{"1/3", "0"}, {"0", "1/3"}}), Q("1")));
  CHECK(interview_value(built, uniform_delta()) == Q("1/6"));
  CHECK(interview_value(built, full_split()) == Q("1/3"));
  CHECK(excludes(built, Q("1/4"), uniform_delta()));
  CHECK_FALSE(excludes(built, Q("1/4"), full_split()));
}

TEST_CASE("construct_excluding_firm: negative payoffs are shifted away first") {
  // Task payoffs reach -2 at the vertices, so the shift is 2; the shifted
  // firm {(3,0),(0,3)} has surpluses 3 and 3/2, giving gamma = 2*1/(9/2).
  Firm base = firm({{"1", "-2"}, {"-2", "1"}});
  ExAnteFirm built = construct_excluding_firm(base, full_split(), uniform_delta(), Q("1"));
  CHECK(built == ExAnteFirm(firm({{"4/3", "0"}, {"0", "4/3"}}), Q("1")));
  CHECK(interview_value(built, uniform_delta()) == Q("2/3"));
  CHECK(interview_value(built, full_split()) == Q("4/3"));
}

TEST_CASE("construct_excluding_firm scales with the cost") {
  Firm base = firm({{"1", "0"}, {"0", "1"}});
  for (const char* c : {"1/100", "1", "10"}) {
    ExAnteFirm built = construct_excluding_firm(base, full_split(), uniform_delta(), Q(c));
    CHECK(excludes(built, Q(c), uniform_delta()));
    CHECK_FALSE(excludes(built, Q(c), full_split()));
    CHECK(built.alpha() == 1);
  }
}

TEST_CASE("construct_excluding_firm rejects bad inputs") {
  Firm base = firm({{"1", "0"}, {"0", "1"}});
  // No strict gap: a single linear task ties on equal means.
  CHECK_THROWS_AS(construct_excluding_firm(firm({{"1", "-1"}}), full_split(), uniform_delta(),
                                           Q("1")),
                  std::invalid_argument);
  // Gap in the wrong direction.
  CHECK_THROWS_AS(construct_excluding_firm(base, uniform_delta(), full_split(), Q("1")),
                  std::invalid_argument);
  CHECK_THROWS_AS(construct_excluding_firm(base, full_split(), uniform_delta(), Q("0")),
                  ZeroCostError);
  CHECK_THROWS_AS(construct_excluding_firm(base, full_split(), uniform_delta(), Q("-1")),
                  std::invalid_argument);
  CHECK_THROWS_AS(construct_excluding_firm(base, full_split(), point_mass(bel({"1", "0"})),
                                           Q("1")),
                  UnequalMeansError);
}

TEST_CASE("a surplus witness converts into an excluding firm end to end") {
  Classification c = classify(narrow_pair(), wide_trio());
  REQUIRE(c.verdict == Verdict::Unsystematic);
  ExAnteFirm against_first =
      construct_excluding_firm(*c.witness_against_first, wide_trio(), narrow_pair(), Q("1"));
  CHECK(excludes(against_first, Q("1"), narrow_pair()));
  CHECK_FALSE(excludes(against_first, Q("1"), wide_trio()));
}

TEST_CASE("ExAnteScenario validates cost and means") {
  CHECK_NOTHROW(ExAnteScenario(uniform_delta(), full_split(), Q("0")));
  CHECK_THROWS_AS(ExAnteScenario(uniform_delta(), full_split(), Q("-1/2")),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExAnteScenario(uniform_delta(), point_mass(bel({"1", "0"})), Q("1")),
                  UnequalMeansError);
}

TEST_CASE("classify_ex_ante mirrors the surplus verdict and attaches excluding firms") {
  for (const char* c : {"1/4", "7"}) {
    ExAnteClassification r = classify_ex_ante(ExAnteScenario(uniform_delta(), full_split(), Q(c)));
    CHECK(r.verdict == Verdict::SystematicAgainstFirst);
    REQUIRE(r.witness_against_first.has_value());
    CHECK_FALSE(r.witness_against_second.has_value());
    CHECK(excludes(*r.witness_against_first, Q(c), uniform_delta()));
    CHECK_FALSE(excludes(*r.witness_against_first, Q(c), full_split()));
  }
}

TEST_CASE("classify_ex_ante on an incomparable pair carries two excluding firms") {
  ExAnteClassification r = classify_ex_ante(ExAnteScenario(narrow_pair(), wide_trio(), Q("1")));
  CHECK(r.verdict == Verdict::Unsystematic);
  REQUIRE(r.witness_against_first.has_value());
  REQUIRE(r.witness_against_second.has_value());
  CHECK(excludes(*r.witness_against_first, Q("1"), narrow_pair()));
  CHECK_FALSE(excludes(*r.witness_against_first, Q("1"), wide_trio()));
  CHECK(excludes(*r.witness_against_second, Q("1"), wide_trio()));
  CHECK_FALSE(excludes(*r.witness_against_second, Q("1"), narrow_pair()));
}

TEST_CASE("classify_ex_ante on equal populations finds nothing to exclude") {
  ExAnteClassification r = classify_ex_ante(ExAnteScenario(full_split(), full_split(), Q("1")));
  CHECK(r.verdict == Verdict::NoDiscrimination);
  CHECK_FALSE(r.witness_against_first.has_value());
  CHECK_FALSE(r.witness_against_second.has_value());
}

TEST_CASE("classify_ex_ante refuses cost zero") {
  CHECK_THROWS_AS(classify_ex_ante(ExAnteScenario(uniform_delta(), full_split(), Q("0"))),
                  ZeroCostError);
}

TEST_CASE("exclusion is monotone in cost") {
  ExAnteFirm match(firm({{"1", "0"}, {"0", "1"}}), Q("1"));
  // interview_value(match, uniform_delta) = 1/2.
  CHECK_FALSE(excludes(match, Q("1/4"), uniform_delta()));
  CHECK(excludes(match, Q("1/2"), uniform_delta()));
  CHECK(excludes(match, Q("3"), uniform_delta()));
}

TEST_CASE("hull_membership returns exact coefficients inside the hull") {
  auto inside = hull_membership(bel({"1/2", "1/2"}), {bel({"1", "0"}), bel({"0", "1"})});
  REQUIRE(std::holds_alternative<HullCoefficients>(inside));
  CHECK(std::get<HullCoefficients>(inside).coefficients == rvec({"1/2", "1/2"}));

  // A redundant hull point still yields verifiable coefficients.
  auto redundant = hull_membership(
      bel({"1/4", "3/4"}), {bel({"1", "0"}), bel({"1/2", "1/2"}), bel({"0", "1"})});
  REQUIRE(std::holds_alternative<HullCoefficients>(redundant));
  const auto& mu = std::get<HullCoefficients>(redundant).coefficients;
  Rational sum = 0, first_coord = 0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    CHECK(mu[k] >= 0);
    sum += mu[k];
  }
  first_coord = mu[0] * Q("1") + mu[1] * Q("1/2") + mu[2] * Q("0");
  CHECK(sum == 1);
  CHECK(first_coord == Q("1/4"));
}

TEST_CASE("hull_membership returns a separating task outside the hull") {
  auto outside = hull_membership(bel({"1", "0"}), {bel({"1/2", "1/2"}), bel({"0", "1"})});
  REQUIRE(std::holds_alternative<SeparatingTask>(outside));
  const auto& t = std::get<SeparatingTask>(outside).task;
  REQUIRE(t.size() == 2);
  CHECK(t[0] * Q("1/2") + t[1] * Q("1/2") <= 0);
  CHECK(t[1] <= 0);      // at (0, 1)
  CHECK(t[0] > 0);       // at the query point (1, 0)
}

TEST_CASE("n_dominates is support-hull containment") {
  CHECK(n_dominates(full_split(), uniform_delta()));
  CHECK_FALSE(n_dominates(uniform_delta(), full_split()));
  CHECK(n_dominates(full_split(), wide_trio()));
  CHECK(n_dominates(wide_trio(), full_split()));  // equal hulls, distinct populations
  CHECK(n_dominates(wide_trio(), narrow_pair()));
  CHECK_FALSE(n_dominates(narrow_pair(), wide_trio()));
  CHECK_THROWS_AS(n_dominates(uniform_delta(), point_mass(bel({"1", "0"}))), UnequalMeansError);
}

TEST_CASE("n_dominates is reflexive and transitive") {
  for (const Population& p : {uniform_delta(), full_split(), wide_trio()}) {
    CHECK(n_dominates(p, p));
  }
  CHECK(n_dominates(full_split(), narrow_pair()));  // via wide_trio
}

TEST_CASE("spread dominance implies zero-cost dominance") {
  CHECK(dominates(mps_dominates(mild_split(), milder_split())));
  CHECK(n_dominates(mild_split(), milder_split()));
  CHECK(dominates(mps_dominates(full_split(), wide_trio())));
  CHECK(n_dominates(full_split(), wide_trio()));
}

TEST_CASE("n_violation_firm separates exactly when dominance fails") {
  CHECK_FALSE(n_violation_firm(full_split(), uniform_delta()).has_value());
  auto violation = n_violation_firm(uniform_delta(), full_split());
  REQUIRE(violation.has_value());
  // Single-task separator: zero interview value on the dominated-claim side,
  // positive on the other.
  CHECK(violation->tasks().size() == 1);
  ExAnteFirm as_firm(*violation, Q("1"));
  CHECK(interview_value(as_firm, uniform_delta()) == 0);
  CHECK(interview_value(as_firm, full_split()) > 0);
}

TEST_CASE("zero-cost classifier: hull containment decides the verdict") {
  ExAnteClassification r = classify_ex_ante_zero_cost(uniform_delta(), full_split());
  CHECK(r.verdict == Verdict::SystematicAgainstFirst);
  REQUIRE(r.witness_against_first.has_value());
  CHECK(interview_value(*r.witness_against_first, uniform_delta()) == 0);
  CHECK(interview_value(*r.witness_against_first, full_split()) > 0);
  CHECK(excludes(*r.witness_against_first, Q("0"), uniform_delta()));
  CHECK_FALSE(excludes(*r.witness_against_first, Q("0"), full_split()));

  ExAnteClassification swapped = classify_ex_ante_zero_cost(full_split(), uniform_delta());
  CHECK(swapped.verdict == Verdict::SystematicAgainstSecond);
  REQUIRE(swapped.witness_against_second.has_value());
}

TEST_CASE("zero-cost classifier: equal hulls mean no discrimination") {
  // Distinct populations, same support hull: at zero cost any firm that
  // interviews one interviews the other, even though the surplus order still
  // separates them at positive cost.
  ExAnteClassification zero = classify_ex_ante_zero_cost(full_split(), wide_trio());
  CHECK(zero.verdict == Verdict::NoDiscrimination);
  CHECK_FALSE(zero.witness_against_first.has_value());
  CHECK_FALSE(zero.witness_against_second.has_value());

  ExAnteClassification costly = classify_ex_ante(ExAnteScenario(full_split(), wide_trio(), Q("1")));
  CHECK(costly.verdict == Verdict::SystematicAgainstSecond);
}

TEST_CASE("zero-cost classifier: incomparable hulls give an unsystematic verdict") {
  // Both means are (2/3, 1/3); the support hulls are [1/3, 1] and
  // [1/4, 11/12] in first-coordinate terms, and neither contains the other.
  Population left = pop({atom({"1", "0"}, "1/2"), atom({"1/3", "2/3"}, "1/2")});
  Population right = pop({atom({"1/4", "3/4"}, "3/8"), atom({"11/12", "1/12"}, "5/8")});
  REQUIRE(same_skill_distribution(left, right));
  ExAnteClassification r = classify_ex_ante_zero_cost(left, right);
  CHECK(r.verdict == Verdict::Unsystematic);
  REQUIRE(r.witness_against_first.has_value());
  REQUIRE(r.witness_against_second.has_value());
  CHECK(excludes(*r.witness_against_first, Q("0"), left));
  CHECK_FALSE(excludes(*r.witness_against_first, Q("0"), right));
  CHECK(excludes(*r.witness_against_second, Q("0"), right));
  CHECK_FALSE(excludes(*r.witness_against_second, Q("0"), left));
}
