#pragma once
// The costly-interview model. A firm (A, alpha) interviews a worker
// population pi exactly when alpha * integral of max(v_A, 0) over pi exceeds
// the interview cost c, and excludes it otherwise (ties are excluded). For
// c > 0 the three-way classification coincides tag-for-tag with the
// surplus-based one; witnesses become excluding firms that interview one
// population but not the other. At c = 0 the relevant order coarsens to
// support-hull containment and gets its own classifier.

#include <optional>
#include <variant>
#include <vector>

#include "discrim/blackwell.hpp"
#include "discrim/core.hpp"

namespace discrim {

/// alpha * sum over atoms of weight * max(firm_value, 0): the firm's expected
/// surplus from interviewing a worker drawn from the population.
Rational interview_value(const ExAnteFirm& firm, const Population& population);

/// True iff interview_value(firm, population) <= cost. The interview
/// condition is strict, so an exact tie means the population is excluded.
/// Rejects negative costs.
bool excludes(const ExAnteFirm& firm, const Rational& cost, const Population& population);

/// Folds the retention share into the payoffs: (A, alpha) -> ({alpha*a}, 1).
/// Interview values, and hence exclusion decisions, are unchanged for every
/// population and cost.
ExAnteFirm normalize_firm(const ExAnteFirm& firm);

/// Builds from a strict-gap base firm (expected_surplus(base, excluded) <
/// expected_surplus(base, favored)) an excluding firm (A'', 1) with
///   interview_value(A'', excluded) <= cost < interview_value(A'', favored),
/// so A'' interviews `favored` but excludes `excluded`. Construction: shift
/// all tasks by the smallest beta >= 0 making every task payoff non-negative
/// on both supports, then rescale by gamma = 2*cost / (sum of the two shifted
/// surpluses), which lands cost strictly between them. Both inequalities are
/// re-verified exactly before return.
///
/// Requires cost > 0 (ZeroCostError at zero, std::invalid_argument below),
/// equal means, and a strict surplus gap in the stated direction.
ExAnteFirm construct_excluding_firm(const Firm& base, const Population& favored,
                                    const Population& excluded, const Rational& cost);

/// A positive-or-zero interview cost plus two equal-mean populations.
class ExAnteScenario {
 public:
  ExAnteScenario(Population first, Population second, Rational cost);

  const Population& first() const { return first_; }
  const Population& second() const { return second_; }
  const Rational& cost() const { return cost_; }

 private:
  Population first_;
  Population second_;
  Rational cost_;
};

/// Same verdicts as Classification; strict claims are supported by excluding
/// firms (each excludes the disadvantaged population at the scenario cost but
/// interviews the other).
struct ExAnteClassification {
  Verdict verdict;
  std::optional<ExAnteFirm> witness_against_first;
  std::optional<ExAnteFirm> witness_against_second;
};

/// Positive-cost classifier. The verdict equals classify(first, second)'s
/// for every cost > 0; witnesses chain the surplus-gap firms through
/// construct_excluding_firm. Throws ZeroCostError at cost zero (the zero-cost
/// regime is a genuinely different order; see classify_ex_ante_zero_cost).
ExAnteClassification classify_ex_ante(const ExAnteScenario& scenario);

/// Exact convex combination of the hull beliefs reproducing the query point.
struct HullCoefficients {
  std::vector<Rational> coefficients;
};

/// A task vector t with t . b <= 0 for every hull belief b and t . q > 0 for
/// the query point q: an affine separator folded onto the simplex, proving q
/// lies outside the hull.
struct SeparatingTask {
  std::vector<Rational> task;
};

using HullMembership = std::variant<HullCoefficients, SeparatingTask>;

/// Decides exactly whether `point` is a convex combination of `hull`, via LP
/// feasibility. Either outcome is returned with its exact witness, both
/// re-verified.
HullMembership hull_membership(const Belief& point, const std::vector<Belief>& hull);

/// The zero-cost dominance order: true iff every support belief of `lo` lies
/// in the convex hull of `hi`'s support. Equivalent formulation: every
/// non-negative convex function vanishing on hi's support also vanishes on
/// lo's, i.e. any firm excluding hi at zero cost also excludes lo. Requires
/// equal means. Unlike mean-preserving-spread dominance this order is not
/// anti-symmetric: distinct populations can dominate each other.
bool n_dominates(const Population& hi, const Population& lo);

/// Single-task firm with firm_value <= 0 on all of hi's support and > 0 at
/// some support belief of lo, or nullopt iff n_dominates(hi, lo). At zero
/// cost such a firm excludes hi but interviews lo.
std::optional<Firm> n_violation_firm(const Population& hi, const Population& lo);

/// Zero-cost classifier: classify_ex_ante's tag logic with n_dominates in
/// place of spread dominance. Because the zero-cost order is not
/// anti-symmetric, NoDiscrimination means mutual dominance, which distinct
/// populations can achieve (equal support hulls). Witnesses are single-task
/// separator firms with interview value 0 on the excluded population and
/// positive on the other.
ExAnteClassification classify_ex_ante_zero_cost(const Population& first,
                                                const Population& second);

}  // namespace discrim
