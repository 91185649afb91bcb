#include "discrim/exante.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "discrim/lp.hpp"

namespace discrim {

namespace {

Rational dot(const std::vector<Rational>& task, const Belief& belief) {
  Rational sum = 0;
  for (std::size_t theta = 0; theta < task.size(); ++theta) {
    sum += task[theta] * belief[theta];
  }
  return sum;
}

}  // namespace

Rational interview_value(const ExAnteFirm& firm, const Population& population) {
  Rational total = 0;
  for (const Atom& atom : population.atoms()) {
    const Rational value = firm_value(firm.firm(), atom.belief);
    if (value > 0) total += atom.weight * value;
  }
  return firm.alpha() * total;
}

bool excludes(const ExAnteFirm& firm, const Rational& cost, const Population& population) {
  if (cost < 0) throw std::invalid_argument("interview cost is negative: " + to_string(cost));
  return interview_value(firm, population) <= cost;
}

ExAnteFirm normalize_firm(const ExAnteFirm& firm) {
  return ExAnteFirm(scale_firm(firm.firm(), firm.alpha()), Rational(1));
}

ExAnteFirm construct_excluding_firm(const Firm& base, const Population& favored,
                                    const Population& excluded, const Rational& cost) {
  if (cost == 0) throw ZeroCostError();
  if (cost < 0) throw std::invalid_argument("interview cost is negative: " + to_string(cost));
  require_equal_means(favored, excluded);
  if (!(expected_surplus(base, excluded) < expected_surplus(base, favored))) {
    throw std::invalid_argument(
        "base firm has no strict surplus gap in favor of the population to keep");
  }

  // Smallest shift making every task's payoff non-negative at every support
  // belief of either population, so surplus integrands need no clamping.
  Rational min_payoff = 0;
  for (const Population* population : {&favored, &excluded}) {
    for (const Atom& atom : population->atoms()) {
      for (const auto& task : base.tasks()) {
        const Rational payoff = dot(task, atom.belief);
        if (payoff < min_payoff) min_payoff = payoff;
      }
    }
  }
  const Firm shifted = shift_firm(base, -min_payoff);

  // The gap survives the shift, and the lower surplus is non-negative, so the
  // midpoint scaling puts cost strictly between the two interview values.
  const Rational high = expected_surplus(shifted, favored);
  const Rational low = expected_surplus(shifted, excluded);
  const Rational gamma = 2 * cost / (high + low);
  ExAnteFirm result(scale_firm(shifted, gamma), Rational(1));

  if (!(interview_value(result, excluded) <= cost) ||
      !(cost < interview_value(result, favored))) {
    throw std::logic_error("constructed firm does not separate the populations at this cost");
  }
  return result;
}

ExAnteScenario::ExAnteScenario(Population first, Population second, Rational cost)
    : first_(std::move(first)), second_(std::move(second)), cost_(std::move(cost)) {
  if (cost_ < 0) {
    throw std::invalid_argument("interview cost is negative: " + to_string(cost_));
  }
  require_equal_means(first_, second_);
}

ExAnteClassification classify_ex_ante(const ExAnteScenario& scenario) {
  if (scenario.cost() == 0) throw ZeroCostError();
  Classification surplus = classify(scenario.first(), scenario.second());
  ExAnteClassification result{surplus.verdict, std::nullopt, std::nullopt};
  if (surplus.witness_against_first) {
    result.witness_against_first =
        construct_excluding_firm(*surplus.witness_against_first, scenario.second(),
                                 scenario.first(), scenario.cost());
  }
  if (surplus.witness_against_second) {
    result.witness_against_second =
        construct_excluding_firm(*surplus.witness_against_second, scenario.first(),
                                 scenario.second(), scenario.cost());
  }
  return result;
}

HullMembership hull_membership(const Belief& point, const std::vector<Belief>& hull) {
  if (hull.empty()) throw std::invalid_argument("hull has no points");
  const std::size_t dim = point.dimension();
  for (const Belief& b : hull) {
    if (b.dimension() != dim) {
      throw std::invalid_argument("hull point dimension differs from query point");
    }
  }
  // One variable per hull point; one row per coordinate. The coefficients
  // summing to 1 is implied: coordinates of beliefs sum to 1 on both sides.
  lp::FeasibilitySystem system;
  system.matrix.assign(dim, std::vector<Rational>(hull.size()));
  system.rhs.resize(dim);
  for (std::size_t theta = 0; theta < dim; ++theta) {
    for (std::size_t k = 0; k < hull.size(); ++k) {
      system.matrix[theta][k] = hull[k][theta];
    }
    system.rhs[theta] = point[theta];
  }
  auto result = lp::solve_feasibility(system);
  if (auto* feasible = std::get_if<lp::FeasiblePoint>(&result)) {
    return HullCoefficients{std::move(feasible->values)};
  }
  // Certificate y has one entry per coordinate: y . b >= 0 for every hull
  // belief b and y . point < 0, so -y is a separating task.
  const auto& y = std::get<lp::FarkasCertificate>(result).multipliers();
  std::vector<Rational> task(dim);
  for (std::size_t theta = 0; theta < dim; ++theta) task[theta] = -y[theta];
  for (const Belief& b : hull) {
    if (dot(task, b) > 0) throw std::logic_error("separator is positive on a hull point");
  }
  if (!(dot(task, point) > 0)) {
    throw std::logic_error("separator does not separate the query point");
  }
  return SeparatingTask{std::move(task)};
}

bool n_dominates(const Population& hi, const Population& lo) {
  return !n_violation_firm(hi, lo).has_value();
}

std::optional<Firm> n_violation_firm(const Population& hi, const Population& lo) {
  require_equal_means(hi, lo);
  const std::vector<Belief> hull = hi.support();
  for (const Atom& atom : lo.atoms()) {
    HullMembership membership = hull_membership(atom.belief, hull);
    if (auto* separator = std::get_if<SeparatingTask>(&membership)) {
      return Firm({std::move(separator->task)});
    }
  }
  return std::nullopt;
}

namespace {

// The separator excludes `hi` at zero cost (its value is clamped to 0 on all
// of hi's support) but interviews `lo`. Checked exactly before use.
ExAnteFirm zero_cost_witness(const Population& hi, const Population& lo) {
  std::optional<Firm> separator = n_violation_firm(hi, lo);
  if (!separator) throw std::logic_error("no separator for a failed zero-cost dominance");
  ExAnteFirm witness(std::move(*separator), Rational(1));
  if (interview_value(witness, hi) != 0 || !(interview_value(witness, lo) > 0)) {
    throw std::logic_error("zero-cost witness has wrong interview values");
  }
  return witness;
}

}  // namespace

ExAnteClassification classify_ex_ante_zero_cost(const Population& first,
                                                const Population& second) {
  require_equal_means(first, second);
  const bool second_over_first = n_dominates(second, first);
  const bool first_over_second = n_dominates(first, second);
  if (second_over_first && first_over_second) {
    return ExAnteClassification{Verdict::NoDiscrimination, std::nullopt, std::nullopt};
  }
  if (second_over_first) {
    return ExAnteClassification{Verdict::SystematicAgainstFirst,
                                zero_cost_witness(first, second), std::nullopt};
  }
  if (first_over_second) {
    return ExAnteClassification{Verdict::SystematicAgainstSecond, std::nullopt,
                                zero_cost_witness(second, first)};
  }
  return ExAnteClassification{Verdict::Unsystematic, zero_cost_witness(first, second),
                              zero_cost_witness(second, first)};
}

}  // namespace discrim
