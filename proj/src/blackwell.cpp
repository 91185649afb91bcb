#include "discrim/blackwell.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace discrim {

namespace {

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

void verify_coupling(const Coupling& coupling) {
  const auto& src = coupling.source.atoms();
  const auto& tgt = coupling.target.atoms();
  const auto& w = coupling.weights;
  if (coupling.source.dimension() != coupling.target.dimension()) {
    throw std::invalid_argument("coupling endpoints have different skill dimensions");
  }
  if (w.size() != src.size()) {
    throw std::invalid_argument("coupling has " + std::to_string(w.size()) +
                                " rows for " + std::to_string(src.size()) + " source atoms");
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].size() != tgt.size()) {
      throw std::invalid_argument("coupling row " + std::to_string(i) + " has " +
                                  std::to_string(w[i].size()) + " entries for " +
                                  std::to_string(tgt.size()) + " target atoms");
    }
    for (std::size_t j = 0; j < w[i].size(); ++j) {
      if (w[i][j] < 0) {
        throw std::invalid_argument("coupling weight " + cell(i, j) + " is negative: " +
                                    to_string(w[i][j]));
      }
    }
  }
  for (std::size_t j = 0; j < tgt.size(); ++j) {
    Rational column_sum = 0;
    for (std::size_t i = 0; i < src.size(); ++i) column_sum += w[i][j];
    if (column_sum != tgt[j].weight) {
      throw std::invalid_argument("coupling column " + std::to_string(j) + " sums to " +
                                  to_string(column_sum) + ", target atom has weight " +
                                  to_string(tgt[j].weight));
    }
  }
  const std::size_t dim = coupling.source.dimension();
  for (std::size_t i = 0; i < src.size(); ++i) {
    Rational row_sum = 0;
    for (std::size_t j = 0; j < tgt.size(); ++j) row_sum += w[i][j];
    if (row_sum != src[i].weight) {
      throw std::invalid_argument("coupling row " + std::to_string(i) + " sums to " +
                                  to_string(row_sum) + ", source atom has weight " +
                                  to_string(src[i].weight));
    }
    for (std::size_t theta = 0; theta < dim; ++theta) {
      Rational moment = 0;
      for (std::size_t j = 0; j < tgt.size(); ++j) {
        moment += w[i][j] * tgt[j].belief[theta];
      }
      if (moment != src[i].weight * src[i].belief[theta]) {
        throw std::invalid_argument("coupling row " + std::to_string(i) +
                                    " does not average back to its source belief at skill " +
                                    std::to_string(theta));
      }
    }
  }
}

Coupling compose_couplings(const Coupling& upper, const Coupling& lower) {
  if (!(lower.target == upper.source)) {
    throw std::invalid_argument("couplings do not chain: lower target differs from upper source");
  }
  const auto& mid = upper.source.atoms();
  const std::size_t m = lower.source.support_size();
  const std::size_t n = upper.target.support_size();
  std::vector<std::vector<Rational>> weights(m, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < mid.size(); ++j) {
      if (lower.weights[i][j] == 0) continue;
      // Atom weights are positive by construction, so the disintegration of
      // the middle layer is well defined.
      const Rational through = lower.weights[i][j] / mid[j].weight;
      for (std::size_t k = 0; k < n; ++k) {
        weights[i][k] += through * upper.weights[j][k];
      }
    }
  }
  Coupling composed{lower.source, upper.target, std::move(weights)};
  verify_coupling(composed);
  return composed;
}

DominanceResult mps_dominates(const Population& spread, const Population& base) {
  require_equal_means(spread, base);
  if (spread == base) {
    // The identity kernel couples a population with itself; going through the
    // LP would return some feasible kernel but not necessarily this one.
    const std::size_t n = base.support_size();
    std::vector<std::vector<Rational>> weights(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) weights[i][i] = base.atoms()[i].weight;
    Coupling identity{base, spread, std::move(weights)};
    verify_coupling(identity);
    return identity;
  }

  const auto& lo = base.atoms();
  const auto& hi = spread.atoms();
  const std::size_t m = lo.size();
  const std::size_t n = hi.size();
  const std::size_t dim = base.dimension();
  const std::size_t cols = m * n;
  const auto var = [n](std::size_t i, std::size_t j) { return i * n + j; };

  lp::FeasibilitySystem system;
  system.matrix.reserve(n + m * dim);
  system.rhs.reserve(n + m * dim);
  // Mass arriving at each target atom.
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(cols, Rational(0));
    for (std::size_t i = 0; i < m; ++i) row[var(i, j)] = 1;
    system.matrix.push_back(std::move(row));
    system.rhs.push_back(hi[j].weight);
  }
  // Each source atom's mass averages back to its own belief. Row sums are
  // implied: summing atom i's rows over skills gives them, because target
  // beliefs sum to 1.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t theta = 0; theta < dim; ++theta) {
      std::vector<Rational> row(cols, Rational(0));
      for (std::size_t j = 0; j < n; ++j) row[var(i, j)] = hi[j].belief[theta];
      system.matrix.push_back(std::move(row));
      system.rhs.push_back(lo[i].weight * lo[i].belief[theta]);
    }
  }

  auto result = lp::solve_feasibility(system);
  if (auto* point = std::get_if<lp::FeasiblePoint>(&result)) {
    std::vector<std::vector<Rational>> weights(m, std::vector<Rational>(n));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) weights[i][j] = point->values[var(i, j)];
    }
    Coupling coupling{base, spread, std::move(weights)};
    verify_coupling(coupling);
    return coupling;
  }
  return std::get<lp::FarkasCertificate>(std::move(result));
}

Firm extract_discriminating_firm(const lp::FarkasCertificate& certificate,
                                 const Population& base, const Population& spread) {
  const std::size_t m = base.support_size();
  const std::size_t n = spread.support_size();
  const std::size_t dim = base.dimension();
  const auto& y = certificate.multipliers();
  if (y.size() != n + m * dim) {
    throw std::invalid_argument("certificate has " + std::to_string(y.size()) +
                                " multipliers, the coupling system for these populations has " +
                                std::to_string(n + m * dim) + " rows");
  }
  // Certificate layout follows the system: n target-mass rows, then the
  // barycenter multipliers lambda_i per source atom. Feasibility of y'M >= 0
  // reads v_j >= (-lambda_i) . s'_j for every pair, so the firm built from
  // the negated lambdas is dominated by v on the spread support, and y'b < 0
  // turns that into a strict surplus gap in favor of the base population.
  std::vector<std::vector<Rational>> tasks(m, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t theta = 0; theta < dim; ++theta) {
      tasks[i][theta] = -y[n + i * dim + theta];
    }
  }
  Firm firm(std::move(tasks));
  if (!discriminates_strictly(firm, spread, base)) {
    throw std::logic_error("extracted firm does not strictly discriminate");
  }
  return firm;
}

bool discriminates_strictly(const Firm& firm, const Population& against,
                            const Population& other) {
  require_equal_means(against, other);
  return expected_surplus(firm, against) < expected_surplus(firm, other);
}

Classification classify(const Population& first, const Population& second) {
  require_equal_means(first, second);
  if (first == second) {
    return Classification{Verdict::NoDiscrimination, std::nullopt, std::nullopt};
  }
  auto first_over_second = mps_dominates(first, second);
  auto second_over_first = mps_dominates(second, first);
  if (dominates(first_over_second) && dominates(second_over_first)) {
    throw std::logic_error("distinct populations dominate each other; "
                           "the spread order is anti-symmetric");
  }
  if (dominates(second_over_first)) {
    // Every firm weakly prefers the second population; the failed reverse
    // direction certifies that some firm strictly does.
    Firm witness = extract_discriminating_firm(
        std::get<lp::FarkasCertificate>(first_over_second), second, first);
    return Classification{Verdict::SystematicAgainstFirst, std::move(witness), std::nullopt};
  }
  if (dominates(first_over_second)) {
    Firm witness = extract_discriminating_firm(
        std::get<lp::FarkasCertificate>(second_over_first), first, second);
    return Classification{Verdict::SystematicAgainstSecond, std::nullopt, std::move(witness)};
  }
  Firm against_first = extract_discriminating_firm(
      std::get<lp::FarkasCertificate>(first_over_second), second, first);
  Firm against_second = extract_discriminating_firm(
      std::get<lp::FarkasCertificate>(second_over_first), first, second);
  return Classification{Verdict::Unsystematic, std::move(against_first),
                        std::move(against_second)};
}

}  // namespace discrim
