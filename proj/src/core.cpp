#include "discrim/core.hpp"

#include <algorithm>
#include <set>

namespace discrim {

UnequalMeansError::UnequalMeansError(const std::vector<Rational>& first_mean,
                                     const std::vector<Rational>& second_mean)
    : std::invalid_argument("populations have different skill distributions: " +
                            format_vector(first_mean) + " vs " + format_vector(second_mean)),
      first_(first_mean),
      second_(second_mean) {}

SkillSet::SkillSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("skill set must be non-empty");
  for (const std::string& label : labels_) {
    if (label.empty()) throw std::invalid_argument("skill labels must be non-empty");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) {
    throw std::invalid_argument("skill labels must be distinct");
  }
}

Belief::Belief(std::vector<Rational> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("belief must have at least one entry");
  Rational total(0);
  for (const Rational& p : probs_) {
    if (p < 0) throw std::invalid_argument("belief entries must be non-negative");
    total += p;
  }
  if (total != 1) {
    throw std::invalid_argument("belief entries must sum to exactly 1, got " + total.str());
  }
}

bool belief_less(const Belief& a, const Belief& b) {
  return std::lexicographical_compare(a.probs().begin(), a.probs().end(),
                                      b.probs().begin(), b.probs().end());
}

Population::Population(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("population must have at least one atom");
  const std::size_t dim = atoms_.front().belief.dimension();
  Rational total(0);
  for (const Atom& atom : atoms_) {
    if (atom.belief.dimension() != dim) {
      throw std::invalid_argument("population atoms must share one skill set");
    }
    if (atom.weight <= 0) throw std::invalid_argument("atom weights must be positive");
    total += atom.weight;
  }
  if (total != 1) {
    throw std::invalid_argument("atom weights must sum to exactly 1, got " + total.str());
  }

  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return belief_less(a.belief, b.belief); });
  std::vector<Atom> merged;
  merged.reserve(atoms_.size());
  for (Atom& atom : atoms_) {
    if (!merged.empty() && merged.back().belief == atom.belief) {
      merged.back().weight += atom.weight;
    } else {
      merged.push_back(std::move(atom));
    }
  }
  atoms_ = std::move(merged);
}

std::vector<Belief> Population::support() const {
  std::vector<Belief> beliefs;
  beliefs.reserve(atoms_.size());
  for (const Atom& atom : atoms_) beliefs.push_back(atom.belief);
  return beliefs;
}

Population point_mass(Belief belief) {
  return Population({Atom{std::move(belief), Rational(1)}});
}

Firm::Firm(std::vector<std::vector<Rational>> tasks) : tasks_(std::move(tasks)) {
  if (tasks_.empty()) throw std::invalid_argument("firm must have at least one task");
  const std::size_t dim = tasks_.front().size();
  if (dim == 0) throw std::invalid_argument("task payoff vectors must be non-empty");
  for (const auto& task : tasks_) {
    if (task.size() != dim) {
      throw std::invalid_argument("firm tasks must share one skill set");
    }
  }
  std::sort(tasks_.begin(), tasks_.end());
  tasks_.erase(std::unique(tasks_.begin(), tasks_.end()), tasks_.end());
}

ExAnteFirm::ExAnteFirm(Firm firm, Rational alpha)
    : firm_(std::move(firm)), alpha_(std::move(alpha)) {
  if (alpha_ <= 0 || alpha_ > 1) {
    throw std::invalid_argument("retention share alpha must lie in (0, 1], got " + alpha_.str());
  }
}

SkillDistribution skill_distribution(const Population& population) {
  std::vector<Rational> mean(population.dimension(), Rational(0));
  for (const Atom& atom : population.atoms()) {
    for (std::size_t t = 0; t < mean.size(); ++t) {
      mean[t] += atom.weight * atom.belief[t];
    }
  }
  return SkillDistribution(std::move(mean));
}

Rational firm_value(const Firm& firm, const Belief& belief) {
  if (firm.dimension() != belief.dimension()) {
    throw std::invalid_argument("firm and belief must share one skill set");
  }
  std::optional<Rational> best;
  for (const auto& task : firm.tasks()) {
    Rational value(0);
    for (std::size_t t = 0; t < task.size(); ++t) value += task[t] * belief[t];
    if (!best || value > *best) best = value;
  }
  return *best;
}

Rational expected_surplus(const Firm& firm, const Population& population) {
  Rational total(0);
  for (const Atom& atom : population.atoms()) {
    total += atom.weight * firm_value(firm, atom.belief);
  }
  return total;
}

bool same_skill_distribution(const Population& first, const Population& second) {
  if (first.dimension() != second.dimension()) {
    throw std::invalid_argument("populations must share one skill set");
  }
  return skill_distribution(first) == skill_distribution(second);
}

Firm shift_firm(const Firm& firm, const Rational& beta) {
  std::vector<std::vector<Rational>> tasks = firm.tasks();
  for (auto& task : tasks) {
    for (Rational& entry : task) entry += beta;
  }
  return Firm(std::move(tasks));
}

Firm scale_firm(const Firm& firm, const Rational& gamma) {
  if (gamma <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<std::vector<Rational>> tasks = firm.tasks();
  for (auto& task : tasks) {
    for (Rational& entry : task) entry *= gamma;
  }
  return Firm(std::move(tasks));
}

void require_equal_means(const Population& first, const Population& second) {
  if (first.dimension() != second.dimension()) {
    throw std::invalid_argument("populations must share one skill set");
  }
  const SkillDistribution a = skill_distribution(first);
  const SkillDistribution b = skill_distribution(second);
  if (!(a == b)) throw UnequalMeansError(a.probs(), b.probs());
}

}  // namespace discrim
