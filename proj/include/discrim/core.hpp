#pragma once
// Domain types: skills, posterior beliefs, finite-support populations of
// beliefs, and firms (finite task sets). All types validate their invariants
// at construction and are immutable afterwards, so every operation here is a
// pure function and safe to call concurrently.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "discrim/rational.hpp"

namespace discrim {

/// Raised when an operation defined only for populations with equal skill
/// distributions is handed a pair whose means differ.
class UnequalMeansError : public std::invalid_argument {
 public:
  UnequalMeansError(const std::vector<Rational>& first_mean,
                    const std::vector<Rational>& second_mean);
  const std::vector<Rational>& first_mean() const { return first_; }
  const std::vector<Rational>& second_mean() const { return second_; }

 private:
  std::vector<Rational> first_;
  std::vector<Rational> second_;
};

/// Raised when the positive-cost ex-ante classifier is called with cost zero;
/// the zero-cost regime has its own entry point.
class ZeroCostError : public std::invalid_argument {
 public:
  ZeroCostError() : std::invalid_argument("interview cost is zero; use the zero-cost classifier") {}
};

/// Ordered list of distinct skill-type labels. Fixes the indexing of every
/// vector in a scenario.
class SkillSet {
 public:
  explicit SkillSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const SkillSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// A probability vector over skill types: entries are non-negative exact
/// rationals summing to exactly 1.
class Belief {
 public:
  explicit Belief(std::vector<Rational> probs);

  std::size_t dimension() const { return probs_.size(); }
  const std::vector<Rational>& probs() const { return probs_; }
  const Rational& operator[](std::size_t i) const { return probs_[i]; }

  bool operator==(const Belief&) const = default;

 private:
  std::vector<Rational> probs_;
};

/// Lexicographic order on the probability vectors; fixes the canonical
/// ordering of population atoms.
bool belief_less(const Belief& a, const Belief& b);

// The mean belief of a population has the same shape as a belief.
using SkillDistribution = Belief;

struct Atom {
  Belief belief;
  Rational weight;

  bool operator==(const Atom&) const = default;
};

/// Finite-support distribution over beliefs. Construction canonicalizes:
/// atoms with identical beliefs are merged and the result is sorted
/// lexicographically by belief, so semantically equal populations compare
/// structurally equal. Rejects empty atom lists, non-positive weights and
/// weights not summing to exactly 1.
class Population {
 public:
  explicit Population(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }
  std::size_t dimension() const { return atoms_.front().belief.dimension(); }

  /// The support beliefs, in canonical order.
  std::vector<Belief> support() const;

  bool operator==(const Population&) const = default;

 private:
  std::vector<Atom> atoms_;
};

/// Point mass at a single belief.
Population point_mass(Belief belief);

/// A firm: a non-empty finite set of task payoff vectors. Duplicate tasks are
/// removed and tasks are stored in lexicographic order.
class Firm {
 public:
  explicit Firm(std::vector<std::vector<Rational>> tasks);

  const std::vector<std::vector<Rational>>& tasks() const { return tasks_; }
  std::size_t dimension() const { return tasks_.front().size(); }

  bool operator==(const Firm&) const = default;

 private:
  std::vector<std::vector<Rational>> tasks_;
};

/// A firm paired with the share alpha in (0, 1] of surplus it retains.
class ExAnteFirm {
 public:
  ExAnteFirm(Firm firm, Rational alpha);

  const Firm& firm() const { return firm_; }
  const Rational& alpha() const { return alpha_; }

  bool operator==(const ExAnteFirm&) const = default;

 private:
  Firm firm_;
  Rational alpha_;
};

/// Mean belief of the population: the fraction of workers of each skill type.
SkillDistribution skill_distribution(const Population& population);

/// Best achievable expected payoff of the firm at the given belief:
/// max over tasks a of sum_theta a(theta) * s(theta).
Rational firm_value(const Firm& firm, const Belief& belief);

/// Population-average firm value.
Rational expected_surplus(const Firm& firm, const Population& population);

bool same_skill_distribution(const Population& first, const Population& second);

/// {a + beta*1 : a in A}. firm_value shifts by exactly beta.
Firm shift_firm(const Firm& firm, const Rational& beta);

/// {gamma*a : a in A} for gamma > 0. firm_value scales by exactly gamma.
Firm scale_firm(const Firm& firm, const Rational& gamma);

/// Throws UnequalMeansError unless the two populations have identical skill
/// distributions (and matching dimension).
void require_equal_means(const Population& first, const Population& second);

}  // namespace discrim
