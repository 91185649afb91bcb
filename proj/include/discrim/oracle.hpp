#pragma once
// Deterministic instance generators and sampling-based cross-checks for the
// LP-backed decisions. Generators produce instances with known ground truth
// (a split output dominates its input by construction, with the coupling
// attached); the samplers only ever refute: a sampled firm can disprove a
// dominance claim but no amount of sampling confirms one, so the checks here
// validate the solver without standing in for it.
//
// Every operation is a pure function of its seed. The generator stack uses
// std::mt19937_64 and rejection sampling only, so draws are identical across
// platforms and standard libraries.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "discrim/blackwell.hpp"
#include "discrim/core.hpp"

namespace discrim::oracle {

/// Seed plus size bounds for one generated instance family.
struct InstanceSeed {
  std::uint64_t seed = 0;
  std::size_t skill_count = 2;          // >= 1
  std::size_t support_bound = 4;        // >= 1, cap on generated support sizes
  std::uint64_t denominator_bound = 16; // >= 1, cap on generated denominators
};

/// Throws std::invalid_argument unless all bounds are >= 1.
void validate_seed(const InstanceSeed& seed);

/// 64-bit finalizer used to derive independent substreams from one seed.
std::uint64_t mix64(std::uint64_t x);

/// Deterministic uniform source. The engine's output sequence is fixed by
/// the standard, and all range reduction here is rejection-based, so every
/// draw is identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound >= 1.
  std::uint64_t bounded(std::uint64_t bound);
  /// Uniform in [lo, hi], inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi);
  /// Uniform numerator/denominator pair in [0, 1], denominator <= bound.
  Rational fraction(std::uint64_t denominator_bound);
  /// As fraction but in (0, 1].
  Rational positive_fraction(std::uint64_t denominator_bound);

 private:
  std::mt19937_64 engine_;
};

/// Random belief with denominators bounded by the given cap.
Belief random_belief(Rng& rng, std::size_t dimension, std::uint64_t denominator_bound);

/// A generated spread of a base population, with its ground truth attached.
struct SplitResult {
  Population population;  // dominates the input by construction
  Coupling coupling;      // source = input, target = population; verified
  bool degenerate;        // population equals the input
};

/// Replaces each atom by a two-point mixture with the same barycenter: a
/// random in-simplex direction, random step sizes within the box limits, and
/// weights chosen so the two children average back to the atom. Atoms that
/// cannot move both ways (or draw a zero direction) are kept unchanged. The
/// output dominates the input by construction; two-point splits are the
/// extreme rays of the spread order, so iterating them reaches richer
/// spreads.
SplitResult random_mps_split(const Population& population, const InstanceSeed& seed);

/// Random population: iterated splits of a point mass at a random mean,
/// stopping before the support would exceed seed.support_bound.
Population random_population(const InstanceSeed& seed);

/// As random_population but with the mean pinned, on an independent
/// substream: for a fixed InstanceSeed this is not correlated with
/// random_population's output, which makes equal-mean contrast pairs.
Population random_population_with_mean(const Belief& mean, const InstanceSeed& seed);

/// Firm with exactly task_count distinct tasks, entries uniform in
/// [-payoff_bound, payoff_bound] with denominators bounded by
/// seed.denominator_bound.
Firm sample_random_firm(const InstanceSeed& seed, std::size_t task_count,
                        std::int64_t payoff_bound);

/// Counts of exact strict surplus inequalities over sampled firms. Evidence
/// is refutation-only: a nonzero count in some direction disproves claims,
/// zero counts confirm nothing.
struct ClassificationEvidence {
  std::size_t samples = 0;
  std::size_t strict_against_first = 0;   // surplus(first) < surplus(second)
  std::size_t strict_against_second = 0;
};

/// Compares expected surpluses under `samples` random firms (1 to 4 tasks,
/// payoffs bounded by 8). Requires equal means.
ClassificationEvidence estimate_classification(const Population& first,
                                               const Population& second,
                                               std::size_t samples,
                                               const InstanceSeed& seed);

/// Evaluates the firm's value function as a convex test function.
/// nonneg = false: returns whether the dominance inequality
///   surplus(hi) >= surplus(lo) holds.
/// nonneg = true: clamps the value at 0 and returns the zero-cost-order
///   implication (integral over lo positive implies integral over hi
///   positive). Requires equal means.
bool convex_test_function_check(const Population& hi, const Population& lo,
                                const Firm& firm, bool nonneg);

}  // namespace discrim::oracle
