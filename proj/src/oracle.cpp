#include "discrim/oracle.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>

#include "discrim/exante.hpp"

namespace discrim::oracle {

namespace {

// Substream tags; any distinct constants work, mix64 decorrelates them.
constexpr std::uint64_t kSplitStream = 1;
constexpr std::uint64_t kPopulationMeanStream = 2;
constexpr std::uint64_t kPopulationShapeStream = 3;
constexpr std::uint64_t kPinnedMeanShapeStream = 4;
constexpr std::uint64_t kFirmStream = 5;
constexpr std::uint64_t kEvidenceStream = 6;

Rng stream_rng(const InstanceSeed& seed, std::uint64_t tag) {
  return Rng(mix64(seed.seed ^ mix64(tag)));
}

}  // namespace

void validate_seed(const InstanceSeed& seed) {
  if (seed.skill_count < 1) throw std::invalid_argument("skill_count must be >= 1");
  if (seed.support_bound < 1) throw std::invalid_argument("support_bound must be >= 1");
  if (seed.denominator_bound < 1) {
    throw std::invalid_argument("denominator_bound must be >= 1");
  }
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::bounded(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bounded(0)");
  // Reject the low non-multiple-of-bound slice so the remainder is uniform.
  const std::uint64_t cutoff = (-bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t raw = engine_();
    if (raw >= cutoff) return raw % bound;
  }
}

std::int64_t Rng::int_in(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty integer range");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + bounded(span));
}

Rational Rng::fraction(std::uint64_t denominator_bound) {
  const std::uint64_t den = 1 + bounded(denominator_bound);
  const std::uint64_t num = bounded(den + 1);
  return Rational(Integer(num)) / Rational(Integer(den));
}

Rational Rng::positive_fraction(std::uint64_t denominator_bound) {
  const std::uint64_t den = 1 + bounded(denominator_bound);
  const std::uint64_t num = 1 + bounded(den);
  return Rational(Integer(num)) / Rational(Integer(den));
}

Belief random_belief(Rng& rng, std::size_t dimension, std::uint64_t denominator_bound) {
  if (dimension < 1) throw std::invalid_argument("belief dimension must be >= 1");
  std::vector<Rational> probs(dimension);
  for (;;) {
    Rational sum = 0;
    for (auto& p : probs) {
      p = Rational(Integer(rng.bounded(denominator_bound + 1)));
      sum += p;
    }
    if (sum == 0) continue;  // all-zero draw carries no direction; redraw
    for (auto& p : probs) p /= sum;
    return Belief(std::move(probs));
  }
}

namespace {

// Largest t with s + t*d still inside [0, 1] per coordinate. Coordinate sums
// are preserved automatically because the direction sums to zero.
Rational max_step(const Belief& s, const std::vector<Rational>& d) {
  std::optional<Rational> best;
  for (std::size_t theta = 0; theta < d.size(); ++theta) {
    std::optional<Rational> cap;
    if (d[theta] > 0) {
      cap = (Rational(1) - s[theta]) / d[theta];
    } else if (d[theta] < 0) {
      cap = s[theta] / -d[theta];
    }
    if (cap && (!best || *cap < *best)) best = cap;
  }
  // d sums to zero, so a nonzero d has entries of both signs and best is set.
  return *best;
}

std::size_t support_index(const std::vector<Belief>& support, const Belief& belief) {
  for (std::size_t j = 0; j < support.size(); ++j) {
    if (support[j] == belief) return j;
  }
  throw std::logic_error("belief missing from canonical support");
}

}  // namespace

SplitResult random_mps_split(const Population& population, const InstanceSeed& seed) {
  validate_seed(seed);
  Rng rng = stream_rng(seed, kSplitStream);
  const std::size_t dim = population.dimension();

  struct Share {
    Belief belief;
    Rational mass;
  };
  std::vector<std::vector<Share>> shares;  // per source atom

  for (const Atom& atom : population.atoms()) {
    std::vector<Rational> direction(dim);
    Rational mean = 0;
    for (auto& c : direction) {
      c = rng.fraction(seed.denominator_bound);
      mean += c;
    }
    mean /= Rational(Integer(dim));
    bool zero = true;
    for (auto& c : direction) {
      c -= mean;
      if (c != 0) zero = false;
    }

    Rational up = 0;
    Rational down = 0;
    if (!zero) {
      up = max_step(atom.belief, direction);
      std::vector<Rational> reversed(dim);
      for (std::size_t theta = 0; theta < dim; ++theta) reversed[theta] = -direction[theta];
      down = max_step(atom.belief, reversed);
    }
    if (zero || up == 0 || down == 0) {
      // The atom sits where the direction cannot move both ways (always the
      // case at a simplex vertex); keep it unchanged.
      shares.push_back({Share{atom.belief, atom.weight}});
      continue;
    }

    const Rational t = up * rng.positive_fraction(seed.denominator_bound);
    const Rational u = down * rng.positive_fraction(seed.denominator_bound);
    std::vector<Rational> plus(dim);
    std::vector<Rational> minus(dim);
    for (std::size_t theta = 0; theta < dim; ++theta) {
      plus[theta] = atom.belief[theta] + t * direction[theta];
      minus[theta] = atom.belief[theta] - u * direction[theta];
    }
    // Weights u : t across the two children put the barycenter back at the
    // atom: (u*(s + t*d) + t*(s - u*d)) / (t + u) = s.
    shares.push_back({Share{Belief(std::move(plus)), atom.weight * u / (t + u)},
                      Share{Belief(std::move(minus)), atom.weight * t / (t + u)}});
  }

  std::vector<Atom> atoms;
  for (const auto& atom_shares : shares) {
    for (const Share& share : atom_shares) atoms.push_back({share.belief, share.mass});
  }
  Population split(std::move(atoms));

  const std::vector<Belief> support = split.support();
  std::vector<std::vector<Rational>> weights(
      population.support_size(), std::vector<Rational>(support.size(), Rational(0)));
  for (std::size_t i = 0; i < shares.size(); ++i) {
    for (const Share& share : shares[i]) {
      weights[i][support_index(support, share.belief)] += share.mass;
    }
  }
  Coupling coupling{population, split, std::move(weights)};
  verify_coupling(coupling);
  const bool degenerate = split == population;
  return SplitResult{std::move(split), std::move(coupling), degenerate};
}

namespace {

Population iterate_splits(Population current, const InstanceSeed& seed,
                          std::uint64_t stream) {
  Rng rng = Rng(mix64(seed.seed ^ mix64(stream)));
  const std::size_t rounds = 1 + static_cast<std::size_t>(rng.bounded(3));
  for (std::size_t round = 0; round < rounds; ++round) {
    InstanceSeed sub = seed;
    sub.seed = mix64(seed.seed ^ mix64(stream) ^ (round + 1));
    SplitResult next = random_mps_split(current, sub);
    if (next.population.support_size() > seed.support_bound) break;
    current = std::move(next.population);
  }
  return current;
}

}  // namespace

Population random_population(const InstanceSeed& seed) {
  validate_seed(seed);
  Rng rng = stream_rng(seed, kPopulationMeanStream);
  Belief mean = random_belief(rng, seed.skill_count, seed.denominator_bound);
  return iterate_splits(point_mass(std::move(mean)), seed, kPopulationShapeStream);
}

Population random_population_with_mean(const Belief& mean, const InstanceSeed& seed) {
  validate_seed(seed);
  return iterate_splits(point_mass(mean), seed, kPinnedMeanShapeStream);
}

namespace {

std::vector<Rational> random_task(Rng& rng, std::size_t dim, std::int64_t payoff_bound,
                                  std::uint64_t denominator_bound) {
  std::vector<Rational> task(dim);
  for (auto& entry : task) {
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng.bounded(denominator_bound));
    const std::int64_t num = rng.int_in(-payoff_bound * den, payoff_bound * den);
    entry = Rational(Integer(num)) / Rational(Integer(den));
  }
  return task;
}

Firm random_firm(Rng& rng, std::size_t dim, std::size_t task_count,
                 std::int64_t payoff_bound, std::uint64_t denominator_bound) {
  std::vector<std::vector<Rational>> tasks;
  tasks.reserve(task_count);
  std::size_t attempts = 0;
  while (tasks.size() < task_count) {
    if (++attempts > 64 * task_count) {
      throw std::invalid_argument("cannot sample the requested number of distinct tasks");
    }
    auto task = random_task(rng, dim, payoff_bound, denominator_bound);
    if (std::find(tasks.begin(), tasks.end(), task) == tasks.end()) {
      tasks.push_back(std::move(task));
    }
  }
  return Firm(std::move(tasks));
}

}  // namespace

Firm sample_random_firm(const InstanceSeed& seed, std::size_t task_count,
                        std::int64_t payoff_bound) {
  validate_seed(seed);
  if (task_count < 1) throw std::invalid_argument("task_count must be >= 1");
  if (payoff_bound < 0) throw std::invalid_argument("payoff_bound must be >= 0");
  Rng rng = stream_rng(seed, kFirmStream);
  return random_firm(rng, seed.skill_count, task_count, payoff_bound,
                     seed.denominator_bound);
}

ClassificationEvidence estimate_classification(const Population& first,
                                               const Population& second,
                                               std::size_t samples,
                                               const InstanceSeed& seed) {
  validate_seed(seed);
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  require_equal_means(first, second);
  Rng rng = stream_rng(seed, kEvidenceStream);
  ClassificationEvidence evidence;
  evidence.samples = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t task_count = 1 + static_cast<std::size_t>(rng.bounded(4));
    const Firm firm =
        random_firm(rng, first.dimension(), task_count, 8, seed.denominator_bound);
    const Rational on_first = expected_surplus(firm, first);
    const Rational on_second = expected_surplus(firm, second);
    if (on_first < on_second) ++evidence.strict_against_first;
    if (on_second < on_first) ++evidence.strict_against_second;
  }
  return evidence;
}

bool convex_test_function_check(const Population& hi, const Population& lo,
                                const Firm& firm, bool nonneg) {
  require_equal_means(hi, lo);
  if (!nonneg) {
    return expected_surplus(firm, hi) >= expected_surplus(firm, lo);
  }
  const ExAnteFirm clamped(firm, Rational(1));
  const Rational over_hi = interview_value(clamped, hi);
  const Rational over_lo = interview_value(clamped, lo);
  return over_lo == 0 || over_hi > 0;
}

}  // namespace discrim::oracle
