#pragma once
// Mean-preserving-spread dominance between equal-mean populations, decided by
// an exact martingale-coupling feasibility LP, plus the three-way
// discrimination classification built on top of it. Infeasibility comes with
// a Farkas certificate, and the certificate's barycenter multipliers convert
// directly into a firm that strictly discriminates — every such witness is
// re-checked by direct evaluation before it is returned.

#include <optional>
#include <variant>
#include <vector>

#include "discrim/core.hpp"
#include "discrim/lp.hpp"

namespace discrim {

/// A martingale kernel from the source population's support onto the target's:
/// weights[i][j] >= 0, row sums equal the source weights, column sums equal
/// the target weights, and each source atom's mass lands on target beliefs
/// averaging back to it (sum_j weights[i][j] * target_belief_j =
/// source_weight_i * source_belief_i). Existence is equivalent to the target
/// being a mean-preserving spread of the source.
struct Coupling {
  Population source;
  Population target;
  std::vector<std::vector<Rational>> weights;
};

/// Exact check of all three constraint families (including the row sums,
/// which the LP encoding leaves implicit). Throws std::invalid_argument with
/// the first violated constraint on failure.
void verify_coupling(const Coupling& coupling);

/// Chains two kernels: `lower` maps pi onto pi', `upper` maps pi' onto pi''.
/// The result maps pi onto pi'' and is re-verified exactly.
Coupling compose_couplings(const Coupling& upper, const Coupling& lower);

using DominanceResult = std::variant<Coupling, lp::FarkasCertificate>;

inline bool dominates(const DominanceResult& result) {
  return std::holds_alternative<Coupling>(result);
}

/// Decides whether `spread` is a mean-preserving spread of `base`
/// (equivalently: Blackwell-dominates it). Requires equal skill
/// distributions; throws UnequalMeansError otherwise.
///
/// LP encoding: one variable per (base atom i, spread atom j) pair; column-sum
/// constraints pin the mass arriving at each spread atom, and per-base-atom
/// barycenter constraints pin where each base atom's mass averages back to.
/// Row-sum constraints are omitted: summing atom i's barycenter rows over
/// skills yields them, because beliefs sum to 1.
DominanceResult mps_dominates(const Population& spread, const Population& base);

/// Converts the Farkas certificate of a failed mps_dominates(spread, base)
/// call into a firm whose expected surplus is strictly lower on `spread` than
/// on `base`. The firm's tasks are the negated barycenter multipliers, one
/// per base atom; the strict inequality is re-checked by direct evaluation.
Firm extract_discriminating_firm(const lp::FarkasCertificate& certificate,
                                 const Population& base, const Population& spread);

/// True iff expected_surplus(firm, against) < expected_surplus(firm, other),
/// exactly. Requires equal skill distributions.
bool discriminates_strictly(const Firm& firm, const Population& against,
                            const Population& other);

enum class Verdict {
  SystematicAgainstFirst,
  SystematicAgainstSecond,
  Unsystematic,
  NoDiscrimination,
};

/// Systematic verdicts carry a firm that strictly discriminates against the
/// disadvantaged population; Unsystematic carries one firm per direction;
/// NoDiscrimination carries none.
struct Classification {
  Verdict verdict;
  std::optional<Firm> witness_against_first;
  std::optional<Firm> witness_against_second;
};

/// Three-way classification of two equal-mean populations:
///   - structurally equal        -> NoDiscrimination
///   - second spreads first only -> SystematicAgainstFirst
///   - first spreads second only -> SystematicAgainstSecond
///   - neither spreads the other -> Unsystematic
/// Mutual dominance between distinct populations would contradict the
/// anti-symmetry of the spread order and raises std::logic_error.
Classification classify(const Population& first, const Population& second);

}  // namespace discrim
