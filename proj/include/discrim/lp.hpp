#pragma once
// Exact rational linear feasibility: find w >= 0 with M*w = b, or prove that
// none exists. The solver is a phase-one simplex over exact rationals with
// Bland's anti-cycling rule, so it terminates on every input and always
// returns either a feasible point or a Farkas certificate; there is no
// "unknown" outcome. Both answers are re-validated exactly before they are
// returned.

#include <cstddef>
#include <variant>
#include <vector>

#include "discrim/rational.hpp"

namespace discrim::lp {

/// Standard-form system: all constraints are equalities, all variables are
/// non-negative.
struct FeasibilitySystem {
  std::vector<std::vector<Rational>> matrix;  // rows x cols
  std::vector<Rational> rhs;                  // one entry per row

  std::size_t rows() const { return matrix.size(); }
  std::size_t cols() const { return matrix.empty() ? 0 : matrix.front().size(); }
};

/// Throws std::invalid_argument if the row/rhs dimensions are inconsistent.
void validate_system(const FeasibilitySystem& system);

/// Dual multipliers proving infeasibility: y'M >= 0 componentwise and
/// y'b < 0. Both inequalities are checked exactly on construction; a vector
/// that fails either one is rejected.
class FarkasCertificate {
 public:
  FarkasCertificate(const FeasibilitySystem& system, std::vector<Rational> multipliers);

  const std::vector<Rational>& multipliers() const { return multipliers_; }

 private:
  std::vector<Rational> multipliers_;
};

struct FeasiblePoint {
  std::vector<Rational> values;
};

using FeasibilityResult = std::variant<FeasiblePoint, FarkasCertificate>;

inline bool is_feasible(const FeasibilityResult& result) {
  return std::holds_alternative<FeasiblePoint>(result);
}

/// Exact check that M*point = b with point >= 0.
bool satisfies(const FeasibilitySystem& system, const std::vector<Rational>& point);

FeasibilityResult solve_feasibility(const FeasibilitySystem& system);

}  // namespace discrim::lp
