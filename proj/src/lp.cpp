#include "discrim/lp.hpp"

#include <stdexcept>

namespace discrim::lp {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational total(0);
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

}  // namespace

void validate_system(const FeasibilitySystem& system) {
  if (system.rhs.size() != system.rows()) {
    throw std::invalid_argument("rhs length does not match row count");
  }
  const std::size_t cols = system.cols();
  for (const auto& row : system.matrix) {
    if (row.size() != cols) throw std::invalid_argument("matrix rows have unequal lengths");
  }
}

FarkasCertificate::FarkasCertificate(const FeasibilitySystem& system,
                                     std::vector<Rational> multipliers)
    : multipliers_(std::move(multipliers)) {
  validate_system(system);
  if (multipliers_.size() != system.rows()) {
    throw std::invalid_argument("certificate length does not match row count");
  }
  for (std::size_t j = 0; j < system.cols(); ++j) {
    Rational column(0);
    for (std::size_t i = 0; i < system.rows(); ++i) {
      column += multipliers_[i] * system.matrix[i][j];
    }
    if (column < 0) {
      throw std::invalid_argument("certificate rejected: y'M has a negative component");
    }
  }
  if (dot(multipliers_, system.rhs) >= 0) {
    throw std::invalid_argument("certificate rejected: y'b is not negative");
  }
}

bool satisfies(const FeasibilitySystem& system, const std::vector<Rational>& point) {
  if (point.size() != system.cols()) return false;
  for (const Rational& v : point) {
    if (v < 0) return false;
  }
  for (std::size_t i = 0; i < system.rows(); ++i) {
    if (dot(system.matrix[i], point) != system.rhs[i]) return false;
  }
  return true;
}

// Phase-one simplex on the full tableau. Columns 0..n-1 are the original
// variables, n..n+m-1 the artificials, column n+m the rhs; row m is the
// reduced-cost row for the objective "minimize the sum of artificials".
// Rows with negative rhs are sign-flipped up front so the artificial basis
// is feasible. Bland's rule picks the lowest-index entering column and breaks
// ratio ties by the lowest-index basic variable, which rules out cycling.
FeasibilityResult solve_feasibility(const FeasibilitySystem& system) {
  validate_system(system);
  const std::size_t m = system.rows();
  const std::size_t n = system.cols();
  const std::size_t rhs_col = n + m;

  std::vector<int> sign(m, 1);
  std::vector<std::vector<Rational>> tab(m + 1, std::vector<Rational>(n + m + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    if (system.rhs[i] < 0) sign[i] = -1;
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = sign[i] * system.matrix[i][j];
    tab[i][n + i] = 1;
    tab[i][rhs_col] = sign[i] * system.rhs[i];
  }
  // Price out the all-artificial starting basis.
  for (std::size_t j = 0; j <= rhs_col; ++j) {
    if (j >= n && j < rhs_col) continue;  // artificial reduced costs start at 0
    Rational sum(0);
    for (std::size_t i = 0; i < m; ++i) sum += tab[i][j];
    tab[m][j] = -sum;
  }

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    std::size_t entering = rhs_col;
    for (std::size_t j = 0; j < rhs_col; ++j) {
      if (tab[m][j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == rhs_col) break;  // optimal

    std::size_t leaving = m;
    Rational best_ratio(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][entering] <= 0) continue;
      const Rational ratio = tab[i][rhs_col] / tab[i][entering];
      if (leaving == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == m) {
      // The phase-one objective is bounded below by zero, so an unbounded
      // direction is impossible for a well-formed tableau.
      throw std::logic_error("phase-one simplex reported an unbounded direction");
    }

    const Rational pivot = tab[leaving][entering];
    for (std::size_t j = 0; j <= rhs_col; ++j) tab[leaving][j] /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leaving) continue;
      const Rational factor = tab[i][entering];
      if (factor == 0) continue;
      for (std::size_t j = 0; j <= rhs_col; ++j) {
        tab[i][j] -= factor * tab[leaving][j];
      }
    }
    basis[leaving] = entering;
  }

  const Rational objective = -tab[m][rhs_col];
  if (objective == 0) {
    std::vector<Rational> point(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) point[basis[i]] = tab[i][rhs_col];
    }
    if (!satisfies(system, point)) {
      throw std::logic_error("simplex produced a point that fails re-validation");
    }
    return FeasiblePoint{std::move(point)};
  }

  // Simplex multipliers: the reduced cost of artificial i is 1 - y_i, so
  // y_i = 1 - tab[m][n+i]. For the sign-flipped system y'M' <= 0 < y'b', and
  // undoing the flips and negating gives the certificate for the original.
  std::vector<Rational> certificate(m);
  for (std::size_t i = 0; i < m; ++i) {
    certificate[i] = -(sign[i] * (Rational(1) - tab[m][n + i]));
  }
  return FarkasCertificate(system, std::move(certificate));
}

}  // namespace discrim::lp
