#pragma once
// Scenario files: the JSON document through which skill sets, populations,
// firms, and interview costs enter the tool. All numeric values are exact
// rationals written as strings ("3/4", "-1/2", "2") or JSON integers;
// floating-point literals are rejected so exactness survives serialization.
// Parsing canonicalizes (populations sort and merge, firms sort and dedup),
// emission is deterministic (sorted keys, lowest-terms rationals), and
// unknown fields are errors.

#include <map>
#include <optional>
#include <string>

#include "discrim/core.hpp"

namespace discrim {

/// Generator annotations: which population is the spread of which, whether
/// the split degenerated to equality, and the name of the independently
/// drawn equal-mean population.
struct GroundTruth {
  std::string base;
  std::string spread;
  bool degenerate = false;
  std::string independent;

  bool operator==(const GroundTruth&) const = default;
};

struct Scenario {
  SkillSet skills;
  std::map<std::string, Population> populations;
  std::map<std::string, ExAnteFirm> firms;
  std::optional<Rational> cost;
  std::optional<GroundTruth> ground_truth;

  bool operator==(const Scenario&) const = default;
};

/// Parses and validates a scenario document. Throws std::invalid_argument
/// naming the offending field on any violation: unknown keys, non-rational
/// numbers, dimension mismatches, invalid populations or firms, or
/// ground-truth names that match no population. Negative costs parse; the
/// commands that consume the cost reject them.
Scenario parse_scenario(const std::string& text);

/// Canonical emission: byte-identical for equal scenarios, round-trips
/// through parse_scenario unchanged.
std::string emit_scenario(const Scenario& scenario);

/// Lookup that throws std::invalid_argument listing the available names when
/// the requested population does not exist.
const Population& find_population(const Scenario& scenario, const std::string& name);

}  // namespace discrim
