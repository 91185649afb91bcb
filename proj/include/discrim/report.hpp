#pragma once
// Verdict reports. A report is a single JSON document carrying the verdict,
// the populations it was computed from, the witnesses (couplings or firms),
// and the exact rational values backing every claimed inequality. Parsing a
// report re-verifies every claim from the document's own values, and the
// builders run the same verification, so a report that exists at all is
// auditable without re-running the solver.

#include <string>

#include "discrim/blackwell.hpp"
#include "discrim/core.hpp"
#include "discrim/exante.hpp"
#include "json.hpp"

namespace discrim {

struct Report {
  nlohmann::json doc;

  bool operator==(const Report& other) const { return doc == other.doc; }
};

/// Dominance report: the coupling matrix on success, otherwise a witness firm
/// extracted from the certificate together with both expected surpluses.
Report make_dominates_report(const SkillSet& skills, const std::string& spread_name,
                             const Population& spread, const std::string& base_name,
                             const Population& base, const DominanceResult& result);

/// Classification report: verdict plus one witness firm per strict claim,
/// each with its surplus on both populations.
Report make_classify_report(const SkillSet& skills, const std::string& first_name,
                            const Population& first, const std::string& second_name,
                            const Population& second, const Classification& classification);

/// Ex-ante report. cost > 0: excluding-firm witnesses with their interview
/// values against the cost. cost = 0: the hull-order regime; a
/// no-discrimination verdict additionally carries the mutual hull-containment
/// evidence (convex coefficients expressing each population's support in the
/// other's hull).
Report make_exante_report(const SkillSet& skills, const std::string& first_name,
                          const Population& first, const std::string& second_name,
                          const Population& second, const Rational& cost,
                          const ExAnteClassification& classification);

/// Canonical emission: sorted keys, rationals in lowest terms, trailing
/// newline. Byte-identical for equal reports.
std::string emit_report(const Report& report);

/// Parses and fully re-verifies a report: structure, witness recomputation,
/// and every inequality, exactly. Throws std::invalid_argument describing
/// the first failure.
Report parse_report(const std::string& text);

/// Human-readable rendering of a verified report.
std::string render_text(const Report& report);

}  // namespace discrim
