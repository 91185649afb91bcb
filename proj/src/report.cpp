#include "discrim/report.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json_convert.hpp"

namespace discrim {

namespace {

using jsonio::json;

const char* verdict_label(Verdict verdict) {
  switch (verdict) {
    case Verdict::SystematicAgainstFirst: return "systematic_against_first";
    case Verdict::SystematicAgainstSecond: return "systematic_against_second";
    case Verdict::Unsystematic: return "unsystematic";
    case Verdict::NoDiscrimination: return "no_discrimination";
  }
  throw std::logic_error("unknown verdict");
}

Verdict parse_verdict(const json& value, const std::string& where) {
  if (value.is_string()) {
    const std::string label = value.get<std::string>();
    if (label == "systematic_against_first") return Verdict::SystematicAgainstFirst;
    if (label == "systematic_against_second") return Verdict::SystematicAgainstSecond;
    if (label == "unsystematic") return Verdict::Unsystematic;
    if (label == "no_discrimination") return Verdict::NoDiscrimination;
  }
  throw std::invalid_argument(where + ": not a verdict: " + value.dump());
}

json named_population_to_json(const std::string& name, const Population& population) {
  return json{{"name", name}, {"atoms", jsonio::population_to_json(population)}};
}

struct NamedPopulation {
  std::string name;
  Population population;
};

NamedPopulation parse_named_population(const json& value, std::size_t dimension,
                                       const std::string& where) {
  if (!value.is_object()) {
    throw std::invalid_argument(where + ": expected an object, got " +
                                jsonio::type_name(value));
  }
  jsonio::require_keys(value, {"name", "atoms"}, where);
  const json& name = jsonio::require_present(value, "name", where);
  if (!name.is_string()) {
    throw std::invalid_argument(where + ".name: expected a string");
  }
  return NamedPopulation{
      name.get<std::string>(),
      jsonio::parse_population(jsonio::require_present(value, "atoms", where), dimension,
                               where + ".atoms")};
}

SkillSet parse_skills(const json& doc) {
  const json& skills = jsonio::require_present(doc, "skills", "report");
  if (!skills.is_array()) {
    throw std::invalid_argument("report.skills: expected an array of labels");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < skills.size(); ++i) {
    if (!skills[i].is_string()) {
      throw std::invalid_argument("report.skills[" + std::to_string(i) +
                                  "]: expected a string label");
    }
    labels.push_back(skills[i].get<std::string>());
  }
  try {
    return SkillSet(std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("report.skills: ") + e.what());
  }
}

std::vector<std::vector<Rational>> parse_rational_matrix(const json& value,
                                                         std::size_t rows,
                                                         std::size_t cols,
                                                         const std::string& where) {
  if (!value.is_array() || value.size() != rows) {
    throw std::invalid_argument(where + ": expected " + std::to_string(rows) + " rows");
  }
  std::vector<std::vector<Rational>> matrix;
  matrix.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    matrix.push_back(
        jsonio::parse_rational_array(value[i], cols, where + "[" + std::to_string(i) + "]"));
  }
  return matrix;
}

json rational_matrix_to_json(const std::vector<std::vector<Rational>>& matrix) {
  json out = json::array();
  for (const auto& row : matrix) out.push_back(jsonio::rational_array_to_json(row));
  return out;
}

// ---- verification -----------------------------------------------------

void verify_dominates(const json& doc) {
  jsonio::require_keys(doc, {"command", "skills", "spread", "base", "verdict", "coupling",
                             "witness"},
                       "report");
  const SkillSet skills = parse_skills(doc);
  const NamedPopulation spread = parse_named_population(
      jsonio::require_present(doc, "spread", "report"), skills.size(), "report.spread");
  const NamedPopulation base = parse_named_population(
      jsonio::require_present(doc, "base", "report"), skills.size(), "report.base");
  require_equal_means(spread.population, base.population);

  const json& verdict = jsonio::require_present(doc, "verdict", "report");
  if (verdict == "dominates") {
    if (doc.contains("witness")) {
      throw std::invalid_argument("report: a dominance holds; witness firm must be absent");
    }
    Coupling coupling{base.population, spread.population,
                      parse_rational_matrix(jsonio::require_present(doc, "coupling", "report"),
                                            base.population.support_size(),
                                            spread.population.support_size(),
                                            "report.coupling")};
    try {
      verify_coupling(coupling);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("report.coupling: ") + e.what());
    }
    return;
  }
  if (verdict == "not_dominates") {
    if (doc.contains("coupling")) {
      throw std::invalid_argument("report: dominance fails; coupling must be absent");
    }
    const json& witness = jsonio::require_present(doc, "witness", "report");
    jsonio::require_keys(witness, {"tasks", "surplus_spread", "surplus_base"},
                         "report.witness");
    const Firm firm =
        jsonio::parse_firm_tasks(jsonio::require_present(witness, "tasks", "report.witness"),
                                 skills.size(), "report.witness.tasks");
    const Rational on_spread = jsonio::parse_rational_value(
        jsonio::require_present(witness, "surplus_spread", "report.witness"),
        "report.witness.surplus_spread");
    const Rational on_base = jsonio::parse_rational_value(
        jsonio::require_present(witness, "surplus_base", "report.witness"),
        "report.witness.surplus_base");
    if (expected_surplus(firm, spread.population) != on_spread) {
      throw std::invalid_argument("report.witness.surplus_spread does not recompute");
    }
    if (expected_surplus(firm, base.population) != on_base) {
      throw std::invalid_argument("report.witness.surplus_base does not recompute");
    }
    if (!(on_spread < on_base)) {
      throw std::invalid_argument("report.witness: claimed strict surplus gap does not hold");
    }
    return;
  }
  throw std::invalid_argument("report.verdict: not a dominance verdict: " + verdict.dump());
}

// Shared by classify and exante reports: which witnesses a verdict requires.
void check_witness_presence(const json& doc, Verdict verdict) {
  const bool has_first = doc.contains("witness_against_first");
  const bool has_second = doc.contains("witness_against_second");
  const bool want_first = verdict == Verdict::SystematicAgainstFirst ||
                          verdict == Verdict::Unsystematic;
  const bool want_second = verdict == Verdict::SystematicAgainstSecond ||
                           verdict == Verdict::Unsystematic;
  if (has_first != want_first || has_second != want_second) {
    throw std::invalid_argument(
        std::string("report: witnesses do not match the verdict ") + verdict_label(verdict));
  }
}

void verify_classify_witness(const json& witness, const std::string& where,
                             const SkillSet& skills, const Population& first,
                             const Population& second, bool against_first) {
  jsonio::require_keys(witness, {"tasks", "surplus_first", "surplus_second"}, where);
  const Firm firm = jsonio::parse_firm_tasks(jsonio::require_present(witness, "tasks", where),
                                             skills.size(), where + ".tasks");
  const Rational on_first =
      jsonio::parse_rational_value(jsonio::require_present(witness, "surplus_first", where),
                                   where + ".surplus_first");
  const Rational on_second =
      jsonio::parse_rational_value(jsonio::require_present(witness, "surplus_second", where),
                                   where + ".surplus_second");
  if (expected_surplus(firm, first) != on_first) {
    throw std::invalid_argument(where + ".surplus_first does not recompute");
  }
  if (expected_surplus(firm, second) != on_second) {
    throw std::invalid_argument(where + ".surplus_second does not recompute");
  }
  const bool strict = against_first ? on_first < on_second : on_second < on_first;
  if (!strict) {
    throw std::invalid_argument(where + ": claimed strict surplus gap does not hold");
  }
}

void verify_classify(const json& doc) {
  jsonio::require_keys(doc, {"command", "skills", "first", "second", "verdict",
                             "witness_against_first", "witness_against_second"},
                       "report");
  const SkillSet skills = parse_skills(doc);
  const NamedPopulation first = parse_named_population(
      jsonio::require_present(doc, "first", "report"), skills.size(), "report.first");
  const NamedPopulation second = parse_named_population(
      jsonio::require_present(doc, "second", "report"), skills.size(), "report.second");
  require_equal_means(first.population, second.population);
  const Verdict verdict =
      parse_verdict(jsonio::require_present(doc, "verdict", "report"), "report.verdict");
  check_witness_presence(doc, verdict);
  if (verdict == Verdict::NoDiscrimination && !(first.population == second.population)) {
    throw std::invalid_argument(
        "report: no_discrimination claimed for structurally distinct populations");
  }
  if (doc.contains("witness_against_first")) {
    verify_classify_witness(doc["witness_against_first"], "report.witness_against_first",
                            skills, first.population, second.population, true);
  }
  if (doc.contains("witness_against_second")) {
    verify_classify_witness(doc["witness_against_second"], "report.witness_against_second",
                            skills, first.population, second.population, false);
  }
}

void verify_exante_witness(const json& witness, const std::string& where,
                           const SkillSet& skills, const Population& first,
                           const Population& second, const Rational& cost,
                           bool against_first) {
  jsonio::require_keys(witness,
                       {"tasks", "alpha", "interview_value_first", "interview_value_second"},
                       where);
  const Firm tasks = jsonio::parse_firm_tasks(jsonio::require_present(witness, "tasks", where),
                                              skills.size(), where + ".tasks");
  const Rational alpha = jsonio::parse_rational_value(
      jsonio::require_present(witness, "alpha", where), where + ".alpha");
  const ExAnteFirm firm = [&] {
    try {
      return ExAnteFirm(tasks, alpha);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }();
  const Rational on_first = jsonio::parse_rational_value(
      jsonio::require_present(witness, "interview_value_first", where),
      where + ".interview_value_first");
  const Rational on_second = jsonio::parse_rational_value(
      jsonio::require_present(witness, "interview_value_second", where),
      where + ".interview_value_second");
  if (interview_value(firm, first) != on_first) {
    throw std::invalid_argument(where + ".interview_value_first does not recompute");
  }
  if (interview_value(firm, second) != on_second) {
    throw std::invalid_argument(where + ".interview_value_second does not recompute");
  }
  const Rational& excluded = against_first ? on_first : on_second;
  const Rational& interviewed = against_first ? on_second : on_first;
  if (!(excluded <= cost && cost < interviewed)) {
    throw std::invalid_argument(
        where + ": interview values do not separate the populations at the reported cost");
  }
}

void verify_hull_evidence(const json& value, const std::string& where,
                          const Population& contained, const Population& hull) {
  const std::vector<Belief> points = hull.support();
  const auto& atoms = contained.atoms();
  if (!value.is_array() || value.size() != atoms.size()) {
    throw std::invalid_argument(where + ": expected one coefficient row per support belief");
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    const std::vector<Rational> coeffs =
        jsonio::parse_rational_array(value[i], points.size(), row_where);
    Rational sum = 0;
    std::vector<Rational> combo(contained.dimension(), Rational(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] < 0) {
        throw std::invalid_argument(row_where + ": negative hull coefficient");
      }
      sum += coeffs[k];
      for (std::size_t theta = 0; theta < combo.size(); ++theta) {
        combo[theta] += coeffs[k] * points[k][theta];
      }
    }
    if (sum != 1) {
      throw std::invalid_argument(row_where + ": coefficients do not sum to 1");
    }
    for (std::size_t theta = 0; theta < combo.size(); ++theta) {
      if (combo[theta] != atoms[i].belief[theta]) {
        throw std::invalid_argument(row_where +
                                    ": combination does not reproduce the support belief");
      }
    }
  }
}

void verify_exante(const json& doc) {
  jsonio::require_keys(doc,
                       {"command", "skills", "regime", "cost", "first", "second", "verdict",
                        "witness_against_first", "witness_against_second", "n_equivalence"},
                       "report");
  const SkillSet skills = parse_skills(doc);
  const NamedPopulation first = parse_named_population(
      jsonio::require_present(doc, "first", "report"), skills.size(), "report.first");
  const NamedPopulation second = parse_named_population(
      jsonio::require_present(doc, "second", "report"), skills.size(), "report.second");
  require_equal_means(first.population, second.population);
  const Rational cost = jsonio::parse_rational_value(
      jsonio::require_present(doc, "cost", "report"), "report.cost");
  if (cost < 0) throw std::invalid_argument("report.cost: negative");
  const json& regime = jsonio::require_present(doc, "regime", "report");
  const bool zero_cost = cost == 0;
  if (regime != (zero_cost ? "zero_cost" : "costly")) {
    throw std::invalid_argument("report.regime: does not match the cost");
  }
  const Verdict verdict =
      parse_verdict(jsonio::require_present(doc, "verdict", "report"), "report.verdict");
  check_witness_presence(doc, verdict);
  if (verdict == Verdict::NoDiscrimination && !zero_cost &&
      !(first.population == second.population)) {
    throw std::invalid_argument(
        "report: no_discrimination at positive cost requires equal populations");
  }
  if (doc.contains("witness_against_first")) {
    verify_exante_witness(doc["witness_against_first"], "report.witness_against_first",
                          skills, first.population, second.population, cost, true);
  }
  if (doc.contains("witness_against_second")) {
    verify_exante_witness(doc["witness_against_second"], "report.witness_against_second",
                          skills, first.population, second.population, cost, false);
  }
  const bool want_evidence = zero_cost && verdict == Verdict::NoDiscrimination;
  if (doc.contains("n_equivalence") != want_evidence) {
    throw std::invalid_argument(
        "report.n_equivalence: present exactly when the zero-cost verdict is "
        "no_discrimination");
  }
  if (want_evidence) {
    const json& evidence = doc["n_equivalence"];
    jsonio::require_keys(evidence,
                         {"first_support_in_second_hull", "second_support_in_first_hull"},
                         "report.n_equivalence");
    verify_hull_evidence(jsonio::require_present(evidence, "first_support_in_second_hull",
                                                 "report.n_equivalence"),
                         "report.n_equivalence.first_support_in_second_hull",
                         first.population, second.population);
    verify_hull_evidence(jsonio::require_present(evidence, "second_support_in_first_hull",
                                                 "report.n_equivalence"),
                         "report.n_equivalence.second_support_in_first_hull",
                         second.population, first.population);
  }
}

void verify_report(const json& doc) {
  if (!doc.is_object()) {
    throw std::invalid_argument("report: expected a JSON object");
  }
  const json& command = jsonio::require_present(doc, "command", "report");
  if (command == "dominates") return verify_dominates(doc);
  if (command == "classify") return verify_classify(doc);
  if (command == "exante") return verify_exante(doc);
  throw std::invalid_argument("report.command: unknown command: " + command.dump());
}

// ---- builders ----------------------------------------------------------

json classify_witness_to_json(const Firm& firm, const Population& first,
                              const Population& second) {
  return json{{"tasks", jsonio::firm_tasks_to_json(firm)},
              {"surplus_first", jsonio::rational_to_json(expected_surplus(firm, first))},
              {"surplus_second", jsonio::rational_to_json(expected_surplus(firm, second))}};
}

json exante_witness_to_json(const ExAnteFirm& firm, const Population& first,
                            const Population& second) {
  return json{
      {"tasks", jsonio::firm_tasks_to_json(firm.firm())},
      {"alpha", jsonio::rational_to_json(firm.alpha())},
      {"interview_value_first", jsonio::rational_to_json(interview_value(firm, first))},
      {"interview_value_second", jsonio::rational_to_json(interview_value(firm, second))}};
}

json hull_evidence_to_json(const Population& contained, const Population& hull) {
  const std::vector<Belief> points = hull.support();
  json rows = json::array();
  for (const Atom& atom : contained.atoms()) {
    HullMembership membership = hull_membership(atom.belief, points);
    const auto* coefficients = std::get_if<HullCoefficients>(&membership);
    if (coefficients == nullptr) {
      throw std::logic_error("support belief left the hull while building evidence");
    }
    rows.push_back(jsonio::rational_array_to_json(coefficients->coefficients));
  }
  return rows;
}

Report finish(json doc) {
  verify_report(doc);
  return Report{std::move(doc)};
}

}  // namespace

Report make_dominates_report(const SkillSet& skills, const std::string& spread_name,
                             const Population& spread, const std::string& base_name,
                             const Population& base, const DominanceResult& result) {
  json doc;
  doc["command"] = "dominates";
  doc["skills"] = skills.labels();
  doc["spread"] = named_population_to_json(spread_name, spread);
  doc["base"] = named_population_to_json(base_name, base);
  if (const auto* coupling = std::get_if<Coupling>(&result)) {
    doc["verdict"] = "dominates";
    doc["coupling"] = rational_matrix_to_json(coupling->weights);
  } else {
    doc["verdict"] = "not_dominates";
    const Firm firm = extract_discriminating_firm(std::get<lp::FarkasCertificate>(result),
                                                  base, spread);
    doc["witness"] =
        json{{"tasks", jsonio::firm_tasks_to_json(firm)},
             {"surplus_spread", jsonio::rational_to_json(expected_surplus(firm, spread))},
             {"surplus_base", jsonio::rational_to_json(expected_surplus(firm, base))}};
  }
  return finish(std::move(doc));
}

Report make_classify_report(const SkillSet& skills, const std::string& first_name,
                            const Population& first, const std::string& second_name,
                            const Population& second, const Classification& classification) {
  json doc;
  doc["command"] = "classify";
  doc["skills"] = skills.labels();
  doc["first"] = named_population_to_json(first_name, first);
  doc["second"] = named_population_to_json(second_name, second);
  doc["verdict"] = verdict_label(classification.verdict);
  if (classification.witness_against_first) {
    doc["witness_against_first"] =
        classify_witness_to_json(*classification.witness_against_first, first, second);
  }
  if (classification.witness_against_second) {
    doc["witness_against_second"] =
        classify_witness_to_json(*classification.witness_against_second, first, second);
  }
  return finish(std::move(doc));
}

Report make_exante_report(const SkillSet& skills, const std::string& first_name,
                          const Population& first, const std::string& second_name,
                          const Population& second, const Rational& cost,
                          const ExAnteClassification& classification) {
  json doc;
  doc["command"] = "exante";
  doc["skills"] = skills.labels();
  doc["regime"] = cost == 0 ? "zero_cost" : "costly";
  doc["cost"] = jsonio::rational_to_json(cost);
  doc["first"] = named_population_to_json(first_name, first);
  doc["second"] = named_population_to_json(second_name, second);
  doc["verdict"] = verdict_label(classification.verdict);
  if (classification.witness_against_first) {
    doc["witness_against_first"] =
        exante_witness_to_json(*classification.witness_against_first, first, second);
  }
  if (classification.witness_against_second) {
    doc["witness_against_second"] =
        exante_witness_to_json(*classification.witness_against_second, first, second);
  }
  if (cost == 0 && classification.verdict == Verdict::NoDiscrimination) {
    doc["n_equivalence"] =
        json{{"first_support_in_second_hull", hull_evidence_to_json(first, second)},
             {"second_support_in_first_hull", hull_evidence_to_json(second, first)}};
  }
  return finish(std::move(doc));
}

std::string emit_report(const Report& report) {
  return report.doc.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("report is not valid JSON: ") + e.what());
  }
  verify_report(doc);
  return Report{std::move(doc)};
}

// ---- text rendering ------------------------------------------------------

namespace {

// Values in a verified report may be rational strings or JSON integers;
// normalize both to canonical text.
std::string value_text(const json& value) {
  return to_string(jsonio::parse_rational_value(value, "report"));
}

std::string belief_text(const json& probs) {
  std::vector<Rational> values;
  for (const auto& p : probs) values.push_back(jsonio::parse_rational_value(p, "report"));
  return format_vector(values);
}

void render_population(std::ostream& out, const json& named) {
  out << "population " << named["name"].get<std::string>() << ":";
  for (const auto& atom : named["atoms"]) {
    out << " " << belief_text(atom["belief"]) << " with weight "
        << value_text(atom["weight"]) << ";";
  }
  out << "\n";
}

void render_tasks(std::ostream& out, const json& tasks, const std::string& indent) {
  for (const auto& task : tasks) {
    out << indent << "task " << belief_text(task) << "\n";
  }
}

void render_dominates(std::ostream& out, const json& doc) {
  const std::string spread = doc["spread"]["name"].get<std::string>();
  const std::string base = doc["base"]["name"].get<std::string>();
  out << "dominance check: is " << spread << " a mean-preserving spread of " << base
      << "?\n";
  render_population(out, doc["spread"]);
  render_population(out, doc["base"]);
  if (doc["verdict"] == "dominates") {
    out << "verdict: dominates\n";
    out << "coupling (rows: atoms of " << base << ", columns: atoms of " << spread
        << "):\n";
    for (const auto& row : doc["coupling"]) {
      out << " ";
      for (const auto& cell : row) out << " " << value_text(cell);
      out << "\n";
    }
  } else {
    out << "verdict: not_dominates\n";
    const json& witness = doc["witness"];
    out << "witness firm with strictly higher surplus on " << base << ":\n";
    render_tasks(out, witness["tasks"], "  ");
    out << "  surplus on " << spread << ": " << value_text(witness["surplus_spread"])
        << "\n";
    out << "  surplus on " << base << ": " << value_text(witness["surplus_base"])
        << "\n";
  }
}

void render_classify_witness(std::ostream& out, const json& doc, const char* key,
                             const std::string& against) {
  if (!doc.contains(key)) return;
  const json& witness = doc[key];
  out << "witness firm discriminating against " << against << ":\n";
  render_tasks(out, witness["tasks"], "  ");
  out << "  surplus on " << doc["first"]["name"].get<std::string>() << ": "
      << value_text(witness["surplus_first"]) << "\n";
  out << "  surplus on " << doc["second"]["name"].get<std::string>() << ": "
      << value_text(witness["surplus_second"]) << "\n";
}

void render_classify(std::ostream& out, const json& doc) {
  const std::string first = doc["first"]["name"].get<std::string>();
  const std::string second = doc["second"]["name"].get<std::string>();
  out << "classification: " << first << " vs " << second << "\n";
  render_population(out, doc["first"]);
  render_population(out, doc["second"]);
  std::string verdict = doc["verdict"].get<std::string>();
  if (verdict == "systematic_against_first") verdict = "systematic_against_first (" + first + ")";
  if (verdict == "systematic_against_second") {
    verdict = "systematic_against_second (" + second + ")";
  }
  out << "verdict: " << verdict << "\n";
  render_classify_witness(out, doc, "witness_against_first", first);
  render_classify_witness(out, doc, "witness_against_second", second);
}

void render_exante_witness(std::ostream& out, const json& doc, const char* key,
                           const std::string& against, const std::string& other,
                           bool against_first) {
  if (!doc.contains(key)) return;
  const json& witness = doc[key];
  const std::string cost = value_text(doc["cost"]);
  const std::string value_against =
      value_text(witness[against_first ? "interview_value_first" : "interview_value_second"]);
  const std::string value_other =
      value_text(witness[against_first ? "interview_value_second" : "interview_value_first"]);
  out << "excluding firm against " << against << " (alpha "
      << value_text(witness["alpha"]) << "):\n";
  render_tasks(out, witness["tasks"], "  ");
  out << "  interview value on " << against << ": " << value_against << " <= cost " << cost
      << " (excluded)\n";
  out << "  interview value on " << other << ": " << value_other << " > cost " << cost
      << " (interviewed)\n";
}

void render_exante(std::ostream& out, const json& doc) {
  const std::string first = doc["first"]["name"].get<std::string>();
  const std::string second = doc["second"]["name"].get<std::string>();
  const bool zero_cost = doc["regime"] == "zero_cost";
  out << "ex-ante classification: " << first << " vs " << second << "\n";
  out << "cost: " << value_text(doc["cost"])
      << (zero_cost ? " (N-order regime)" : "") << "\n";
  render_population(out, doc["first"]);
  render_population(out, doc["second"]);
  std::string verdict = doc["verdict"].get<std::string>();
  if (zero_cost && verdict == "no_discrimination") {
    out << "verdict: no_ex_ante_discrimination (N-equivalent)\n";
    out << "each population's support lies in the other's support hull; "
           "coefficients are in the machine-readable report\n";
    return;
  }
  if (verdict == "systematic_against_first") verdict = "systematic_against_first (" + first + ")";
  if (verdict == "systematic_against_second") {
    verdict = "systematic_against_second (" + second + ")";
  }
  out << "verdict: " << (zero_cost ? verdict + " (zero-cost order)" : verdict) << "\n";
  render_exante_witness(out, doc, "witness_against_first", first, second, true);
  render_exante_witness(out, doc, "witness_against_second", second, first, false);
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  const json& doc = report.doc;
  if (doc["command"] == "dominates") {
    render_dominates(out, doc);
  } else if (doc["command"] == "classify") {
    render_classify(out, doc);
  } else {
    render_exante(out, doc);
  }
  return out.str();
}

}  // namespace discrim
