#include "discrim/scenario.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "json_convert.hpp"

namespace discrim {

namespace {

using jsonio::json;

std::string population_name_or_throw(const json& value, const Scenario& scenario,
                                     const std::string& where) {
  if (!value.is_string()) {
    throw std::invalid_argument(where + ": expected a population name, got " +
                                jsonio::type_name(value));
  }
  const std::string name = value.get<std::string>();
  if (!scenario.populations.contains(name)) {
    throw std::invalid_argument(where + ": no population named \"" + name + "\"");
  }
  return name;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("scenario: expected a JSON object, got " +
                                jsonio::type_name(doc));
  }
  jsonio::require_keys(doc, {"skills", "populations", "firms", "cost", "ground_truth"},
                       "scenario");

  const json& skills_json = jsonio::require_present(doc, "skills", "scenario");
  if (!skills_json.is_array()) {
    throw std::invalid_argument("scenario.skills: expected an array of labels, got " +
                                jsonio::type_name(skills_json));
  }
  std::vector<std::string> labels;
  labels.reserve(skills_json.size());
  for (std::size_t i = 0; i < skills_json.size(); ++i) {
    if (!skills_json[i].is_string()) {
      throw std::invalid_argument("scenario.skills[" + std::to_string(i) +
                                  "]: expected a string label");
    }
    labels.push_back(skills_json[i].get<std::string>());
  }
  SkillSet skills = [&] {
    try {
      return SkillSet(std::move(labels));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("scenario.skills: ") + e.what());
    }
  }();
  const std::size_t dim = skills.size();
  Scenario scenario{std::move(skills), {}, {}, std::nullopt, std::nullopt};

  const json& pops_json = jsonio::require_present(doc, "populations", "scenario");
  if (!pops_json.is_object()) {
    throw std::invalid_argument("scenario.populations: expected an object, got " +
                                jsonio::type_name(pops_json));
  }
  for (const auto& item : pops_json.items()) {
    scenario.populations.emplace(
        item.key(),
        jsonio::parse_population(item.value(), dim, "scenario.populations." + item.key()));
  }

  if (const auto it = doc.find("firms"); it != doc.end()) {
    if (!it->is_object()) {
      throw std::invalid_argument("scenario.firms: expected an object, got " +
                                  jsonio::type_name(*it));
    }
    for (const auto& item : it->items()) {
      const std::string where = "scenario.firms." + item.key();
      const json& firm_json = item.value();
      if (!firm_json.is_object()) {
        throw std::invalid_argument(where + ": expected an object, got " +
                                    jsonio::type_name(firm_json));
      }
      jsonio::require_keys(firm_json, {"tasks", "alpha"}, where);
      Firm tasks = jsonio::parse_firm_tasks(jsonio::require_present(firm_json, "tasks", where),
                                            dim, where + ".tasks");
      Rational alpha(1);
      if (const auto alpha_it = firm_json.find("alpha"); alpha_it != firm_json.end()) {
        alpha = jsonio::parse_rational_value(*alpha_it, where + ".alpha");
      }
      try {
        scenario.firms.emplace(item.key(), ExAnteFirm(std::move(tasks), std::move(alpha)));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where + ": " + e.what());
      }
    }
  }

  if (const auto it = doc.find("cost"); it != doc.end()) {
    scenario.cost = jsonio::parse_rational_value(*it, "scenario.cost");
  }

  if (const auto it = doc.find("ground_truth"); it != doc.end()) {
    const std::string where = "scenario.ground_truth";
    if (!it->is_object()) {
      throw std::invalid_argument(where + ": expected an object, got " +
                                  jsonio::type_name(*it));
    }
    jsonio::require_keys(*it, {"base", "spread", "degenerate", "independent"}, where);
    GroundTruth truth;
    truth.base = population_name_or_throw(jsonio::require_present(*it, "base", where),
                                          scenario, where + ".base");
    truth.spread = population_name_or_throw(jsonio::require_present(*it, "spread", where),
                                            scenario, where + ".spread");
    truth.independent = population_name_or_throw(
        jsonio::require_present(*it, "independent", where), scenario, where + ".independent");
    const json& degenerate = jsonio::require_present(*it, "degenerate", where);
    if (!degenerate.is_boolean()) {
      throw std::invalid_argument(where + ".degenerate: expected a boolean, got " +
                                  jsonio::type_name(degenerate));
    }
    truth.degenerate = degenerate.get<bool>();
    scenario.ground_truth = std::move(truth);
  }

  return scenario;
}

std::string emit_scenario(const Scenario& scenario) {
  json doc;
  doc["skills"] = scenario.skills.labels();
  json pops = json::object();
  for (const auto& [name, population] : scenario.populations) {
    pops[name] = jsonio::population_to_json(population);
  }
  doc["populations"] = std::move(pops);
  if (!scenario.firms.empty()) {
    json firms = json::object();
    for (const auto& [name, firm] : scenario.firms) {
      firms[name] = json{{"alpha", jsonio::rational_to_json(firm.alpha())},
                         {"tasks", jsonio::firm_tasks_to_json(firm.firm())}};
    }
    doc["firms"] = std::move(firms);
  }
  if (scenario.cost) {
    doc["cost"] = jsonio::rational_to_json(*scenario.cost);
  }
  if (scenario.ground_truth) {
    doc["ground_truth"] = json{{"base", scenario.ground_truth->base},
                               {"spread", scenario.ground_truth->spread},
                               {"degenerate", scenario.ground_truth->degenerate},
                               {"independent", scenario.ground_truth->independent}};
  }
  return doc.dump(2) + "\n";
}

const Population& find_population(const Scenario& scenario, const std::string& name) {
  const auto it = scenario.populations.find(name);
  if (it != scenario.populations.end()) return it->second;
  std::string available;
  for (const auto& [known, population] : scenario.populations) {
    (void)population;
    if (!available.empty()) available += ", ";
    available += known;
  }
  throw std::invalid_argument("no population named \"" + name + "\" in the scenario" +
                              (available.empty() ? "" : "; available: " + available));
}

}  // namespace discrim
