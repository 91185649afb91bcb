#pragma once
// JSON <-> domain-type conversion helpers shared by the scenario and report
// serializers. All errors are std::invalid_argument carrying the JSON path
// of the offending value. Only rational strings and JSON integers are
// accepted as numbers; floats would silently destroy exactness.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "discrim/core.hpp"
#include "json.hpp"

namespace discrim::jsonio {

using nlohmann::json;

Rational parse_rational_value(const json& value, const std::string& where);
json rational_to_json(const Rational& value);

std::vector<Rational> parse_rational_array(const json& value, std::size_t expected,
                                           const std::string& where);
json rational_array_to_json(const std::vector<Rational>& values);

Population parse_population(const json& value, std::size_t dimension,
                            const std::string& where);
json population_to_json(const Population& population);

Firm parse_firm_tasks(const json& value, std::size_t dimension, const std::string& where);
json firm_tasks_to_json(const Firm& firm);

/// Rejects keys outside the allowed set.
void require_keys(const json& object, std::initializer_list<const char*> allowed,
                  const std::string& where);
/// Rejects objects missing the key.
const json& require_present(const json& object, const char* key, const std::string& where);

std::string type_name(const json& value);

}  // namespace discrim::jsonio
