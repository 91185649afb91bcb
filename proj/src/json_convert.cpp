#include "json_convert.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace discrim::jsonio {

std::string type_name(const json& value) {
  return value.type_name();
}

Rational parse_rational_value(const json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
  if (value.is_number_unsigned()) {
    return Rational(Integer(value.get<std::uint64_t>()));
  }
  if (value.is_number_integer()) {
    return Rational(Integer(value.get<std::int64_t>()));
  }
  if (value.is_number_float()) {
    throw std::invalid_argument(where +
                                ": floating-point numbers are not accepted; "
                                "write the value as a rational string");
  }
  throw std::invalid_argument(where + ": expected a rational string or integer, got " +
                              type_name(value));
}

json rational_to_json(const Rational& value) {
  return json(to_string(value));
}

std::vector<Rational> parse_rational_array(const json& value, std::size_t expected,
                                           const std::string& where) {
  if (!value.is_array()) {
    throw std::invalid_argument(where + ": expected an array, got " + type_name(value));
  }
  if (value.size() != expected) {
    throw std::invalid_argument(where + ": expected " + std::to_string(expected) +
                                " entries, got " + std::to_string(value.size()));
  }
  std::vector<Rational> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(parse_rational_value(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json rational_array_to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

Population parse_population(const json& value, std::size_t dimension,
                            const std::string& where) {
  if (!value.is_array()) {
    throw std::invalid_argument(where + ": expected an array of atoms, got " +
                                type_name(value));
  }
  std::vector<Atom> atoms;
  atoms.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string atom_where = where + "[" + std::to_string(i) + "]";
    const json& atom = value[i];
    if (!atom.is_object()) {
      throw std::invalid_argument(atom_where + ": expected an object, got " +
                                  type_name(atom));
    }
    require_keys(atom, {"belief", "weight"}, atom_where);
    std::vector<Rational> probs = parse_rational_array(
        require_present(atom, "belief", atom_where), dimension, atom_where + ".belief");
    Rational weight =
        parse_rational_value(require_present(atom, "weight", atom_where), atom_where + ".weight");
    try {
      atoms.push_back({Belief(std::move(probs)), std::move(weight)});
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(atom_where + ": " + e.what());
    }
  }
  try {
    return Population(std::move(atoms));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
}

json population_to_json(const Population& population) {
  json out = json::array();
  for (const Atom& atom : population.atoms()) {
    out.push_back(json{{"belief", rational_array_to_json(atom.belief.probs())},
                       {"weight", rational_to_json(atom.weight)}});
  }
  return out;
}

Firm parse_firm_tasks(const json& value, std::size_t dimension, const std::string& where) {
  if (!value.is_array()) {
    throw std::invalid_argument(where + ": expected an array of tasks, got " +
                                type_name(value));
  }
  std::vector<std::vector<Rational>> tasks;
  tasks.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    tasks.push_back(
        parse_rational_array(value[i], dimension, where + "[" + std::to_string(i) + "]"));
  }
  try {
    return Firm(std::move(tasks));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
}

json firm_tasks_to_json(const Firm& firm) {
  json out = json::array();
  for (const auto& task : firm.tasks()) out.push_back(rational_array_to_json(task));
  return out;
}

void require_keys(const json& object, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  for (const auto& item : object.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* key) {
      return item.key() == key;
    });
    if (!known) {
      throw std::invalid_argument(where + ": unknown field \"" + item.key() + "\"");
    }
  }
}

const json& require_present(const json& object, const char* key, const std::string& where) {
  const auto it = object.find(key);
  if (it == object.end()) {
    throw std::invalid_argument(where + ": missing required field \"" + std::string(key) +
                                "\"");
  }
  return *it;
}

}  // namespace discrim::jsonio
