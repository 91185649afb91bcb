#pragma once
// Small builders so test fixtures read like the math they encode.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "discrim/core.hpp"
#include "discrim/rational.hpp"

namespace testsupport {

inline discrim::Rational Q(const std::string& text) { return discrim::parse_rational(text); }

inline std::vector<discrim::Rational> rvec(std::initializer_list<const char*> entries) {
  std::vector<discrim::Rational> out;
  out.reserve(entries.size());
  for (const char* e : entries) out.push_back(Q(e));
  return out;
}

inline discrim::Belief bel(std::initializer_list<const char*> probs) {
  return discrim::Belief(rvec(probs));
}

inline discrim::Atom atom(std::initializer_list<const char*> probs, const char* weight) {
  return discrim::Atom{bel(probs), Q(weight)};
}

inline discrim::Population pop(std::vector<discrim::Atom> atoms) {
  return discrim::Population(std::move(atoms));
}

inline discrim::Firm firm(std::initializer_list<std::initializer_list<const char*>> tasks) {
  std::vector<std::vector<discrim::Rational>> rows;
  rows.reserve(tasks.size());
  for (const auto& task : tasks) rows.push_back(rvec(task));
  return discrim::Firm(std::move(rows));
}

// Point mass at the uniform belief: the no-information population.
inline discrim::Population uniform_delta() {
  return pop({atom({"1/2", "1/2"}, "1")});
}

// Half the workers at each vertex: the full-information population.
inline discrim::Population full_split() {
  return pop({atom({"1", "0"}, "1/2"), atom({"0", "1"}, "1/2")});
}

// Mildly informative two-atom population with mean (1/2, 1/2).
inline discrim::Population mild_split() {
  return pop({atom({"3/4", "1/4"}, "1/2"), atom({"1/4", "3/4"}, "1/2")});
}

// Even milder two-atom population with the same mean, dominated by mild_split.
inline discrim::Population milder_split() {
  return pop({atom({"2/3", "1/3"}, "1/2"), atom({"1/3", "2/3"}, "1/2")});
}

// The two populations of the incomparable (unsystematic) example: neither is
// a spread of the other, both have mean (1/2, 1/2).
inline discrim::Population narrow_pair() {
  return pop({atom({"1/10", "9/10"}, "1/2"), atom({"9/10", "1/10"}, "1/2")});
}

inline discrim::Population wide_trio() {
  return pop({atom({"1", "0"}, "1/4"), atom({"1/2", "1/2"}, "1/2"), atom({"0", "1"}, "1/4")});
}

}  // namespace testsupport
