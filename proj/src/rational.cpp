#include "discrim/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace discrim {

namespace {

bool all_digits(const std::string& s, std::size_t begin, std::size_t end) {
  if (begin >= end) return false;
  for (std::size_t i = begin; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational: \"" + text + "\"");
  };

  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  const std::size_t slash = text.find('/', pos);
  std::string num_digits;
  std::string den_digits = "1";
  if (slash == std::string::npos) {
    if (!all_digits(text, pos, text.size())) return fail();
    num_digits = text.substr(pos);
  } else {
    if (!all_digits(text, pos, slash)) return fail();
    if (!all_digits(text, slash + 1, text.size())) return fail();
    num_digits = text.substr(pos, slash - pos);
    den_digits = text.substr(slash + 1);
  }

  Integer num(num_digits);
  Integer den(den_digits);
  if (den == 0) fail();
  if (negative) num = -num;
  // Division canonicalizes (lowest terms, sign on the numerator).
  return Rational(num) / Rational(den);
}

std::string to_string(const Rational& value) { return value.str(); }

std::string format_vector(const std::vector<Rational>& values) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ", ";
    out << values[i].str();
  }
  out << ')';
  return out.str();
}

}  // namespace discrim
