#include "ttour/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ttour {

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) {
    return false;
  }
  for (const char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) == 0) {
      return false;
    }
  }
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') {
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view numerator = body.substr(0, slash);
  const std::string_view denominator =
    slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(numerator) || !all_digits(denominator)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Rational value;
  value.get_num() = mpz_class(std::string(numerator));
  value.get_den() = mpz_class(std::string(denominator));
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  value.canonicalize();
  if (text.front() == '-') {
    value = -value;
  }
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

} // namespace ttour
