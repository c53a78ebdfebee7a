#include "mira/rational.hpp"

#include <cctype>

namespace mira {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    long long n = std::stoll(s.substr(0, slash));
    long long d = std::stoll(s.substr(slash + 1));
    return Rational(n, d);
  }

  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(std::stoll(s));

  // decimal literal: expand digits exactly
  std::string head = s.substr(0, dot);
  std::string frac = s.substr(dot + 1);
  bool neg = !head.empty() && head[0] == '-';
  if (neg || (!head.empty() && head[0] == '+')) head.erase(0, 1);
  for (char c : head + frac)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
  long long den = 1;
  for (size_t i = 0; i < frac.size(); ++i) {
    if (den > INT64_MAX / 10)
      throw std::overflow_error("Rational::parse: too many decimal digits");
    den *= 10;
  }
  long long num = (head + frac).empty() ? 0 : std::stoll(head + frac);
  return Rational(neg ? -num : num, den);
}

}  // namespace mira
