#include "hsec/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hsec {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    std::size_t i = 0;
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
    t.erase(0, i);
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = s.find('/');
  auto check_digits = [&](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) throw std::invalid_argument("malformed rational: " + s);
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw std::invalid_argument("malformed rational: " + s);
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  check_digits(num, true);
  check_digits(den, false);
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace hsec
