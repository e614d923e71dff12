#include "eqg/rational.hpp"

#include <stdexcept>

namespace eqg {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("malformed rational '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace eqg
