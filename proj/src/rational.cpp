#include "superw/rational.hpp"

namespace superw {

Rational rationalFromString(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  }
  q.canonicalize();
  return q;
}

std::string rationalToString(const Rational& value) {
  return value.get_str();
}

} // namespace superw
