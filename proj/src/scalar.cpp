#include "algd/scalar.hpp"

namespace algd {

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const mpq_class& q) {
  return q.get_str();  // mpq_class keeps values canonicalized as "p" or "p/q"
}

}  // namespace algd
