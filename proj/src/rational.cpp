#include "homalg/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace homalg {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  // mpq_class accepts "p/q" directly but tolerates whitespace and leading
  // zeros inconsistently across inputs; validate the shape ourselves.
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string text(s);
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) throw std::invalid_argument("Rational: bad integer '" + text + "'");
  } else {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
      throw std::invalid_argument("Rational: bad fraction '" + text + "'");
  }
  // GMP rejects explicit plus signs; drop them after validation.
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  slash = text.find('/');
  if (slash != std::string::npos && slash + 1 < text.size() && text[slash + 1] == '+')
    text.erase(slash + 1, 1);
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw std::invalid_argument("Rational: unparsable '" + text + "'");
  if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
  v.canonicalize();
  Rational r;
  r.v_ = std::move(v);
  return r;
}

std::string Rational::str() const {
  return v_.get_str();  // canonical "p/q" or "p"
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace homalg
